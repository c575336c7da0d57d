#include "mocklab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace mocklab {

namespace {

bool finite(const Real& x) { return boost::multiprecision::isfinite(x); }

}  // namespace

void IdentityReport::finalize() {
  max_abs = Real(0);
  all_pass = true;
  for (const auto& e : entries) {
    all_pass = all_pass && e.pass;
    if (finite(e.abs_residual)) {
      max_abs = std::max(max_abs, e.abs_residual);
    }
  }
}

IdentityEntry error_entry(std::string label, const Complex& point, std::string kind,
                          const std::string& message) {
  IdentityEntry e;
  e.label = std::move(label);
  e.point = point;
  e.point_kind = std::move(kind);
  const Real nan(std::numeric_limits<double>::quiet_NaN());
  e.abs_residual = nan;
  e.rel_residual = nan;
  e.budget = nan;
  e.tolerance = nan;
  e.pass = false;
  e.error = message;
  return e;
}

std::string render_real(const Real& x, unsigned digits) {
  if (boost::multiprecision::isnan(x)) {
    return "nan";
  }
  if (boost::multiprecision::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  return to_decimal(x, digits);
}

std::string to_json(const IdentityReport& r, unsigned digits) {
  using nlohmann::ordered_json;
  auto real = [&](const Real& x) -> ordered_json {
    if (!finite(x)) {
      return nullptr;
    }
    return render_real(x, digits);
  };
  ordered_json doc;
  doc["identity"] = r.identity;
  doc["prec_bits"] = r.prec_bits;
  doc["eps"] = r.eps;
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json j;
    j["label"] = e.label;
    j["point"] = {{"kind", e.point_kind}, {"re", real(e.point.re)}, {"im", real(e.point.im)}};
    j["abs_residual"] = real(e.abs_residual);
    j["rel_residual"] = real(e.rel_residual);
    j["budget"] = real(e.budget);
    j["tolerance"] = real(e.tolerance);
    j["pass"] = e.pass;
    if (e.error) {
      j["error"] = *e.error;
    }
    if (!e.detail.empty()) {
      ordered_json d;
      for (const auto& [k, v] : e.detail) {
        d[k] = v;
      }
      j["detail"] = d;
    }
    entries.push_back(std::move(j));
  }
  doc["entries"] = std::move(entries);
  doc["max_abs"] = real(r.max_abs);
  doc["all_pass"] = r.all_pass;
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : r.metadata) {
    meta[k] = v;
  }
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

}  // namespace mocklab
