// Acceptance gate: one PASS/FAIL line per criterion at the reference
// configuration (256 bits, eps 1e-40).
//
// usage: acceptance <path-to-mocklab> <work-dir>

#include "mocklab/mocklab.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace mocklab;
using nlohmann::json;

namespace {

// Thresholds, fixed.
constexpr double kMf5Matrix = 1e-20;
constexpr double kMf5Scalar = 1e-20;
constexpr double kLConsistency = 1e-20;
constexpr double kMf5RuntimeSeconds = 300.0;
constexpr double kPv = 1e-15;
constexpr double kStokesExtrapolated = 1e-8;
constexpr double kMf3 = 1e-20;
constexpr double kMf3Alternative = 1e-15;
constexpr double kEtaTheta = 1e-25;
constexpr double kGroup = 1e-30;
constexpr double kWronskian = 1e-20;
constexpr double kGrowthRatio = 2.0;
constexpr double kOracle = 1e-35;
constexpr int kOracleDegree = 40;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& measured) {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << measured << "\n";
  if (!pass) {
    ++failures;
  }
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double num(const json& v) {
  if (v.is_null()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::stod(v.get<std::string>());
}

/// Max |residual| over matching entries; NaN (error entries) poisons the max.
struct Scan {
  double max_abs = 0.0;
  std::size_t count = 0;
  bool all_pass = true;

  void add(double abs, bool pass) {
    ++count;
    all_pass = all_pass && pass;
    if (std::isnan(abs) || std::isnan(max_abs)) {
      max_abs = std::numeric_limits<double>::quiet_NaN();
    } else {
      max_abs = std::max(max_abs, abs);
    }
  }
  [[nodiscard]] bool below(double t) const { return count > 0 && all_pass && max_abs < t; }
  [[nodiscard]] std::string str(double t) const {
    return "max " + sci(max_abs) + " < " + sci(t) + " over " + std::to_string(count) + " entries";
  }
};

Scan scan(const std::vector<IdentityEntry>& es, const std::function<bool(const IdentityEntry&)>& keep) {
  Scan s;
  for (const auto& e : es) {
    if (keep(e)) {
      s.add(static_cast<double>(e.abs_residual), e.pass);
    }
  }
  return s;
}

Scan scan(const json& doc, const std::function<bool(const json&)>& keep) {
  Scan s;
  for (const auto& e : doc.at("entries")) {
    if (keep(e)) {
      s.add(num(e.at("abs_residual")), e.at("pass").get<bool>());
    }
  }
  return s;
}

bool at_point(const json& e, double re, double im) {
  return std::abs(num(e.at("point").at("re")) - re) < 1e-12 &&
         std::abs(num(e.at("point").at("im")) - im) < 1e-12;
}

std::string detail(const json& e, const std::string& key) {
  if (e.contains("detail") && e.at("detail").contains(key)) {
    return e.at("detail").at(key).get<std::string>();
  }
  return "";
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const std::string& exe, const std::string& args) {
  const std::string cmd = "\"" + exe + "\" " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <mocklab> <work-dir>\n";
    return 2;
  }
  const std::string exe = argv[1];
  const std::string work = argv[2];
  const PrecisionContext ctx = PrecisionContext::with_default_eps(256);
  PrecisionScope scope(ctx);
  const double pi_d = static_cast<double>(pi());

  // 1-3: order-5 suite in process, timed.
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityReport mf5 = run_suite(Suite::mf5, {}, ctx);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const Scan c1 = scan(mf5.entries, [](const IdentityEntry& e) { return e.label == "mf5_matrix"; });
  report(1, "mf5 matrix law on the default alpha grid", c1.below(kMf5Matrix) && c1.count == 6 &&
                                                            seconds < kMf5RuntimeSeconds,
         c1.str(kMf5Matrix) + ", suite runtime " + std::to_string(seconds) + " s");
  const Scan c2 = scan(mf5.entries, [](const IdentityEntry& e) { return e.label.starts_with("mf5_scalar"); });
  report(2, "mf5 scalar laws (both displays)", c2.below(kMf5Scalar) && c2.count == 12, c2.str(kMf5Scalar));
  const Scan c3 = scan(mf5.entries, [](const IdentityEntry& e) { return e.label.starts_with("lvec_"); });
  const Scan c3f = scan(mf5.entries, [](const IdentityEntry& e) { return e.label == "lvec_fixed_point"; });
  report(3, "L-vector modular consistency and (1 - M) L(pi) = 0",
         c3.below(kLConsistency) && c3.count == 7 && c3f.count == 1,
         c3.str(kLConsistency) + ", fixed point " + sci(c3f.max_abs));

  // 4: principal-value identity.
  {
    Scan s;
    for (const char* a : {"0", "0.3", "0.7"}) {
      for (const char* p : {"1", "1.5"}) {
        for (const char* t : {"0.3", "0.8", "2"}) {
          try {
            const Real quad = pv_quadrature(real_from_string(a), real_from_string(p), real_from_string(t), ctx);
            const Complex sum = pv_sum(real_from_string(a), real_from_string(p),
                                       Complex(real_from_string(t)), ctx);
            s.add(static_cast<double>(abs(Complex(quad) - sum)), true);
          } catch (const Error& e) {
            s.add(std::numeric_limits<double>::quiet_NaN(), false);
          }
        }
      }
    }
    report(4, "principal-value identity on the (a, p, t) grid", s.below(kPv) && s.count == 18, s.str(kPv));
  }

  // Full report through the command-line tool, twice.
  const std::string out1 = work + "/acceptance_all_1.json";
  const std::string out2 = work + "/acceptance_all_2.json";
  const int rc1 = run_cli(exe, "verify --suite all --prec 256 --out \"" + out1 + "\"");
  const int rc2 = run_cli(exe, "verify --suite all --prec 256 --out \"" + out2 + "\"");
  const std::string text1 = slurp(out1);
  json doc;
  try {
    doc = json::parse(text1);
  } catch (const json::exception& e) {
    std::cout << "FAIL  verify --suite all produced no report (exit " << rc1 << ")\n";
    return 1;
  }

  // 5: Stokes decomposition.
  {
    const Scan s = scan(doc, [](const json& e) {
      const std::string l = e.at("label").get<std::string>();
      return l == "stokes_real" || l == "stokes_imag";
    });
    const Scan mono = scan(doc, [](const json& e) { return e.at("label") == "stokes_monotone"; });
    const Scan sign = scan(doc, [](const json& e) { return e.at("label") == "stokes_sign_consistency"; });
    bool moduli_ok = true;
    std::string rows;
    std::string info;
    for (const auto& e : doc.at("entries")) {
      if (e.at("label") == "stokes_real") {
        const double A = num(e.at("point").at("re"));
        moduli_ok = moduli_ok && (std::abs(A - 1) < 1e-12 || std::abs(A - pi_d) < 1e-12);
        rows += " |alpha|=" + sci(A) + " lateral residuals " + detail(e, "lateral_residuals") + ";";
        info += "INFO  Stokes literal prefactor ratio at |alpha|=" + sci(A) + ": " + detail(e, "literal_ratio") +
                " vs (1.5 e^{-|alpha|/30}, 1.5 e^{-49|alpha|/30}) = " + sci(1.5 * std::exp(-A / 30)) + "," +
                sci(1.5 * std::exp(-49 * A / 30)) + "\n";
      }
    }
    std::string side;
    for (const auto& e : doc.at("entries")) {
      if (e.at("label") == "stokes_sign_consistency") {
        side = detail(e, "matched_side");
      }
    }
    report(5, "Stokes decomposition at |alpha| in {1, pi}",
           s.below(kStokesExtrapolated) && s.count == 4 && mono.count == 2 && mono.all_pass &&
               sign.count == 1 && sign.all_pass && moduli_ok,
           "extrapolated " + s.str(kStokesExtrapolated) + ", monotone " + (mono.all_pass ? "yes" : "no") +
               ", matched side " + side + ";" + rows);
    std::cout << info;
  }

  // 6: order-3 laws on {pi, 1, 2, 1 + 0.4i}.
  {
    auto on_grid = [&](const json& e) {
      return at_point(e, pi_d, 0) || at_point(e, 1, 0) || at_point(e, 2, 0) || at_point(e, 1, 0.4);
    };
    const Scan s = scan(doc, [&](const json& e) {
      const std::string l = e.at("label").get<std::string>();
      return (l == "mf3_omega" || l == "mf3_omega_f") && on_grid(e);
    });
    report(6, "mf3 omega and omega-f laws", s.below(kMf3) && s.count == 8, s.str(kMf3));
  }

  // 7: alternative order-3 identity on {pi, 1}.
  {
    const Scan s = scan(doc, [&](const json& e) {
      return e.at("label") == "mf3_alternative" && (at_point(e, pi_d, 0) || at_point(e, 1, 0));
    });
    report(7, "alternative mf3 identity", s.below(kMf3Alternative) && s.count == 2, s.str(kMf3Alternative));
  }

  // 8: eta/theta laws and the theta chain on the tau grid.
  {
    const std::vector<std::string> labels{"eta_T", "eta_S", "theta3_T2", "theta3_S", "chain_theta3_theta4",
                                          "chain_theta4_theta2"};
    const Scan s = scan(doc, [&](const json& e) {
      return std::find(labels.begin(), labels.end(), e.at("label").get<std::string>()) != labels.end();
    });
    report(8, "eta/theta laws and theta chain", s.below(kEtaTheta) && s.count == 24, s.str(kEtaTheta));
  }

  // 9: group relations.
  {
    const Scan s = scan(doc, [](const json& e) {
      const std::string l = e.at("label").get<std::string>();
      return l == "D^20" || l == "M^2" || l == "(-MD)^3";
    });
    report(9, "group relations D^20 = M^2 = (-MD)^3 = 1", s.below(kGroup) && s.count == 3, s.str(kGroup));
  }

  // 10: Wronskian T-step and G T-invariance for 50 random pairs.
  {
    const Scan s = scan(doc, [](const json& e) {
      const std::string l = e.at("label").get<std::string>();
      return (l == "wronskian_T" || l == "G_T") && detail(e, "pair").starts_with("random_") &&
             at_point(e, 0.2, 1.1);
    });
    report(10, "Wronskian T-step and G T-invariance (50 random pairs)", s.below(kWronskian) && s.count == 100,
           s.str(kWronskian));
  }

  // 11: growth statistic along three rays.
  {
    const Scan s = scan(doc, [](const json& e) { return e.at("label") == "growth_omega"; });
    report(11, "omega growth statistic shows no growth trend", s.count == 3 && s.all_pass && s.max_abs <= kGrowthRatio,
           "max half-ratio " + sci(s.max_abs) + " <= " + sci(kGrowthRatio) + " over " + std::to_string(s.count) +
               " rays");
  }

  // 12: numeric evaluation vs exact expansion, plus low-order coefficients.
  {
    Scan s;
    for (const auto& id : MockThetaId::all()) {
      const Complex q(real_from_string("0.1"));
      const Complex v = eval_mock(id, q, ctx);
      const Complex poly = series_expand(id, kOracleDegree).eval_poly(q);
      s.add(static_cast<double>(abs(v - poly)), true);
    }
    auto starts = [](MockName n, std::vector<long> expect) {
      const auto c = series_expand(MockThetaId(n), expect.size() - 1).coeffs;
      for (std::size_t k = 0; k < expect.size(); ++k) {
        if (c[k] != BigRational(expect[k])) {
          return false;
        }
      }
      return true;
    };
    const bool low = starts(MockName::chi0, {1, 1}) && starts(MockName::chi1, {1, 2}) &&
                     starts(MockName::omega, {1, 2}) && starts(MockName::f, {1, 1, -2});
    report(12, "numeric evaluation matches the degree-40 expansion at q = 0.1", s.below(kOracle) && low,
           s.str(kOracle) + ", low-order coefficients " + (low ? "exact" : "MISMATCH"));
  }

  // 13: determinism.
  {
    const std::string text2 = slurp(out2);
    const bool same = !text1.empty() && text1 == text2;
    report(13, "verify --suite all is byte-identical across runs", same && rc1 == rc2,
           std::to_string(text1.size()) + " bytes, " + (same ? "identical" : "DIFFERENT") + ", exit codes " +
               std::to_string(rc1) + "/" + std::to_string(rc2));
  }

  std::cout << "INFO  verify --suite all: all_pass " << (doc.at("all_pass").get<bool>() ? "true" : "false") << ", "
            << doc.at("entries").size() << " entries, exit " << rc1 << "\n";
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << 13 - failures << "/13)\n";
  return failures == 0 ? 0 : 1;
}
