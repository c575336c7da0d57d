#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/precision.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mocklab {

/// A residual is judged against kBudgetFactor times its error budget.
inline constexpr int kBudgetFactor = 100;

/// One residual of one identity at one point.
struct IdentityEntry {
  std::string label;
  Complex point;
  /// "alpha", "tau", "abs_alpha" or "none".
  std::string point_kind = "none";
  Real abs_residual;
  Real rel_residual;
  /// Certified series-tail plus quadrature plus rounding budget.
  Real budget;
  Real tolerance;
  bool pass = false;
  std::optional<std::string> error;
  /// Extra rendered key/value pairs (truncation orders, matched signs, ...).
  std::vector<std::pair<std::string, std::string>> detail;
};

struct IdentityReport {
  std::string identity;
  unsigned prec_bits = 0;
  std::string eps;
  std::vector<IdentityEntry> entries;
  Real max_abs;
  bool all_pass = true;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Recomputes max_abs and all_pass from the entries.
  void finalize();
};

/// Entry for a failed evaluation: pass = false, residuals NaN.
IdentityEntry error_entry(std::string label, const Complex& point, std::string kind,
                          const std::string& message);

/// Deterministic JSON rendering; reals use `digits` significant decimals.
std::string to_json(const IdentityReport& r, unsigned digits);

/// Decimal string for a Real, "nan"/"inf" aware.
std::string render_real(const Real& x, unsigned digits);

}  // namespace mocklab
