#pragma once

#include "mocklab/arith.hpp"

#include <string>

namespace mocklab {

/// Working binary precision plus the absolute tolerance targeted by series
/// tails and quadrature.
///
/// Invariants: prec_bits >= 64 and eps > 2^(-prec_bits + 16). The 16-bit
/// guard keeps accumulated rounding below the reportable tolerance.
class PrecisionContext {
 public:
  static constexpr unsigned kMinBits = 64;
  static constexpr long kGuardBits = 16;

  /// Throws DomainError when an invariant is violated.
  PrecisionContext(unsigned prec_bits, const std::string& eps);
  PrecisionContext(unsigned prec_bits, const Real& eps);

  /// eps = 10^(-floor(5*prec_bits/32)); gives 1e-40 at 256 bits.
  static PrecisionContext with_default_eps(unsigned prec_bits);

  [[nodiscard]] unsigned prec_bits() const { return prec_bits_; }
  [[nodiscard]] const Real& eps() const { return eps_; }

  /// eps * 2^-8, the per-term cutoff used by series stop rules.
  [[nodiscard]] Real term_cutoff() const;
  /// 2^(-prec_bits + 16): relative rounding floor for residual budgets.
  [[nodiscard]] Real rounding_floor() const;
  /// Decimal digits used when serializing reals: ceil(0.302 * prec_bits).
  [[nodiscard]] unsigned output_digits() const;

  /// Same eps, new precision (eps is re-rounded).
  [[nodiscard]] PrecisionContext with_bits(unsigned bits) const;
  [[nodiscard]] PrecisionContext with_eps(const Real& eps) const;

 private:
  void validate() const;

  unsigned prec_bits_;
  std::string eps_text_;
  Real eps_;
};

/// Installs the context's precision as the MPFR default for the lifetime of
/// the scope and restores the previous default afterwards. The default is
/// process-wide, so evaluation under different precisions must not overlap
/// across threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  explicit PrecisionScope(unsigned prec_bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

unsigned digits10_for_bits(unsigned bits);

}  // namespace mocklab
