#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/precision.hpp"

namespace mocklab {

/// Branch policy shared by every module.
///
/// - sqrt(pi/alpha) and sqrt(-i tau) use the principal root (Re alpha > 0
///   and Re(-i tau) = Im tau > 0 keep both away from the cut).
/// - Fractional powers are exponentials of rational multiples of alpha:
///   q^r = e^{-r alpha}, q1^r = e^{-r pi^2/alpha}. No complex power of q
///   itself is ever taken.
struct BranchConvention {
  static Complex principal_sqrt(const Complex& z) { return sqrt(z); }
  /// e^{-r * exponent_base}, the only way fractional powers are formed.
  static Complex power_from_log(const Complex& minus_log_base, const Rational& r);
};

enum class Base { q, Q, q1, Q1 };

/// A point tau of the upper half-plane with its nomes.
///
///   alpha = -pi i tau,  q = e^{-alpha},  Q = q^2,
///   q1 = e^{-pi^2/alpha},  Q1 = q1^2.
///
/// Immutable; remembers the precision context it was built under.
class ModularPoint {
 public:
  [[nodiscard]] const Complex& tau() const { return tau_; }
  [[nodiscard]] const Complex& alpha() const { return alpha_; }
  [[nodiscard]] const Complex& q() const { return q_; }
  [[nodiscard]] const Complex& Q() const { return Q_; }
  [[nodiscard]] const Complex& q1() const { return q1_; }
  [[nodiscard]] const Complex& Q1() const { return Q1_; }
  /// pi^2/alpha, the alpha of the S-image.
  [[nodiscard]] const Complex& alpha1() const { return alpha1_; }
  [[nodiscard]] const PrecisionContext& ctx() const { return ctx_; }

 private:
  friend ModularPoint from_alpha(const Complex& alpha, const PrecisionContext& ctx);

  explicit ModularPoint(const PrecisionContext& ctx) : ctx_(ctx) {}

  PrecisionContext ctx_;
  Complex tau_;
  Complex alpha_;
  Complex alpha1_;
  Complex q_;
  Complex Q_;
  Complex q1_;
  Complex Q1_;
};

/// Throws DomainError if Im tau <= 0, PrecisionError if |q| rounds to 1.
ModularPoint from_tau(const Complex& tau, const PrecisionContext& ctx);

/// tau = i alpha / pi. Throws DomainError if Re alpha <= 0.
ModularPoint from_alpha(const Complex& alpha, const PrecisionContext& ctx);

/// The point -1/tau (alpha -> pi^2/alpha); swaps (q, q1).
ModularPoint s_transform(const ModularPoint& p);

/// The point tau + n.
ModularPoint t_transform(const ModularPoint& p, long n = 1);

/// base^r through alpha: e^{-r a}, e^{-2 r a}, e^{-r pi^2/a}, e^{-2 r pi^2/a}.
Complex frac_power(const ModularPoint& p, Base base, const Rational& r);

}  // namespace mocklab
