#include "mocklab/modpoint.hpp"

#include "mocklab/errors.hpp"

namespace mocklab {

Complex BranchConvention::power_from_log(const Complex& minus_log_base, const Rational& r) {
  if (r.num() == 0) {
    return Complex(1);
  }
  return exp(-(minus_log_base * r.to_real()));
}

ModularPoint from_alpha(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(alpha.re > 0)) {
    throw DomainError("Re alpha must be positive (Im tau > 0)");
  }
  ModularPoint p(ctx);
  p.alpha_ = alpha;
  const Real pi_ = pi();
  p.tau_ = Complex(-alpha.im / pi_, alpha.re / pi_);
  p.alpha1_ = Complex(pi_ * pi_) / alpha;
  p.q_ = exp(-alpha);
  p.Q_ = exp(-(alpha * Real(2)));
  p.q1_ = exp(-p.alpha1_);
  p.Q1_ = exp(-(p.alpha1_ * Real(2)));
  if (!(abs(p.q_) < 1) || !(abs(p.q1_) < 1)) {
    throw PrecisionError("|q| or |q1| rounds to 1 at " + std::to_string(ctx.prec_bits()) +
                         " bits");
  }
  return p;
}

ModularPoint from_tau(const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(tau.im > 0)) {
    throw DomainError("Im tau must be positive");
  }
  // alpha = -pi i tau = pi Im(tau) - i pi Re(tau)
  const Real pi_ = pi();
  return from_alpha(Complex(pi_ * tau.im, -pi_ * tau.re), ctx);
}

ModularPoint s_transform(const ModularPoint& p) { return from_alpha(p.alpha1(), p.ctx()); }

ModularPoint t_transform(const ModularPoint& p, long n) {
  PrecisionScope scope(p.ctx());
  return from_tau(p.tau() + Complex(Real(n)), p.ctx());
}

Complex frac_power(const ModularPoint& p, Base base, const Rational& r) {
  PrecisionScope scope(p.ctx());
  switch (base) {
    case Base::q:
      return BranchConvention::power_from_log(p.alpha(), r);
    case Base::Q:
      return BranchConvention::power_from_log(p.alpha(), r * 2);
    case Base::q1:
      return BranchConvention::power_from_log(p.alpha1(), r);
    case Base::Q1:
      return BranchConvention::power_from_log(p.alpha1(), r * 2);
  }
  throw DomainError("unknown base");
}

}  // namespace mocklab
