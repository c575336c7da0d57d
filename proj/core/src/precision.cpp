#include "mocklab/precision.hpp"

#include "mocklab/errors.hpp"

#include <cmath>

namespace mocklab {

unsigned digits10_for_bits(unsigned bits) {
  // Boost maps d decimal digits to 1 + 1000d/301 bits; pick the smallest d
  // that covers the request.
  unsigned d = 1;
  while (1 + (d * 1000UL) / 301 < bits) {
    ++d;
  }
  return d;
}

PrecisionScope::PrecisionScope(unsigned prec_bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(prec_bits));
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.prec_bits()) {}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

PrecisionContext::PrecisionContext(unsigned prec_bits, const std::string& eps)
    : prec_bits_(prec_bits), eps_text_(eps) {
  if (prec_bits_ < kMinBits) {
    throw DomainError("prec_bits must be >= 64");
  }
  PrecisionScope scope(prec_bits_);
  eps_ = real_from_string(eps);
  validate();
}

PrecisionContext::PrecisionContext(unsigned prec_bits, const Real& eps)
    : prec_bits_(prec_bits) {
  if (prec_bits_ < kMinBits) {
    throw DomainError("prec_bits must be >= 64");
  }
  PrecisionScope scope(prec_bits_);
  eps_ = Real(eps);
  eps_text_ = to_decimal(eps_, 20);
  validate();
}

void PrecisionContext::validate() const {
  if (!(eps_ > 0)) {
    throw DomainError("eps must be positive");
  }
  PrecisionScope scope(prec_bits_);
  if (!(eps_ > pow2(-static_cast<long>(prec_bits_) + kGuardBits))) {
    throw DomainError("eps is tighter than working precision allows (need eps > 2^(16-prec_bits))");
  }
}

PrecisionContext PrecisionContext::with_default_eps(unsigned prec_bits) {
  long exponent = static_cast<long>(5 * prec_bits / 32);
  return {prec_bits, "1e-" + std::to_string(exponent)};
}

Real PrecisionContext::term_cutoff() const {
  PrecisionScope scope(prec_bits_);
  return eps_ * pow2(-8);
}

Real PrecisionContext::rounding_floor() const {
  PrecisionScope scope(prec_bits_);
  return pow2(-static_cast<long>(prec_bits_) + kGuardBits);
}

unsigned PrecisionContext::output_digits() const {
  return static_cast<unsigned>(std::ceil(prec_bits_ * 0.302));
}

PrecisionContext PrecisionContext::with_bits(unsigned bits) const {
  return {bits, eps_text_};
}

PrecisionContext PrecisionContext::with_eps(const Real& eps) const { return {prec_bits_, eps}; }

}  // namespace mocklab
