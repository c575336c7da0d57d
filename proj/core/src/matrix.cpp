#include "mocklab/matrix.hpp"

#include <algorithm>

namespace mocklab {

Real Mat2::max_abs() const {
  Real r(0);
  for (const auto& row : m) {
    for (const auto& x : row) {
      r = std::max(r, abs(x));
    }
  }
  return r;
}

Mat2 Mat2::pow(unsigned n) const {
  Mat2 acc = identity();
  Mat2 base = *this;
  while (n > 0) {
    if (n & 1U) {
      acc = acc * base;
    }
    n >>= 1U;
    if (n > 0) {
      base = base * base;
    }
  }
  return acc;
}

Real norm2(const Vec2& v) { return boost::multiprecision::sqrt(norm(v[0]) + norm(v[1])); }

Mat2 mixing_matrix(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real c = 2 / boost::multiprecision::sqrt(Real(5));
  const Real s1 = c * boost::multiprecision::sin(pi() / 5);
  const Real s2 = c * boost::multiprecision::sin(2 * pi() / 5);
  return {{{{Complex(s1), Complex(s2)}, {Complex(s2), Complex(Real(-s1))}}}};
}

Mat2 phase_matrix(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real p = pi();
  return {{{{expi(-p / 10), Complex(0)}, {Complex(0), expi(-9 * p / 10)}}}};
}

}  // namespace mocklab
