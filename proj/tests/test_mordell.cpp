#include "support.hpp"

#include "mocklab/errors.hpp"
#include "mocklab/matrix.hpp"
#include "mocklab/mordell.hpp"

#include <doctest.h>

using namespace mocklab;
using testing::C;
using testing::dist;
using testing::R;

TEST_CASE("Mordell integrals against mpmath quadrature") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  CHECK(dist(w3_integral(Complex(1), ctx), Complex(R(oracle::k_w3_1))) < 1e-40);
  CHECK(dist(w2_integral(Complex(1), ctx), Complex(R(oracle::k_w2_1))) < 1e-40);
  CHECK(dist(l_integral(Rational(1, 5), Complex(2), ctx), Complex(R(oracle::k_l_1_5_at_2))) < 1e-40);
  CHECK(dist(l_integral(Rational(2, 5), Complex(2), ctx), Complex(R(oracle::k_l_2_5_at_2))) < 1e-40);
  CHECK(dist(w3_integral(Complex(Real(1), R("0.5")), ctx), C(oracle::k_w3_c)) < 1e-40);
}

TEST_CASE("W3 small-alpha scaling limit") {
  const auto ctx = PrecisionContext::with_default_eps(128);
  PrecisionScope scope(ctx);
  const Real a = R("1e-4");
  const Real limit = boost::multiprecision::sqrt(pi()) / (6 * boost::multiprecision::sqrt(3 * a));
  const Real v = w3_integral(Complex(a), ctx).re;
  CHECK(boost::multiprecision::abs(v / limit - 1) < R("0.01"));
}

TEST_CASE("L vector is fixed by M at alpha = pi") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const LVector v = l_vector(Complex(pi()), ctx);
  CHECK(v.l1.im == 0);
  CHECK(norm2(v.vec() - mixing_matrix(ctx) * v.vec()) < R("1e-40"));
}

TEST_CASE("L continues to |arg alpha| beyond pi/2") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const Complex alpha = expi(R("2.5"));
  // Modular consistency holds off the half-plane as well.
  const LVector a = l_vector(alpha, ctx);
  const LVector b = l_vector(Complex(pi() * pi()) / alpha, ctx);
  const Vec2 rhs = sqrt(Complex(pi()) / alpha) * (mixing_matrix(ctx) * b.vec());
  CHECK(norm2(a.vec() - rhs) < R("1e-38"));
}

TEST_CASE("pole proximity near the Stokes line") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  CHECK_THROWS_AS(l_vector(expi(pi() - R("1e-4")), ctx), PoleProximityError);
  CHECK_THROWS_AS(lateral_L(Real(1), Real(1), ctx), DomainError);
  CHECK_THROWS_AS(stokes_decompose(Real(1), {R("0.1"), R("0.0001")}, ctx), PoleProximityError);
  CHECK_THROWS_AS(stokes_decompose(Real(1), {R("0.1"), R("0.2")}, ctx), DomainError);
}

TEST_CASE("principal-value identity on the 18-point grid") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  for (const char* a : {"0", "0.3", "0.7"}) {
    for (const char* p : {"1", "1.5"}) {
      for (const char* t : {"0.3", "0.8", "2"}) {
        CAPTURE(a);
        CAPTURE(p);
        CAPTURE(t);
        const Real quad = pv_quadrature(R(a), R(p), R(t), ctx);
        const Complex sum = pv_sum(R(a), R(p), Complex(R(t)), ctx);
        CHECK(dist(Complex(quad), sum) < 1e-15);
      }
    }
  }
}

TEST_CASE("reciprocal Gaussian does not satisfy the identity") {
  const auto ctx = PrecisionContext::with_default_eps(128);
  PrecisionScope scope(ctx);
  const Real quad = pv_quadrature(R("0.5"), R("1.5"), R("0.8"), ctx, PvGaussian::reciprocal);
  const Complex sum = pv_sum(R("0.5"), R("1.5"), Complex(R("0.8")), ctx);
  CHECK(dist(Complex(quad), sum) > 1e-3);
}

TEST_CASE("extrapolation helpers") {
  PrecisionScope scope(256);
  // y = 1 + x + x^2 is recovered exactly from three points.
  const std::vector<Real> xs{Real("0.4"), Real("0.2"), Real("0.1")};
  std::vector<Complex> ys;
  std::vector<Complex> ds;
  for (const auto& x : xs) {
    ys.emplace_back(1 + x + x * x);
    ds.emplace_back(1 + 2 * x);
  }
  CHECK(dist(neville_extrapolate(xs, ys), Complex(1)) < 1e-70);
  CHECK(dist(hermite_extrapolate(xs, ys, ds), Complex(1)) < 1e-70);
}

TEST_CASE("Stokes decomposition at |alpha| = 1" * doctest::timeout(120)) {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const StokesDecomposition d = stokes_decompose(Real(1), default_eps_seq(), ctx);
  CHECK(d.monotone);
  CHECK(d.rows.size() == 4);
  CHECK(d.residual_real < R("1e-8"));
  CHECK(d.residual_imag < R("1e-8"));
  CHECK(d.matched_side == "lower");
  // Without the 3/2 normalization the prefactors disagree by 3/2 e^{-A/30}.
  const Real expected = Real(3) / 2 * boost::multiprecision::exp(-Real(1) / 30);
  CHECK(testing::dist(d.literal_ratio[0].re, expected) < 1e-8);
}
