#include "support.hpp"

#include "mocklab/errors.hpp"
#include "mocklab/qseries.hpp"

#include <doctest.h>

#include <map>

using namespace mocklab;
using testing::C;
using testing::dist;
using testing::R;

namespace {

const std::map<std::string, const std::array<long long, 41>*>& oracle_series() {
  static const std::map<std::string, const std::array<long long, 41>*> m = {
      {"chi0", &oracle::k_chi0}, {"chi1", &oracle::k_chi1}, {"omega", &oracle::k_omega},
      {"f", &oracle::k_f},       {"rho", &oracle::k_rho},   {"xi", &oracle::k_xi}};
  return m;
}

const std::map<std::string, std::pair<oracle::CValue, oracle::CValue>>& oracle_values() {
  static const std::map<std::string, std::pair<oracle::CValue, oracle::CValue>> m = {
      {"chi0", {oracle::k_chi0_at_0_1, oracle::k_chi0_at_c}},
      {"chi1", {oracle::k_chi1_at_0_1, oracle::k_chi1_at_c}},
      {"omega", {oracle::k_omega_at_0_1, oracle::k_omega_at_c}},
      {"f", {oracle::k_f_at_0_1, oracle::k_f_at_c}},
      {"rho", {oracle::k_rho_at_0_1, oracle::k_rho_at_c}},
      {"xi", {oracle::k_xi_at_0_1, oracle::k_xi_at_c}}};
  return m;
}

}  // namespace

TEST_CASE("exact expansions match brute-force series to degree 40") {
  for (const auto& id : MockThetaId::all()) {
    CAPTURE(id.str());
    const TruncatedQSeries s = series_expand(id, oracle::kDegree);
    const auto& expected = *oracle_series().at(id.str());
    REQUIRE(s.coeffs.size() == expected.size());
    for (std::size_t n = 0; n < expected.size(); ++n) {
      CAPTURE(n);
      CHECK(s.coeffs[n] == BigRational(expected[n]));
    }
  }
}

TEST_CASE("low-order coefficients") {
  auto first = [](MockName n, std::size_t k) {
    auto c = series_expand(MockThetaId(n), k).coeffs;
    std::vector<long> out;
    for (const auto& x : c) {
      out.push_back(static_cast<long>(numerator(x)));
    }
    return out;
  };
  CHECK(first(MockName::chi0, 1) == std::vector<long>{1, 1});
  CHECK(first(MockName::chi1, 1) == std::vector<long>{1, 2});
  CHECK(first(MockName::omega, 1) == std::vector<long>{1, 2});
  CHECK(first(MockName::f, 2) == std::vector<long>{1, 1, -2});
  CHECK(series_expand(MockThetaId(MockName::chi0), 0).coeffs.size() == 1);
}

TEST_CASE("numeric evaluation agrees with direct high-precision sums") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const Complex c(R("0.3"), R("0.4"));
  for (const auto& id : MockThetaId::all()) {
    CAPTURE(id.str());
    const auto& [at01, atc] = oracle_values().at(id.str());
    const SeriesValue a = eval_mock_detailed(id, Complex(R("0.1")), ctx);
    CHECK(dist(a.value, C(at01)) < 1e-41);
    CHECK(a.tail_bound < R("1e-40"));
    CHECK(dist(eval_mock(id, c, ctx), C(atc)) < 1e-41);
  }
}

TEST_CASE("numeric evaluation at q = 0.1 matches the degree-40 polynomial") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  for (const auto& id : MockThetaId::all()) {
    CAPTURE(id.str());
    const Complex v = eval_mock(id, Complex(R("0.1")), ctx);
    const Complex poly = series_expand(id, 40).eval_poly(Complex(R("0.1")));
    // The omitted tail is O(5000 * 0.1^41).
    CHECK(dist(v, poly) < 1e-35);
  }
}

TEST_CASE("mock theta evaluation guards") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const MockThetaId chi0(MockName::chi0);
  CHECK(dist(eval_mock(chi0, Complex(0), ctx), Complex(1)) == 0.0);
  CHECK_THROWS_AS(eval_mock(chi0, Complex(R("1.2")), ctx), DomainError);
  CHECK_THROWS_AS(eval_mock(chi0, Complex(R("0.9995")), ctx), DomainError);
  CHECK_THROWS_AS(MockThetaId(MockOrder::five, MockName::omega), DomainError);
  CHECK_THROWS_AS(MockThetaId::parse("chi2"), DomainError);
  CHECK(MockThetaId::parse("xi").order == MockOrder::three);
}

TEST_CASE("K pair expansions") {
  const auto k0 = k_expand(0, 6).coeffs;
  const auto k1 = k_expand(1, 6).coeffs;
  // K0 = 2 - chi0, K1 = -Q chi1.
  const std::vector<long> e0{1, -1, -1, -2, -1, -3, -2};
  const std::vector<long> e1{0, -1, -2, -2, -3, -3, -4};
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(k0[n] == BigRational(e0[n]));
    CHECK(k1[n] == BigRational(e1[n]));
  }
}

TEST_CASE("unary series exponents") {
  const auto x0 = unary_terms(Unary::X0, 33);
  const std::vector<std::pair<long long, int>> expected{{0, 1},   {1, 1},   {3, 1},   {7, 1},  {8, -1},
                                                        {14, -1}, {20, -1}, {29, -1}, {31, 1}};
  CHECK(x0 == expected);
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const Complex u(R("0.5"));
  Complex direct;
  for (const auto& [e, s] : unary_terms(Unary::X0, 400)) {
    direct += Complex(Real(s)) * pow_int(u, e);
  }
  CHECK(dist(unary_x(Unary::X0, u, ctx), direct) < 1e-41);
}

TEST_CASE("partition numbers by enumeration") {
  const auto p = euler_inverse_coeffs(30);
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(p[n] == BigInt(oracle::k_partitions[n]));
  }
  const auto e = euler_product_coeffs(30);
  // (Q;Q)_inf * sum p(n) Q^n = 1
  for (std::size_t n = 0; n <= 30; ++n) {
    BigInt s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      s += e[k] * p[n - k];
    }
    CHECK(s == (n == 0 ? 1 : 0));
  }
}

TEST_CASE("eta and theta closed forms") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const Complex i(Real(0), Real(1));
  CHECK(dist(eta(i, ctx), Complex(R(oracle::k_eta_i))) < 1e-41);
  CHECK(dist(theta(3, i, ctx), Complex(R(oracle::k_theta3_i))) < 1e-41);
  const Complex t(R("0.2"), R("1.1"));
  CHECK(dist(eta(t, ctx), C(oracle::k_eta_generic)) < 1e-41);
  CHECK(dist(theta(3, t, ctx), C(oracle::k_theta3_generic)) < 1e-41);
  CHECK(dist(theta(2, t, ctx), theta2_series(t, ctx)) < 1e-41);
  // Jacobi: theta3^4 = theta2^4 + theta4^4.
  CHECK(dist(pow_int(theta(3, t, ctx), 4), pow_int(theta(2, t, ctx), 4) + pow_int(theta(4, t, ctx), 4)) <
        1e-44);
}

TEST_CASE("q-Pochhammer symbols") {
  const auto ctx = testing::ref_ctx();
  PrecisionScope scope(ctx);
  const Complex q(R("0.5"));
  CHECK(dist(pochhammer(q, q, 0, ctx), Complex(1)) == 0.0);
  CHECK(dist(pochhammer(q, q, 2, ctx), Complex(R("0.375"))) < 1e-70);
  // Euler: (q;q)_inf = sum over pentagonal numbers.
  Complex pent;
  for (long k = -40; k <= 40; ++k) {
    pent += Complex(Real(k % 2 == 0 ? 1 : -1)) * pow_int(q, k * (3 * k - 1) / 2);
  }
  CHECK(dist(pochhammer(q, q, std::nullopt, ctx), pent) < 1e-41);
  CHECK_THROWS_AS(pochhammer(q, Complex(Real(1)), std::nullopt, ctx), DomainError);
}

TEST_CASE("normalization by the Euler product round-trips") {
  const TruncatedQSeries k0 = k_expand(0, 30);
  const TruncatedQSeries back = multiply_by_euler(normalize_by_euler(k0));
  CHECK(back.coeffs == k0.coeffs);
}
