#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/modpoint.hpp"
#include "mocklab/precision.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mocklab {

/// base^r * sum_{n=0}^{N} c_n base^n with exact coefficients.
///
/// tail_bound estimates the omitted remainder on the disc |base| <= disc_radius.
struct TruncatedQSeries {
  Rational prefactor_exp;
  std::vector<BigRational> coeffs;
  double tail_bound = 0.0;
  double disc_radius = 0.5;
  Base base = Base::q;

  [[nodiscard]] std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// The polynomial part only, at the given value of the base.
  [[nodiscard]] Complex eval_poly(const Complex& x) const;
  /// Prefactor included; base must be q or Q.
  [[nodiscard]] Complex evaluate(const ModularPoint& p) const;
};

enum class MockOrder { three = 3, five = 5 };
enum class MockName { chi0, chi1, omega, f, rho, xi };

struct MockThetaId {
  MockOrder order;
  MockName name;

  /// Throws DomainError for pairs outside {(5,chi0),(5,chi1),(3,omega),(3,f),(3,rho),(3,xi)}.
  MockThetaId(MockOrder order, MockName name);
  explicit MockThetaId(MockName name);

  [[nodiscard]] std::string str() const;
  /// "chi0", "omega", ...; throws DomainError on unknown names.
  static MockThetaId parse(const std::string& s);
  static std::vector<MockThetaId> all();

  friend bool operator==(const MockThetaId&, const MockThetaId&) = default;
};

/// Outcome of a truncated series evaluation.
struct SeriesValue {
  Complex value;
  /// Bound on |value - exact sum| from the stop rule, plus rounding.
  Real tail_bound;
  /// Largest modulus among the partial terms (scale of rounding error).
  Real max_term;
  std::size_t terms = 0;
};

/// Options shared by the series evaluators.
struct SeriesOptions {
  std::size_t max_terms = 200000;
  std::size_t min_terms = 8;
  /// Consecutive sub-cutoff terms required before stopping.
  std::size_t quiet_run = 3;
};

/// |q| above this is refused by the raw series evaluators.
inline constexpr double kMaxNome = 0.999;

/// (a;b)_n. Pass std::nullopt for n = infinity (requires |b| < 1).
Complex pochhammer(const Complex& a, const Complex& b, std::optional<std::size_t> n,
                   const PrecisionContext& ctx);

SeriesValue eval_mock_detailed(const MockThetaId& id, const Complex& q, const PrecisionContext& ctx,
                               const SeriesOptions& opts = {});
Complex eval_mock(const MockThetaId& id, const Complex& q, const PrecisionContext& ctx);

/// Exact coefficients c_0..c_N of the mock theta function. N <= 10000.
TruncatedQSeries series_expand(const MockThetaId& id, std::size_t N);

/// (K0(Q), K1(Q)) = (2 - chi0(Q), -Q chi1(Q)).
std::pair<Complex, Complex> k_pair(const Complex& Q, const PrecisionContext& ctx);
std::pair<SeriesValue, SeriesValue> k_pair_detailed(const Complex& Q, const PrecisionContext& ctx);
/// Exact base-Q expansion of K0 (which = 0) or K1 (which = 1).
TruncatedQSeries k_expand(int which, std::size_t N);

enum class Unary { X0, X1 };

/// X0(u) or X1(u) for |u| < 1, with the prefactor folded into integer exponents.
SeriesValue unary_x_detailed(Unary which, const Complex& u, const PrecisionContext& ctx);
Complex unary_x(Unary which, const Complex& u, const PrecisionContext& ctx);

/// Signed monomials (exponent, sign) of X0/X1 with exponent <= max_exp, sorted.
/// Throws Error if a folded exponent fails to be a nonnegative integer.
std::vector<std::pair<long long, int>> unary_terms(Unary which, long long max_exp);

/// eta(tau) = Q^{1/24} (Q;Q)_inf.
Complex eta(const Complex& tau, const PrecisionContext& ctx);

/// Jacobi theta: 2 uses the product form, 3 and 4 the Gaussian sums.
Complex theta(int which, const Complex& tau, const PrecisionContext& ctx);
/// theta_2 as 2 q^{1/4} sum_{n>=0} q^{n(n+1)}.
Complex theta2_series(const Complex& tau, const PrecisionContext& ctx);

/// Partition numbers p(0..N) by the pentagonal recurrence. N <= 100000.
std::vector<BigInt> euler_inverse_coeffs(std::size_t N);
/// Coefficients of (Q;Q)_inf through Q^N (pentagonal number theorem).
std::vector<BigInt> euler_product_coeffs(std::size_t N);

/// Divides a base-Q series by (Q;Q)_inf coefficientwise.
TruncatedQSeries normalize_by_euler(const TruncatedQSeries& s);
/// Multiplies a base-Q series by (Q;Q)_inf coefficientwise.
TruncatedQSeries multiply_by_euler(const TruncatedQSeries& s);

/// Converts an exact rational to a Real at the current precision.
Real to_real(const BigRational& r);
Real to_real(const BigInt& z);

}  // namespace mocklab
