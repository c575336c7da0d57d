#include "mocklab/qseries.hpp"

#include "mocklab/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace mocklab {

Real to_real(const BigRational& r) {
  Real x;
  mpfr_set_q(x.backend().data(), r.backend().data(), MPFR_RNDN);
  return x;
}

Real to_real(const BigInt& z) {
  Real x;
  mpfr_set_z(x.backend().data(), z.backend().data(), MPFR_RNDN);
  return x;
}

// ---------------------------------------------------------------------------
// TruncatedQSeries

Complex TruncatedQSeries::eval_poly(const Complex& x) const {
  Complex acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + Complex(to_real(*it));
  }
  return acc;
}

Complex TruncatedQSeries::evaluate(const ModularPoint& p) const {
  PrecisionScope scope(p.ctx());
  const Complex* x = nullptr;
  switch (base) {
    case Base::q:
      x = &p.q();
      break;
    case Base::Q:
      x = &p.Q();
      break;
    case Base::q1:
      x = &p.q1();
      break;
    case Base::Q1:
      x = &p.Q1();
      break;
  }
  return frac_power(p, base, prefactor_exp) * eval_poly(*x);
}

// ---------------------------------------------------------------------------
// MockThetaId

namespace {

MockOrder natural_order(MockName n) {
  return (n == MockName::chi0 || n == MockName::chi1) ? MockOrder::five : MockOrder::three;
}

const std::array<std::pair<MockName, const char*>, 6> kNames{{{MockName::chi0, "chi0"},
                                                              {MockName::chi1, "chi1"},
                                                              {MockName::omega, "omega"},
                                                              {MockName::f, "f"},
                                                              {MockName::rho, "rho"},
                                                              {MockName::xi, "xi"}}};

}  // namespace

MockThetaId::MockThetaId(MockOrder o, MockName n) : order(o), name(n) {
  if (natural_order(n) != o) {
    throw DomainError("no mock theta function '" + std::string(kNames[static_cast<int>(n)].second) +
                      "' of order " + std::to_string(static_cast<int>(o)));
  }
}

MockThetaId::MockThetaId(MockName n) : MockThetaId(natural_order(n), n) {}

std::string MockThetaId::str() const { return kNames[static_cast<int>(name)].second; }

MockThetaId MockThetaId::parse(const std::string& s) {
  for (const auto& [n, text] : kNames) {
    if (s == text) {
      return MockThetaId(n);
    }
  }
  throw DomainError("unknown mock theta function '" + s + "'");
}

std::vector<MockThetaId> MockThetaId::all() {
  std::vector<MockThetaId> out;
  for (const auto& entry : kNames) {
    out.emplace_back(entry.first);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Numeric series

namespace {

void check_nome(const Complex& q) {
  Real m = abs(q);
  if (!(m < 1)) {
    throw DomainError("|q| must be < 1");
  }
  if (m > Real(kMaxNome)) {
    throw DomainError("|q| = " + to_decimal(m, 6) + " exceeds the evaluation guard 0.999");
  }
}

// Sums terms produced by `next` (called with n = 0, 1, ...) under the
// quiet-run stop rule.
SeriesValue sum_series(const std::function<Complex(std::size_t)>& next, const PrecisionContext& ctx,
                       const SeriesOptions& opts, const std::string& what) {
  const Real cutoff = ctx.term_cutoff();
  SeriesValue out;
  out.max_term = Real(0);
  std::size_t quiet = 0;
  for (std::size_t n = 0; n < opts.max_terms; ++n) {
    Complex t = next(n);
    Real m = abs(t);
    out.value += t;
    out.max_term = std::max(out.max_term, m);
    quiet = m < cutoff ? quiet + 1 : 0;
    if (quiet >= opts.quiet_run && n + 1 >= opts.min_terms) {
      out.terms = n + 1;
      out.tail_bound = 4 * cutoff + ctx.rounding_floor() * out.max_term;
      return out;
    }
  }
  throw ConvergenceError(what + ": stop rule not met within " + std::to_string(opts.max_terms) +
                         " terms");
}

}  // namespace

Complex pochhammer(const Complex& a, const Complex& b, std::optional<std::size_t> n,
                   const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Complex acc(1);
  Complex ab = a;
  if (n) {
    for (std::size_t j = 0; j < *n; ++j) {
      acc *= Complex(1) - ab;
      ab *= b;
    }
    return acc;
  }
  Real mb = abs(b);
  if (!(mb < 1)) {
    throw DomainError("infinite q-Pochhammer needs |b| < 1");
  }
  const Real cutoff = ctx.term_cutoff();
  const Real denom = 1 - mb;
  for (std::size_t j = 0; j < 10000000; ++j) {
    // Remaining factors change the product by at most sum_{i>=j}|a b^i|.
    if (abs(ab) < cutoff * denom) {
      return acc;
    }
    acc *= Complex(1) - ab;
    ab *= b;
  }
  throw ConvergenceError("infinite q-Pochhammer did not converge");
}

SeriesValue eval_mock_detailed(const MockThetaId& id, const Complex& q, const PrecisionContext& ctx,
                               const SeriesOptions& opts) {
  PrecisionScope scope(ctx);
  check_nome(q);
  const Complex one(1);
  const Complex q2 = q * q;
  const Complex q6 = q2 * q2 * q2;
  const Complex q12 = q6 * q6;
  Complex t;
  Complex a;
  Complex b;
  std::function<Complex(std::size_t)> next;

  switch (id.name) {
    case MockName::chi0:
      // t_n = q^n / prod_{m=n+1}^{2n} (1 - q^m)
      a = q;  // q^{n+1}
      b = q;  // q^{2n+1}
      next = [&](std::size_t n) {
        if (n == 0) {
          t = one;
        } else {
          t *= q * (one - a) / ((one - b) * (one - b * q));
          a *= q;
          b *= q2;
        }
        return t;
      };
      break;
    case MockName::chi1:
      // t_n = q^n / prod_{m=n+1}^{2n+1} (1 - q^m)
      a = q;   // q^{n+1}
      b = q2;  // q^{2n+2}
      next = [&](std::size_t n) {
        if (n == 0) {
          t = one / (one - q);
        } else {
          t *= q * (one - a) / ((one - b) * (one - b * q));
          a *= q;
          b *= q2;
        }
        return t;
      };
      break;
    case MockName::omega:
      // t_n = q^{2n(n+1)} / (q;q^2)_{n+1}^2
      a = q2 * q2;      // q^{4(n+1)}
      b = q2 * q;       // q^{2n+3}
      next = [&](std::size_t n) {
        if (n == 0) {
          Complex d = one - q;
          t = one / (d * d);
        } else {
          Complex d = one - b;
          t *= a / (d * d);
          a *= q2 * q2;
          b *= q2;
        }
        return t;
      };
      break;
    case MockName::f:
      // t_n = q^{n^2} / (-q;q)_n^2
      a = q;  // q^{2n+1}
      b = q;  // q^{n+1}
      next = [&](std::size_t n) {
        if (n == 0) {
          t = one;
        } else {
          Complex d = one + b;
          t *= a / (d * d);
          a *= q2;
          b *= q;
        }
        return t;
      };
      break;
    case MockName::rho:
      // t_n = q^{2n(n+1)} (q;q^2)_{n+1} / (q^3;q^6)_{n+1}
      a = q2 * q2;  // q^{4(n+1)}
      b = q2 * q;   // q^{2n+3}
      next = [&](std::size_t n) {
        if (n == 0) {
          t = (one - q) / (one - q2 * q);
        } else {
          Complex b3 = b * b * b;  // q^{6n+9}
          t *= a * (one - b) / (one - b3);
          a *= q2 * q2;
          b *= q2;
        }
        return t;
      };
      break;
    case MockName::xi:
      // 1 + 2 sum_{n>=1} q^{6n(n-1)+1} / ((q;q^6)_n (q^5;q^6)_n)
      a = q12;     // q^{12n}
      b = q6 * q;  // q^{6n+1}
      next = [&](std::size_t n) {
        if (n == 0) {
          return one;
        }
        if (n == 1) {
          t = q / ((one - q) * (one - q2 * q2 * q));
        } else {
          t *= a / ((one - b) * (one - b * q2 * q2));
          a *= q12;
          b *= q6;
        }
        return t * Real(2);
      };
      break;
  }
  return sum_series(next, ctx, opts, id.str());
}

Complex eval_mock(const MockThetaId& id, const Complex& q, const PrecisionContext& ctx) {
  return eval_mock_detailed(id, q, ctx).value;
}

std::pair<SeriesValue, SeriesValue> k_pair_detailed(const Complex& Q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue c0 = eval_mock_detailed(MockThetaId(MockName::chi0), Q, ctx);
  SeriesValue c1 = eval_mock_detailed(MockThetaId(MockName::chi1), Q, ctx);
  c0.value = Complex(2) - c0.value;
  Real mq = abs(Q);
  c1.value = -(Q * c1.value);
  c1.tail_bound *= mq;
  c1.max_term *= mq;
  return {c0, c1};
}

std::pair<Complex, Complex> k_pair(const Complex& Q, const PrecisionContext& ctx) {
  auto [a, b] = k_pair_detailed(Q, ctx);
  return {a.value, b.value};
}

// ---------------------------------------------------------------------------
// Unary false theta series

namespace {

struct UnaryFamily {
  std::array<int, 2> a;
  Rational pre;
};

UnaryFamily unary_family(Unary which) {
  return which == Unary::X0 ? UnaryFamily{{14, 4}, Rational(1, 120)}
                            : UnaryFamily{{8, 2}, Rational(49, 120)};
}

// Net exponents of block k in the order (a0-, a0+, a1-, a1+).
std::array<long long, 4> unary_block(const UnaryFamily& fam, long long k) {
  std::array<long long, 4> out{};
  int idx = 0;
  for (int a : fam.a) {
    for (int s : {-1, 1}) {
      long long base = a + s * 15 * (2 * k + 1);
      Rational e = Rational(base * base, 120) - fam.pre;
      if (!e.is_integer() || e.num() < 0) {
        throw Error("unary exponent " + e.str() + " is not a nonnegative integer");
      }
      out[idx++] = e.num();
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<long long, int>> unary_terms(Unary which, long long max_exp) {
  const UnaryFamily fam = unary_family(which);
  std::map<long long, int> acc;
  for (long long k = 0;; ++k) {
    auto block = unary_block(fam, k);
    long long lo = *std::min_element(block.begin(), block.end());
    if (lo > max_exp) {
      break;
    }
    int sign = (k % 2 == 0) ? 1 : -1;
    for (long long e : block) {
      if (e <= max_exp) {
        acc[e] += sign;
      }
    }
  }
  std::vector<std::pair<long long, int>> out;
  for (const auto& [e, c] : acc) {
    if (c != 0) {
      out.emplace_back(e, c);
    }
  }
  return out;
}

SeriesValue unary_x_detailed(Unary which, const Complex& u, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(abs(u) < 1)) {
    throw DomainError("unary series needs |u| < 1");
  }
  const UnaryFamily fam = unary_family(which);
  const Real cutoff = ctx.term_cutoff();
  SeriesValue out;
  out.max_term = Real(0);
  for (long long k = 0; k < 1000000; ++k) {
    auto block = unary_block(fam, k);
    Complex s;
    Real block_max(0);
    for (long long e : block) {
      Complex t = pow_int(u, e);
      block_max = std::max(block_max, abs(t));
      s += t;
    }
    out.value += (k % 2 == 0) ? s : -s;
    out.max_term = std::max(out.max_term, block_max);
    if (block_max < cutoff && k >= 1) {
      out.terms = static_cast<std::size_t>(4 * (k + 1));
      out.tail_bound = 4 * cutoff + ctx.rounding_floor() * out.max_term;
      return out;
    }
  }
  throw ConvergenceError("unary series did not converge");
}

Complex unary_x(Unary which, const Complex& u, const PrecisionContext& ctx) {
  return unary_x_detailed(which, u, ctx).value;
}

// ---------------------------------------------------------------------------
// Eta and theta

Complex eta(const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  ModularPoint p = from_tau(tau, ctx);
  return frac_power(p, Base::Q, Rational(1, 24)) * pochhammer(p.Q(), p.Q(), std::nullopt, ctx);
}

namespace {

// 1 + 2 sum_{n>=1} s^n q^{n^2}
Complex gaussian_theta(const ModularPoint& p, bool alternating) {
  const Real cutoff = p.ctx().term_cutoff();
  const Complex& q = p.q();
  const Complex q2 = q * q;
  Complex sum(1);
  Complex term = q;  // q^{n^2}
  Complex step = q;  // q^{2n-1}
  for (std::size_t n = 1; n < 10000000; ++n) {
    if (abs(term) < cutoff && n > 2) {
      return sum;
    }
    Complex t = term * Real(2);
    sum += (alternating && n % 2 == 1) ? -t : t;
    step *= q2;
    term *= step;
  }
  throw ConvergenceError("theta series did not converge");
}

}  // namespace

Complex theta(int which, const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  ModularPoint p = from_tau(tau, ctx);
  switch (which) {
    case 2: {
      const Complex& Q = p.Q();
      const Real cutoff = ctx.term_cutoff();
      const Real denom = 1 - abs(Q);
      Complex prod(1);
      Complex Qn = Q;
      for (std::size_t n = 1;; ++n) {
        if (abs(Qn) * 3 < cutoff * denom) {
          break;
        }
        Complex plus = Complex(1) + Qn;
        prod *= (Complex(1) - Qn) * plus * plus;
        Qn *= Q;
        if (n > 10000000) {
          throw ConvergenceError("theta_2 product did not converge");
        }
      }
      return Real(2) * frac_power(p, Base::q, Rational(1, 4)) * prod;
    }
    case 3:
      return gaussian_theta(p, false);
    case 4:
      return gaussian_theta(p, true);
    default:
      throw DomainError("theta index must be 2, 3 or 4");
  }
}

Complex theta2_series(const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  ModularPoint p = from_tau(tau, ctx);
  const Real cutoff = ctx.term_cutoff();
  const Complex& Q = p.Q();
  Complex sum;
  Complex term(1);  // q^{n(n+1)}
  Complex step = Q;  // q^{2(n+1)}
  for (std::size_t n = 0; n < 10000000; ++n) {
    if (abs(term) < cutoff && n > 2) {
      return Real(2) * frac_power(p, Base::q, Rational(1, 4)) * sum;
    }
    sum += term;
    term *= step;
    step *= Q;
  }
  throw ConvergenceError("theta_2 series did not converge");
}

// ---------------------------------------------------------------------------
// Exact expansions

namespace {

// Dense integer power series truncated to a fixed length.
class IntSeries {
 public:
  explicit IntSeries(std::size_t len) : c_(len) {
    if (len > 0) {
      c_[0] = 1;
    }
  }
  // *= (1 - s x^k)
  void mul1(int s, std::size_t k) {
    if (k >= c_.size()) {
      return;
    }
    for (std::size_t i = c_.size() - 1; i >= k; --i) {
      if (s > 0) {
        c_[i] -= c_[i - k];
      } else {
        c_[i] += c_[i - k];
      }
      if (i == k) {
        break;
      }
    }
  }
  // /= (1 - s x^k)
  void div1(int s, std::size_t k) {
    if (k >= c_.size()) {
      return;
    }
    for (std::size_t i = k; i < c_.size(); ++i) {
      if (s > 0) {
        c_[i] += c_[i - k];
      } else {
        c_[i] -= c_[i - k];
      }
    }
  }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return c_; }

 private:
  std::vector<BigInt> c_;
};

std::vector<BigInt> expand_integer(MockName name, std::size_t N) {
  std::vector<BigInt> out(N + 1);
  auto add = [&](std::size_t shift, const IntSeries& s, int weight) {
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      out[shift + i] += weight * c[i];
    }
  };
  for (std::size_t n = 0;; ++n) {
    std::size_t shift = 0;
    switch (name) {
      case MockName::chi0:
      case MockName::chi1:
        shift = n;
        break;
      case MockName::omega:
      case MockName::rho:
        shift = 2 * n * (n + 1);
        break;
      case MockName::f:
        shift = n * n;
        break;
      case MockName::xi:
        shift = n == 0 ? 0 : 6 * n * (n - 1) + 1;
        break;
    }
    if (shift > N) {
      break;
    }
    IntSeries s(N + 1 - shift);
    int weight = 1;
    switch (name) {
      case MockName::chi0:
        for (std::size_t m = n + 1; m <= 2 * n; ++m) {
          s.div1(1, m);
        }
        break;
      case MockName::chi1:
        for (std::size_t m = n + 1; m <= 2 * n + 1; ++m) {
          s.div1(1, m);
        }
        break;
      case MockName::omega:
        for (std::size_t j = 0; j <= n; ++j) {
          s.div1(1, 2 * j + 1);
          s.div1(1, 2 * j + 1);
        }
        break;
      case MockName::f:
        for (std::size_t j = 1; j <= n; ++j) {
          s.div1(-1, j);
          s.div1(-1, j);
        }
        break;
      case MockName::rho:
        for (std::size_t j = 0; j <= n; ++j) {
          s.mul1(1, 2 * j + 1);
          s.div1(1, 6 * j + 3);
        }
        break;
      case MockName::xi:
        if (n > 0) {
          weight = 2;
          for (std::size_t j = 0; j < n; ++j) {
            s.div1(1, 6 * j + 1);
            s.div1(1, 6 * j + 5);
          }
        }
        break;
    }
    add(shift, s, weight);
  }
  return out;
}

double coeff_tail_estimate(const std::vector<BigRational>& c, double radius) {
  double maxc = 0.0;
  for (const auto& x : c) {
    maxc = std::max(maxc, std::abs(x.convert_to<double>()));
  }
  return 2.0 * std::pow(radius, static_cast<double>(c.size())) * maxc;
}

}  // namespace

TruncatedQSeries series_expand(const MockThetaId& id, std::size_t N) {
  if (N > 10000) {
    throw DomainError("series_expand supports N <= 10000");
  }
  TruncatedQSeries s;
  s.base = Base::q;
  s.prefactor_exp = Rational(0);
  for (auto& c : expand_integer(id.name, N)) {
    s.coeffs.emplace_back(c);
  }
  s.tail_bound = coeff_tail_estimate(s.coeffs, s.disc_radius);
  return s;
}

TruncatedQSeries k_expand(int which, std::size_t N) {
  TruncatedQSeries s;
  s.base = Base::Q;
  s.prefactor_exp = Rational(0);
  if (which == 0) {
    auto c = expand_integer(MockName::chi0, N);
    for (std::size_t n = 0; n <= N; ++n) {
      s.coeffs.emplace_back(n == 0 ? BigInt(2) - c[0] : BigInt(-c[n]));
    }
  } else if (which == 1) {
    auto c = N == 0 ? std::vector<BigInt>{} : expand_integer(MockName::chi1, N - 1);
    s.coeffs.emplace_back(0);
    for (std::size_t n = 1; n <= N; ++n) {
      s.coeffs.emplace_back(BigInt(-c[n - 1]));
    }
  } else {
    throw DomainError("K index must be 0 or 1");
  }
  s.tail_bound = coeff_tail_estimate(s.coeffs, s.disc_radius);
  return s;
}

std::vector<BigInt> euler_inverse_coeffs(std::size_t N) {
  if (N > 100000) {
    throw DomainError("euler_inverse_coeffs supports N <= 100000");
  }
  std::vector<BigInt> p(N + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1;; ++k) {
      std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) {
        break;
      }
      std::size_t g2 = k * (3 * k + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) {
        term += p[n - g2];
      }
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[n] = acc;
  }
  return p;
}

std::vector<BigInt> euler_product_coeffs(std::size_t N) {
  std::vector<BigInt> c(N + 1);
  c[0] = 1;
  for (std::size_t k = 1;; ++k) {
    std::size_t g1 = k * (3 * k - 1) / 2;
    if (g1 > N) {
      break;
    }
    int sign = k % 2 == 1 ? -1 : 1;
    c[g1] += sign;
    std::size_t g2 = k * (3 * k + 1) / 2;
    if (g2 <= N) {
      c[g2] += sign;
    }
  }
  return c;
}

namespace {

TruncatedQSeries convolve(const TruncatedQSeries& s, const std::vector<BigInt>& w,
                          double tail_factor) {
  if (s.base != Base::Q) {
    throw DomainError("Euler normalization applies to base-Q series");
  }
  TruncatedQSeries out = s;
  const std::size_t n = s.coeffs.size();
  for (std::size_t i = 0; i < n; ++i) {
    BigRational acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      if (w[j] != 0) {
        acc += s.coeffs[i - j] * BigRational(w[j]);
      }
    }
    out.coeffs[i] = acc;
  }
  out.tail_bound = s.tail_bound * tail_factor;
  return out;
}

}  // namespace

TruncatedQSeries normalize_by_euler(const TruncatedQSeries& s) {
  const std::size_t N = s.order();
  auto p = euler_inverse_coeffs(N);
  // 1/(r;r)_inf at the disc radius bounds the amplification of the tail.
  double amp = 1.0;
  for (std::size_t k = 1; k < 200; ++k) {
    amp /= 1.0 - std::pow(s.disc_radius, static_cast<double>(k));
  }
  return convolve(s, p, amp);
}

TruncatedQSeries multiply_by_euler(const TruncatedQSeries& s) {
  auto e = euler_product_coeffs(s.order());
  double amp = 1.0;
  for (std::size_t k = 1; k < 200; ++k) {
    amp *= 1.0 + std::pow(s.disc_radius, static_cast<double>(k));
  }
  return convolve(s, e, amp);
}

}  // namespace mocklab
