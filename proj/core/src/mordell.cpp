#include "mocklab/mordell.hpp"

#include "mocklab/errors.hpp"
#include "mocklab/qseries.hpp"

#include <algorithm>

namespace mocklab {

namespace {

Real abs_r(const Real& x) { return boost::multiprecision::abs(x); }

int sign_of(const Real& x) { return x < 0 ? -1 : 1; }

void check_polar(const Real& abs_beta, const Real& theta, double floor) {
  if (!(abs_beta > 0)) {
    throw DomainError("|alpha| must be positive");
  }
  const Real gap = pi() - abs_r(theta);
  if (gap < 0) {
    throw DomainError("|arg alpha| must not exceed pi");
  }
  if (gap < Real(floor)) {
    throw PoleProximityError("pi - |arg alpha| = " + to_decimal(gap, 6) +
                             " is below the pole-proximity floor " + to_decimal(Real(floor), 3));
  }
}

Real exclusion_for(const Real& theta) {
  Real gap = (pi() - abs_r(theta)) / 8;
  return std::min(Real("0.1"), gap);
}

Real ray_for(const Real& theta, const MordellOptions& opts) {
  return opts.ray_angle ? Real(*opts.ray_angle) : default_ray_angle(theta);
}

// Integrand of L(r, beta) and its beta-derivative.
struct LKernel {
  Complex beta;
  Real c1;
  Real c2;
  Real k = Real(3) / 2;

  [[nodiscard]] Complex value(const Complex& z) const {
    const Complex w = beta * z;
    return exp(-(w * z) * k) * (cosh(w * c1) + cosh(w * c2)) / cosh(w * k);
  }
  [[nodiscard]] Complex dbeta(const Complex& z) const {
    const Complex w = beta * z;
    const Complex ch = cosh(w * k);
    const Complex r = (cosh(w * c1) + cosh(w * c2)) / ch;
    const Complex dr = (c1 * sinh(w * c1) + c2 * sinh(w * c2)) / ch - k * r * tanh(w * k);
    return exp(-(w * z) * k) * (z * dr - k * z * z * r);
  }
};

RayIntegrand l_ray(const LKernel& k, const Real& theta, bool derivative) {
  RayIntegrand g;
  if (derivative) {
    g.f = [k](const Complex& z) { return k.dbeta(z); };
  } else {
    g.f = [k](const Complex& z) { return k.value(z); };
  }
  g.gauss = k.beta * k.k;
  g.scale = Real(10);
  const Real half_pi = pi() / 2;
  g.pole_angles = {half_pi - theta, -half_pi - theta};
  g.exclusion = exclusion_for(theta);
  return g;
}

QuadratureResult l_polar_impl(const Rational& r, const Real& abs_beta, const Real& theta,
                              const PrecisionContext& ctx, const MordellOptions& opts,
                              bool derivative) {
  PrecisionScope scope(ctx);
  check_polar(abs_beta, theta, opts.pole_floor);
  LKernel k{abs_beta * expi(theta), Real(3) * r.to_real() - 2, Real(3) * r.to_real() - 1};
  return integrate_ray(l_ray(k, theta, derivative), ray_for(theta, opts), ctx, opts.quad);
}

}  // namespace

Real default_ray_angle(const Real& theta) {
  const Real p = pi();
  Real phi = -theta / 2;
  if (abs_r(theta) > p / 2) {
    phi -= sign_of(theta) * p / 8;
  }
  return phi;
}

QuadratureResult l_integral_polar(const Rational& r, const Real& abs_beta, const Real& theta,
                                  const PrecisionContext& ctx, const MordellOptions& opts) {
  return l_polar_impl(r, abs_beta, theta, ctx, opts, false);
}

QuadratureResult l_integral_dbeta_polar(const Rational& r, const Real& abs_beta, const Real& theta,
                                        const PrecisionContext& ctx, const MordellOptions& opts) {
  return l_polar_impl(r, abs_beta, theta, ctx, opts, true);
}

QuadratureResult l_integral_detailed(const Rational& r, const Complex& beta, const PrecisionContext& ctx,
                                     const MordellOptions& opts) {
  PrecisionScope scope(ctx);
  const Real theta = arg(beta);
  if (!(abs_r(theta) < pi())) {
    throw DomainError("|arg alpha| must be < pi");
  }
  return l_integral_polar(r, abs(beta), theta, ctx, opts);
}

Complex l_integral(const Rational& r, const Complex& beta, const PrecisionContext& ctx) {
  return l_integral_detailed(r, beta, ctx).value;
}

namespace {

QuadratureResult hyperbolic_integral(const Complex& alpha, const PrecisionContext& ctx,
                                     const MordellOptions& opts, bool is_w3) {
  PrecisionScope scope(ctx);
  const Real theta = arg(alpha);
  if (!(abs_r(theta) < pi())) {
    throw DomainError("|arg alpha| must be < pi");
  }
  check_polar(abs(alpha), theta, opts.pole_floor);
  RayIntegrand g;
  const Real three(3);
  const Real k = three / 2;
  if (is_w3) {
    g.f = [alpha, three](const Complex& z) {
      const Complex w = alpha * z;
      if (w.re == 0 && w.im == 0) {
        return Complex(1 / three);
      }
      return exp(-(w * z) * three) * sinh(w) / sinh(w * three);
    };
    g.gauss = alpha * three;
  } else {
    g.f = [alpha, three, k](const Complex& z) {
      const Complex w = alpha * z;
      return exp(-(w * z) * k) * cosh(w) / cosh(w * three);
    };
    g.gauss = alpha * k;
  }
  const Real half_pi = pi() / 2;
  g.pole_angles = {half_pi - theta, -half_pi - theta};
  g.exclusion = exclusion_for(theta);
  return integrate_ray(g, ray_for(theta, opts), ctx, opts.quad);
}

}  // namespace

QuadratureResult w3_integral_detailed(const Complex& alpha, const PrecisionContext& ctx,
                                      const MordellOptions& opts) {
  return hyperbolic_integral(alpha, ctx, opts, true);
}

Complex w3_integral(const Complex& alpha, const PrecisionContext& ctx) {
  return w3_integral_detailed(alpha, ctx).value;
}

QuadratureResult w2_integral_detailed(const Complex& alpha, const PrecisionContext& ctx,
                                      const MordellOptions& opts) {
  return hyperbolic_integral(alpha, ctx, opts, false);
}

Complex w2_integral(const Complex& alpha, const PrecisionContext& ctx) {
  return w2_integral_detailed(alpha, ctx).value;
}

namespace {

LVector l_vector_polar(const Real& A, const Real& theta, const PrecisionContext& ctx,
                       const MordellOptions& opts) {
  PrecisionScope scope(ctx);
  const Complex pref = boost::multiprecision::sqrt(135 * A / pi()) * expi(theta / 2);
  QuadratureResult a = l_integral_polar(Rational(1, 5), 10 * A, theta, ctx, opts);
  QuadratureResult b = l_integral_polar(Rational(2, 5), 10 * A, theta, ctx, opts);
  const Real m = abs(pref);
  return {pref * a.value, pref * b.value, m * std::max(a.err_estimate, b.err_estimate)};
}

}  // namespace

LVector l_vector(const Complex& alpha, const PrecisionContext& ctx, const MordellOptions& opts) {
  PrecisionScope scope(ctx);
  const Real theta = arg(alpha);
  if (!(abs_r(theta) < pi())) {
    throw DomainError("|arg alpha| must be < pi");
  }
  return l_vector_polar(abs(alpha), theta, ctx, opts);
}

Complex pv_sum(const Real& a, const Real& p, const Complex& t, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(p > 0)) {
    throw DomainError("p must be positive");
  }
  if (!(t.re > 0)) {
    throw DomainError("Re t must be positive");
  }
  const Complex den = Real(4) * p * t;
  const Real cutoff = ctx.term_cutoff();
  Complex sum;
  for (long k = 0; k < 10000000; ++k) {
    const Real c = Real(2 * k + 1) * p;
    const Real xm = a - c;
    const Real xp = a + c;
    Complex term = exp(-Complex(xm * xm) / den) + exp(-Complex(xp * xp) / den);
    sum += (k % 2 == 0) ? term : -term;
    if (k >= 1 && c > abs_r(a) && abs(term) < cutoff) {
      return sum;
    }
  }
  throw ConvergenceError("pv_sum did not converge");
}

QuadratureResult pv_quadrature_detailed(const Real& a, const Real& p, const Real& t,
                                        const PrecisionContext& ctx, PvGaussian gaussian) {
  PrecisionScope scope(ctx);
  if (!(p > 0)) {
    throw DomainError("p must be positive");
  }
  if (!(t > 0)) {
    throw DomainError("t must be real and positive");
  }
  const Real b = gaussian == PvGaussian::matched ? Real(p * t) : Real(p / t);
  const Real d = pi() / p;
  const Real half = d / 2;
  const Real tol = ctx.eps();
  auto g = [&](const Real& x) {
    return boost::multiprecision::exp(-b * x * x) * boost::multiprecision::cos(a * x) /
           boost::multiprecision::cos(p * x);
  };
  QuadOptions qo;
  qo.scheme = QuadScheme::gauss_patch;
  QuadratureResult out;
  out.scheme = QuadScheme::gauss_patch;
  out.err_estimate = Real(0);
  for (long k = 0; k < 100000; ++k) {
    const Real lo = d * Real(k);
    const Real envelope = boost::multiprecision::exp(-b * lo * lo);
    if (k >= 1 && envelope < tol * pow2(-8)) {
      out.err_estimate += envelope;
      const Real scale = boost::multiprecision::sqrt(4 * p * t / pi());
      out.value = out.value * scale;
      out.err_estimate *= scale;
      return out;
    }
    const Real center = lo + half;
    // The odd part about the pole cancels; integrate the even part.
    auto even = [&](const Real& s) { return Complex(g(center + s) + g(center - s)); };
    QuadratureResult w = integrate_interval(even, Real(0), half, ctx, qo);
    out.value += w.value;
    out.err_estimate += w.err_estimate;
    out.nodes_used += w.nodes_used;
  }
  throw ConvergenceError("pv_quadrature did not reach the Gaussian tail");
}

Real pv_quadrature(const Real& a, const Real& p, const Real& t, const PrecisionContext& ctx,
                   PvGaussian gaussian) {
  return pv_quadrature_detailed(a, p, t, ctx, gaussian).value.re;
}

LVector lateral_L(const Real& abs_alpha, const Real& theta, const PrecisionContext& ctx,
                  const MordellOptions& opts) {
  PrecisionScope scope(ctx);
  if (abs_r(theta) < pi() / 2) {
    throw DomainError("lateral_L needs pi/2 <= |theta| < pi");
  }
  return l_vector_polar(abs_alpha, theta, ctx, opts);
}

LateralSample lateral_sample(const Real& abs_alpha, const Real& eps, int side,
                             const PrecisionContext& ctx, const MordellOptions& opts) {
  PrecisionScope scope(ctx);
  if (!(abs_alpha > 0)) {
    throw DomainError("|alpha| must be positive");
  }
  const Real theta = Real(side) * (pi() - eps);
  const Complex alpha = abs_alpha * expi(theta);
  const Complex pref = boost::multiprecision::sqrt(135 * abs_alpha / pi()) * expi(theta / 2);
  const Complex minus_i_side = Complex(Real(0), Real(-side));
  LateralSample s;
  s.eps = eps;
  s.side = side;
  s.err_estimate = Real(0);
  const Real m = abs(pref);
  for (int j = 0; j < 2; ++j) {
    const Rational r(j + 1, 5);
    QuadratureResult v = l_integral_polar(r, 10 * abs_alpha, theta, ctx, opts);
    QuadratureResult dv = l_integral_dbeta_polar(r, 10 * abs_alpha, theta, ctx, opts);
    s.value[j] = pref * v.value;
    s.d_eps[j] = minus_i_side * (s.value[j] / Real(2) + Real(10) * alpha * pref * dv.value);
    s.err_estimate = std::max(s.err_estimate, m * (v.err_estimate + 10 * abs_alpha * dv.err_estimate));
  }
  return s;
}

Complex hermite_extrapolate(const std::vector<Real>& xs, const std::vector<Complex>& ys,
                            const std::vector<Complex>& ds) {
  const std::size_t n = 2 * xs.size();
  std::vector<Real> z(n);
  std::vector<std::vector<Complex>> q(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    z[2 * i] = xs[i];
    z[2 * i + 1] = xs[i];
    q[2 * i][0] = ys[i];
    q[2 * i + 1][0] = ys[i];
  }
  for (std::size_t i = 1; i < n; ++i) {
    q[i][1] = (z[i] == z[i - 1]) ? ds[i / 2] : (q[i][0] - q[i - 1][0]) / (z[i] - z[i - 1]);
  }
  for (std::size_t j = 2; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      q[i][j] = (q[i][j - 1] - q[i - 1][j - 1]) / (z[i] - z[i - j]);
    }
  }
  Complex r = q[n - 1][n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    r = r * Complex(-z[i]) + q[i][i];
  }
  return r;
}

Complex neville_extrapolate(const std::vector<Real>& xs, const std::vector<Complex>& ys) {
  std::vector<Complex> p = ys;
  const std::size_t n = xs.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      p[i] = (p[i] * (-xs[i + m]) + p[i + 1] * xs[i]) / (xs[i] - xs[i + m]);
    }
  }
  return p[0];
}

StokesPrediction stokes_prediction(const Real& abs_alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real A = abs_alpha;
  const Real pi2 = pi() * pi();
  const Real lu = 2 * A;        // -log u
  const Real lv = 2 * pi2 / A;  // -log v
  const Complex u(boost::multiprecision::exp(-lu));
  const Complex v(boost::multiprecision::exp(-lv));
  const Complex x0u = unary_x(Unary::X0, u, ctx);
  const Complex x1u = unary_x(Unary::X1, u, ctx);
  const Complex x0v = unary_x(Unary::X0, v, ctx);
  const Complex x1v = unary_x(Unary::X1, v, ctx);
  auto e = [](const Real& minus_log, const Rational& r) {
    return boost::multiprecision::exp(-minus_log * r.to_real());
  };
  const Real three_halves("1.5");
  const Mat2 M = mixing_matrix(ctx);
  const Real root = boost::multiprecision::sqrt(pi() / A);
  StokesPrediction s;
  const Vec2 yu{x0u * e(lu, Rational(1, 120)), x1u * e(lu, Rational(49, 120))};
  const Vec2 yv{x0v * e(lv, Rational(1, 120)), x1v * e(lv, Rational(49, 120))};
  s.real_part = Complex(three_halves) * yu;
  s.imag_part = Complex(three_halves * root) * (M * yv);
  const Vec2 lit_u{x0u * e(lu, Rational(-1, 120)), x1u * e(lu, Rational(-49, 120))};
  const Vec2 lit_v{x0v * e(lv, Rational(-1, 120)), x1v * e(lv, Rational(-49, 120))};
  s.real_part_unscaled = lit_u;
  s.imag_part_unscaled = Complex(root) * (M * lit_v);
  return s;
}

std::vector<Real> default_eps_seq() {
  return {Real("0.2"), Real("0.1"), Real("0.05"), Real("0.025")};
}

namespace {

Vec2 extrapolate_side(const std::vector<LateralSample>& samples) {
  std::vector<Real> xs;
  for (const auto& s : samples) {
    xs.push_back(s.eps);
  }
  Vec2 out;
  for (int j = 0; j < 2; ++j) {
    std::vector<Complex> ys;
    std::vector<Complex> ds;
    for (const auto& s : samples) {
      ys.push_back(s.value[j]);
      ds.push_back(s.d_eps[j]);
    }
    out[j] = hermite_extrapolate(xs, ys, ds);
  }
  return out;
}

Vec2 re_part(const Vec2& v) { return {Complex(v[0].re), Complex(v[1].re)}; }
Vec2 im_part(const Vec2& v) { return {Complex(v[0].im), Complex(v[1].im)}; }

}  // namespace

StokesDecomposition stokes_decompose(const Real& abs_alpha, const std::vector<Real>& eps_seq,
                                     const PrecisionContext& ctx, const MordellOptions& opts,
                                     bool throw_on_instability) {
  PrecisionScope scope(ctx);
  if (eps_seq.empty()) {
    throw DomainError("eps sequence is empty");
  }
  for (std::size_t i = 0; i < eps_seq.size(); ++i) {
    if (!(eps_seq[i] > 0) || eps_seq[i] > pi() / 2) {
      throw DomainError("eps values must lie in (0, pi/2]");
    }
    if (i > 0 && !(eps_seq[i] < eps_seq[i - 1])) {
      throw DomainError("eps sequence must be strictly decreasing");
    }
    if (eps_seq[i] < Real(opts.pole_floor)) {
      throw PoleProximityError("eps = " + to_decimal(eps_seq[i], 6) +
                               " is below the pole-proximity floor " +
                               to_decimal(Real(opts.pole_floor), 3));
    }
  }
  StokesDecomposition out;
  out.abs_alpha = abs_alpha;
  out.prediction = stokes_prediction(abs_alpha, ctx);
  std::vector<LateralSample> lower;
  std::vector<LateralSample> upper;
  for (const Real& e : eps_seq) {
    lower.push_back(lateral_sample(abs_alpha, e, -1, ctx, opts));
    upper.push_back(lateral_sample(abs_alpha, e, +1, ctx, opts));
  }
  out.extrapolated_lower = extrapolate_side(lower);
  out.extrapolated_upper = extrapolate_side(upper);

  const StokesPrediction& pr = out.prediction;
  const Complex i = i_unit();
  const Vec2 plus = pr.real_part + i * pr.imag_part;
  const Vec2 minus = pr.real_part - i * pr.imag_part;
  const bool lower_is_plus =
      norm2(out.extrapolated_lower - plus) <= norm2(out.extrapolated_lower - minus);
  out.matched_side = lower_is_plus ? "lower" : "upper";
  out.upper_sign = lower_is_plus ? -1 : 1;
  const int side = lower_is_plus ? -1 : 1;
  const auto& matched = lower_is_plus ? lower : upper;
  const Vec2& ext = lower_is_plus ? out.extrapolated_lower : out.extrapolated_upper;
  const Vec2& ext_other = lower_is_plus ? out.extrapolated_upper : out.extrapolated_lower;
  const Vec2 imag_signed = lower_is_plus ? pr.imag_part : Complex(-1) * pr.imag_part;

  for (std::size_t k = 0; k < eps_seq.size(); ++k) {
    StokesRow row;
    row.eps = eps_seq[k];
    row.lower = lower[k].value;
    row.upper = upper[k].value;
    const Vec2 diff = matched[k].value - (pr.real_part + i * imag_signed);
    row.residual = norm2(diff);
    row.residual_real = norm2(re_part(diff));
    row.residual_imag = norm2(im_part(diff));
    out.rows.push_back(row);
  }
  out.residual_real = norm2(re_part(ext) - pr.real_part);
  out.residual_imag = norm2(im_part(ext) - imag_signed);
  out.residual_other_side = norm2(ext_other - (pr.real_part - i * imag_signed));

  if (matched.size() >= 2) {
    std::vector<LateralSample> tail(matched.begin() + 1, matched.end());
    out.extrapolation_spread = norm2(extrapolate_side(tail) - ext);
  } else {
    out.extrapolation_spread = norm2(matched.front().value - ext);
  }

  std::vector<Real> xs(eps_seq.begin(), eps_seq.end());
  for (int j = 0; j < 2; ++j) {
    std::vector<Complex> ys;
    for (const auto& s : matched) {
      ys.push_back(s.value[j]);
    }
    out.extrapolated_plain[j] = neville_extrapolate(xs, ys);
  }
  out.residual_plain = norm2(out.extrapolated_plain - (pr.real_part + i * imag_signed));

  MordellOptions on_line = opts;
  on_line.pole_floor = 0.0;
  out.direct_limit = lateral_sample(abs_alpha, Real(0), side, ctx, on_line).value;
  out.residual_direct = norm2(out.direct_limit - (pr.real_part + i * imag_signed));

  const Vec2 median = Complex(Real("0.5")) * (out.extrapolated_lower + out.extrapolated_upper);
  out.residual_median = norm2(median - pr.real_part);

  for (int j = 0; j < 2; ++j) {
    out.literal_ratio[j] = Complex(ext[j].re / pr.real_part_unscaled[j].re);
  }

  out.monotone = true;
  for (std::size_t k = 1; k < out.rows.size(); ++k) {
    if (!(out.rows[k].residual < out.rows[k - 1].residual)) {
      out.monotone = false;
    }
  }
  if (!out.monotone && throw_on_instability) {
    throw ExtrapolationError("lateral residuals do not decrease along the eps sequence");
  }
  return out;
}

}  // namespace mocklab
