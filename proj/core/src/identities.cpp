#include "mocklab/identities.hpp"

#include "mocklab/errors.hpp"
#include "mocklab/modpoint.hpp"
#include "mocklab/qseries.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace mocklab {

// ---------------------------------------------------------------------------
// Residual bookkeeping

ResidualBuilder& ResidualBuilder::add(const Complex& coef, const Complex& value, const Real& err) {
  const Complex term = coef * value;
  sum_ += term;
  err_ += abs(coef) * err;
  scale_ += abs(term);
  return *this;
}

Real ResidualBuilder::budget() const { return err_ + ctx_.rounding_floor() * scale_; }

IdentityEntry ResidualBuilder::entry(std::string label, const Complex& point, std::string kind) const {
  return make_entry(std::move(label), point, std::move(kind), abs(sum_), scale_, budget());
}

IdentityEntry make_entry(std::string label, const Complex& point, std::string kind,
                         const Real& abs_residual, const Real& scale, const Real& budget) {
  IdentityEntry e;
  e.label = std::move(label);
  e.point = point;
  e.point_kind = std::move(kind);
  e.abs_residual = abs_residual;
  e.rel_residual = scale > 0 ? Real(abs_residual / scale) : abs_residual;
  e.budget = budget;
  e.tolerance = budget * kBudgetFactor;
  e.pass = abs_residual <= e.tolerance;
  return e;
}

namespace {

Real abs_r(const Real& x) { return boost::multiprecision::abs(x); }

std::string short_real(const Real& x) { return render_real(x, 6); }

// Value and error of a series evaluation.
struct Val {
  Complex v;
  Real err;
};

Val mock(MockName n, const Complex& q, const PrecisionContext& ctx) {
  SeriesValue s = eval_mock_detailed(MockThetaId(n), q, ctx);
  return {s.value, s.tail_bound};
}

Val quad(const QuadratureResult& r) { return {r.value, r.err_estimate}; }

Complex csqrt(const Complex& z) { return BranchConvention::principal_sqrt(z); }

}  // namespace

// ---------------------------------------------------------------------------
// Order 5

std::vector<IdentityEntry> check_mf5_scalar(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_alpha(alpha, ctx);
  const Complex q14 = frac_power(p, Base::q1, Rational(4));
  const Val c0 = mock(MockName::chi0, p.q(), ctx);
  const Val c1 = mock(MockName::chi1, p.q(), ctx);
  const Val d0 = mock(MockName::chi0, q14, ctx);
  const Val d1 = mock(MockName::chi1, q14, ctx);
  const Complex five_alpha = alpha * Real(5);
  const Val l1 = quad(l_integral_detailed(Rational(1, 5), five_alpha, ctx));
  const Val l2 = quad(l_integral_detailed(Rational(2, 5), five_alpha, ctx));

  const Real root5 = boost::multiprecision::sqrt(Real(5));
  const Complex sm = csqrt(Complex(pi() * (5 - root5) / 5) / alpha);
  const Complex sp = csqrt(Complex(pi() * (5 + root5) / 5) / alpha);
  const Complex sl = csqrt(alpha * Real(135) / (2 * pi()));
  const Complex a = frac_power(p, Base::q1, Rational(-1, 30));
  const Complex b = frac_power(p, Base::q1, Rational(71, 30));
  const Complex two(2);

  ResidualBuilder r0(ctx);
  r0.add(frac_power(p, Base::q, Rational(-1, 120)), c0.v - two, c0.err)
      .add(sm * a, d0.v - two, d0.err)
      .add(sp * b, d1.v, d1.err)
      .add(sl, l1.v, l1.err);
  ResidualBuilder r1(ctx);
  r1.add(frac_power(p, Base::q, Rational(71, 120)), c1.v, c1.err)
      .add(sp * a, d0.v - two, d0.err)
      .add(-(sm * b), d1.v, d1.err)
      .add(sl, l2.v, l2.err);
  return {r0.entry("mf5_scalar_chi0", alpha, "alpha"), r1.entry("mf5_scalar_chi1", alpha, "alpha")};
}

namespace {

// (Q^{-1/120} K0(Q), Q^{-49/120} K1(Q)) with errors, for base Q or Q1.
struct KVec {
  Vec2 v;
  Real err[2];
};

KVec k_vector(const ModularPoint& p, bool s_side, const PrecisionContext& ctx) {
  const Base base = s_side ? Base::Q1 : Base::Q;
  auto [k0, k1] = k_pair_detailed(s_side ? p.Q1() : p.Q(), ctx);
  const Complex f0 = frac_power(p, base, Rational(-1, 120));
  const Complex f1 = frac_power(p, base, Rational(-49, 120));
  KVec out;
  out.v = {f0 * k0.value, f1 * k1.value};
  out.err[0] = abs(f0) * k0.tail_bound;
  out.err[1] = abs(f1) * k1.tail_bound;
  return out;
}

IdentityEntry combine(std::string label, const Complex& point, const ResidualBuilder& a,
                      const ResidualBuilder& b) {
  const Real res = norm2(Vec2{a.sum(), b.sum()});
  return make_entry(std::move(label), point, "alpha", res, a.scale() + b.scale(),
                    a.budget() + b.budget());
}

}  // namespace

IdentityEntry check_mf5_matrix(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_alpha(alpha, ctx);
  const KVec kq = k_vector(p, false, ctx);
  const KVec kq1 = k_vector(p, true, ctx);
  const LVector lv = l_vector(alpha, ctx);
  const Mat2 M = mixing_matrix(ctx);
  const Complex s = csqrt(Complex(pi()) / alpha);
  const Vec2 l = lv.vec();
  ResidualBuilder r[2] = {ResidualBuilder(ctx), ResidualBuilder(ctx)};
  for (int i = 0; i < 2; ++i) {
    r[i].add(l[i], lv.err_estimate).add(Complex(-1), kq.v[i], kq.err[i]);
    for (int j = 0; j < 2; ++j) {
      r[i].add(-(s * M.m[i][j]), kq1.v[j], kq1.err[j]);
    }
  }
  return combine("mf5_matrix", alpha, r[0], r[1]);
}

IdentityEntry check_l_consistency(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const LVector a = l_vector(alpha, ctx);
  const LVector b = l_vector(Complex(pi() * pi()) / alpha, ctx);
  const Mat2 M = mixing_matrix(ctx);
  const Complex s = csqrt(Complex(pi()) / alpha);
  const Vec2 va = a.vec();
  const Vec2 vb = b.vec();
  ResidualBuilder r[2] = {ResidualBuilder(ctx), ResidualBuilder(ctx)};
  for (int i = 0; i < 2; ++i) {
    r[i].add(va[i], a.err_estimate);
    for (int j = 0; j < 2; ++j) {
      r[i].add(-(s * M.m[i][j]), vb[j], b.err_estimate);
    }
  }
  return combine("lvec_consistency", alpha, r[0], r[1]);
}

IdentityEntry check_l_fixed_point(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex alpha(pi());
  const LVector a = l_vector(alpha, ctx);
  const Mat2 M = mixing_matrix(ctx);
  const Vec2 v = a.vec();
  ResidualBuilder r[2] = {ResidualBuilder(ctx), ResidualBuilder(ctx)};
  for (int i = 0; i < 2; ++i) {
    r[i].add(v[i], a.err_estimate);
    for (int j = 0; j < 2; ++j) {
      r[i].add(-M.m[i][j], v[j], a.err_estimate);
    }
  }
  return combine("lvec_fixed_point", alpha, r[0], r[1]);
}

std::vector<IdentityEntry> check_stokes(const Real& abs_alpha, const PrecisionContext& ctx,
                                        const std::vector<Real>& eps_seq) {
  PrecisionScope scope(ctx);
  const StokesDecomposition d = stokes_decompose(abs_alpha, eps_seq, ctx, {}, false);
  const Complex point(abs_alpha);
  const Real budget = d.extrapolation_spread;

  std::vector<std::pair<std::string, std::string>> detail;
  detail.emplace_back("matched_side", d.matched_side);
  detail.emplace_back("upper_sign", d.upper_sign > 0 ? "+i" : "-i");
  std::ostringstream rows;
  for (std::size_t k = 0; k < d.rows.size(); ++k) {
    rows << (k ? "," : "") << short_real(d.rows[k].eps) << ":" << short_real(d.rows[k].residual);
  }
  detail.emplace_back("lateral_residuals", rows.str());
  detail.emplace_back("extrapolation_spread", short_real(d.extrapolation_spread));
  detail.emplace_back("residual_plain_polynomial", short_real(d.residual_plain));
  detail.emplace_back("residual_direct_on_line", short_real(d.residual_direct));
  detail.emplace_back("residual_other_side", short_real(d.residual_other_side));
  detail.emplace_back("residual_median", short_real(d.residual_median));
  detail.emplace_back("literal_ratio",
                      short_real(d.literal_ratio[0].re) + "," + short_real(d.literal_ratio[1].re));

  IdentityEntry re = make_entry("stokes_real", point, "abs_alpha", d.residual_real,
                                norm2(d.prediction.real_part), budget);
  IdentityEntry im = make_entry("stokes_imag", point, "abs_alpha", d.residual_imag,
                                norm2(d.prediction.imag_part), budget);
  IdentityEntry mono = make_entry("stokes_monotone", point, "abs_alpha", Real(d.monotone ? 0 : 1),
                                  Real(1), Real(0));
  re.detail = detail;
  im.detail = {{"matched_side", d.matched_side}};
  mono.detail = {{"lateral_residuals", rows.str()}};
  return {re, im, mono};
}

// ---------------------------------------------------------------------------
// Order 3

IdentityEntry check_mf3_omega(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_alpha(alpha, ctx);
  const Val w_q = mock(MockName::omega, -p.q(), ctx);
  const Val w_q1 = mock(MockName::omega, -p.q1(), ctx);
  const Val w3 = quad(w3_integral_detailed(alpha, ctx));
  ResidualBuilder r(ctx);
  r.add(frac_power(p, Base::q, Rational(2, 3)), w_q.v, w_q.err)
      .add(csqrt(Complex(pi()) / alpha) * frac_power(p, Base::q1, Rational(2, 3)), w_q1.v, w_q1.err)
      .add(-csqrt(alpha * Real(12) / pi()), w3.v, w3.err);
  return r.entry("mf3_omega", alpha, "alpha");
}

IdentityEntry check_mf3_omega_f(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_alpha(alpha, ctx);
  const Val w_q = mock(MockName::omega, p.q(), ctx);
  const Val f_q1 = mock(MockName::f, p.Q1(), ctx);
  const Val w2 = quad(w2_integral_detailed(alpha / Real(2), ctx));
  ResidualBuilder r(ctx);
  r.add(frac_power(p, Base::q, Rational(2, 3)), w_q.v, w_q.err)
      .add(-(csqrt(Complex(pi()) / (alpha * Real(4))) * frac_power(p, Base::q1, Rational(-1, 12))),
           f_q1.v, f_q1.err)
      .add(csqrt(alpha * Real(3) / pi()), w2.v, w2.err);
  return r.entry("mf3_omega_f", alpha, "alpha");
}

IdentityEntry check_mf3_alternative(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_alpha(alpha, ctx);
  const Val w3 = quad(w3_integral_detailed(alpha, ctx));
  ResidualBuilder r(ctx);
  r.add(csqrt(alpha * Real(12) / pi()), w3.v, w3.err);
  // -(q^{2/3}(-rho(-q)) + xi(-q^{1/3})/2), for q and (weighted) q1.
  auto side = [&](const Complex& nome, Base base, const Complex& weight) {
    const Val rho = mock(MockName::rho, -nome, ctx);
    const Val xi = mock(MockName::xi, -frac_power(p, base, Rational(1, 3)), ctx);
    r.add(weight * frac_power(p, base, Rational(2, 3)), rho.v, rho.err);
    r.add(-(weight / Real(2)), xi.v, xi.err);
  };
  side(p.q(), Base::q, Complex(1));
  side(p.q1(), Base::q1, csqrt(Complex(pi()) / alpha));
  return r.entry("mf3_alternative", alpha, "alpha");
}

Real growth_statistic(const Complex& alpha, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_alpha(alpha, ctx);
  const Real w = abs(eval_mock(MockThetaId(MockName::omega), p.q(), ctx));
  return boost::multiprecision::sqrt(abs(alpha)) * boost::multiprecision::exp(-p.alpha1().re / 12) * w;
}

std::vector<Real> default_growth_moduli() {
  return {Real(1), Real("0.5"), Real("0.2"), Real("0.1"), Real("0.05"), Real("0.02")};
}

IdentityEntry check_growth_omega(const Real& theta0, const std::vector<Real>& moduli,
                                 const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (moduli.size() < 2) {
    throw DomainError("growth check needs at least two moduli");
  }
  if (!(abs_r(theta0) < pi() / 2)) {
    throw DomainError("growth ray must satisfy |arg alpha| < pi/2");
  }
  std::vector<Real> sorted = moduli;
  std::sort(sorted.begin(), sorted.end(), [](const Real& a, const Real& b) { return a > b; });
  std::vector<Real> s;
  std::ostringstream values;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    s.push_back(growth_statistic(sorted[k] * expi(theta0), ctx));
    values << (k ? "," : "") << short_real(sorted[k]) << ":" << short_real(s.back());
  }
  const std::size_t half = (s.size() + 1) / 2;
  const Real large_max = *std::max_element(s.begin(), s.begin() + static_cast<long>(half));
  const Real small_max = *std::max_element(s.begin() + static_cast<long>(half), s.end());
  const Real ratio = small_max / large_max;
  IdentityEntry e;
  e.label = "growth_omega";
  e.point = expi(theta0);
  e.point_kind = "alpha";
  e.abs_residual = ratio;
  e.rel_residual = ratio;
  e.budget = Real(2);
  e.tolerance = Real(2);
  e.pass = ratio <= 2;
  e.detail = {{"ray_arg", short_real(theta0)}, {"statistic", values.str()}};
  return e;
}

// ---------------------------------------------------------------------------
// Eta and theta

std::vector<IdentityEntry> check_eta_theta(const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(tau.im > 0)) {
    throw DomainError("Im tau must be positive");
  }
  const Real cutoff = ctx.term_cutoff();
  auto val = [&](const Complex& v) { return Val{v, cutoff * 4 * (1 + abs(v))}; };
  const Complex one(1);
  const Complex inv = Complex(-1) / tau;
  const Complex root = csqrt(Complex(tau.im, -tau.re));  // sqrt(-i tau)
  std::vector<IdentityEntry> out;

  auto run = [&](const std::string& label, const std::function<void(ResidualBuilder&)>& fill) {
    try {
      ResidualBuilder r(ctx);
      fill(r);
      out.push_back(r.entry(label, tau, "tau"));
    } catch (const Error& e) {
      out.push_back(error_entry(label, tau, "tau", e.what()));
    }
  };
  run("eta_T", [&](ResidualBuilder& r) {
    const Val a = val(eta(tau + one, ctx));
    const Val b = val(eta(tau, ctx));
    r.add(a.v, a.err).add(-expi(pi() / 12), b.v, b.err);
  });
  run("eta_S", [&](ResidualBuilder& r) {
    const Val a = val(eta(inv, ctx));
    const Val b = val(eta(tau, ctx));
    r.add(a.v, a.err).add(-root, b.v, b.err);
  });
  run("theta3_T2", [&](ResidualBuilder& r) {
    const Val a = val(theta(3, tau + Complex(2), ctx));
    const Val b = val(theta(3, tau, ctx));
    r.add(a.v, a.err).add(Complex(-1), b.v, b.err);
  });
  run("theta3_S", [&](ResidualBuilder& r) {
    const Val a = val(theta(3, inv, ctx));
    const Val b = val(theta(3, tau, ctx));
    r.add(a.v, a.err).add(-root, b.v, b.err);
  });
  run("chain_theta3_theta4", [&](ResidualBuilder& r) {
    const Val a = val(theta(3, one + inv, ctx));
    const Val b = val(theta(4, inv, ctx));
    r.add(a.v, a.err).add(Complex(-1), b.v, b.err);
  });
  run("chain_theta4_theta2", [&](ResidualBuilder& r) {
    const Val a = val(theta(4, inv, ctx));
    const Val b = val(theta(2, tau, ctx));
    r.add(a.v, a.err).add(-root, b.v, b.err);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

std::vector<IdentityEntry> group_relations(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Mat2 M = mixing_matrix(ctx);
  const Mat2 D = phase_matrix(ctx);
  const Mat2 I = Mat2::identity();
  const Real budget = ctx.rounding_floor() * 64;
  const Mat2 minus_md = Complex(-1) * (M * D);
  return {
      make_entry("D^20", Complex(0), "none", (D.pow(20) - I).max_abs(), Real(1), budget),
      make_entry("M^2", Complex(0), "none", (M * M - I).max_abs(), Real(1), budget),
      make_entry("(-MD)^3", Complex(0), "none", (minus_md.pow(3) - I).max_abs(), Real(1), budget),
  };
}

// ---------------------------------------------------------------------------
// Wronskian

VPair v_pair(const std::vector<BigRational>& h0, const std::vector<BigRational>& h1,
             const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const ModularPoint p = from_tau(tau, ctx);
  const Complex two_pi_i(Real(0), 2 * pi());
  VPair out;
  out.scale = Real(0);
  auto build = [&](const std::vector<BigRational>& h, const Rational& shift, Complex& v, Complex& dv) {
    for (std::size_t n = 0; n < h.size(); ++n) {
      if (h[n] == 0) {
        continue;
      }
      const Rational e = Rational(static_cast<std::int64_t>(n)) - shift;
      const Complex term = Complex(to_real(h[n])) * frac_power(p, Base::Q, e);
      const Complex dterm = two_pi_i * e.to_real() * term;
      v += term;
      dv += dterm;
      out.scale += abs(term) + abs(dterm);
    }
  };
  build(h0, Rational(1, 20), out.v[0], out.dv[0]);
  build(h1, Rational(9, 20), out.v[1], out.dv[1]);
  return out;
}

Complex wronskian(const VPair& v) { return v.v[0] * v.dv[1] - v.dv[0] * v.v[1]; }

std::vector<IdentityEntry> wronskian_periodicity(const std::vector<BigRational>& h0,
                                                 const std::vector<BigRational>& h1,
                                                 const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const VPair a = v_pair(h0, h1, tau, ctx);
  const VPair b = v_pair(h0, h1, tau + Complex(1), ctx);
  const Mat2 D = phase_matrix(ctx);
  const Real floor = ctx.rounding_floor();
  const Real v_res = norm2(b.v - D * a.v);
  const Real w_res = abs(wronskian(b) + wronskian(a));
  const Real w_scale = a.scale * a.scale + b.scale * b.scale;
  return {
      make_entry("v_T_step", tau, "tau", v_res, a.scale + b.scale, floor * 4 * (a.scale + b.scale)),
      make_entry("wronskian_T", tau, "tau", w_res, w_scale, floor * 8 * w_scale),
  };
}

GValue g_function(const std::vector<BigRational>& h0, const std::vector<BigRational>& h1,
                  const Complex& tau, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex tau1 = tau + Complex(1);
  const VPair a = v_pair(h0, h1, tau, ctx);
  const VPair b = v_pair(h0, h1, tau1, ctx);
  auto g = [&](const VPair& v, const Complex& t) {
    const Complex w = wronskian(v);
    return pow_int(w, 3) / pow_int(eta(t, ctx), 12);
  };
  GValue out;
  out.value = g(a, tau);
  const Complex g1 = g(b, tau1);
  const Real floor = ctx.rounding_floor();
  const Real wa = abs(wronskian(a));
  const Real rel_w = wa > 0 ? Real(floor * 8 * a.scale * a.scale / wa) : Real(0);
  const Real mag = abs(out.value) + abs(g1);
  const Real budget = mag * (3 * rel_w + 12 * (4 * ctx.term_cutoff() + floor)) + floor;
  out.t_invariance = make_entry("G_T", tau, "tau", abs(g1 - out.value), mag, budget);
  return out;
}

std::vector<std::pair<std::vector<BigRational>, std::vector<BigRational>>> random_rational_pairs(
    std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coeffs = [&]() {
    std::vector<BigRational> c;
    for (int n = 0; n <= 8; ++n) {
      const long num = static_cast<long>(rng() % 19) - 9;
      const long den = static_cast<long>(rng() % 9) + 1;
      c.emplace_back(BigInt(num), BigInt(den));
    }
    return c;
  };
  std::vector<std::pair<std::vector<BigRational>, std::vector<BigRational>>> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto a = coeffs();
    auto b = coeffs();
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

Suite parse_suite(const std::string& s) {
  static const std::pair<const char*, Suite> names[] = {
      {"mf5", Suite::mf5},           {"mf5_stokes", Suite::mf5_stokes},
      {"mf3", Suite::mf3},           {"theta_eta", Suite::theta_eta},
      {"algebra", Suite::algebra},   {"wronskian", Suite::wronskian},
      {"all", Suite::all}};
  for (const auto& [n, v] : names) {
    if (s == n) {
      return v;
    }
  }
  throw DomainError("unknown suite '" + s + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::mf5:
      return "mf5";
    case Suite::mf5_stokes:
      return "mf5_stokes";
    case Suite::mf3:
      return "mf3";
    case Suite::theta_eta:
      return "theta_eta";
    case Suite::algebra:
      return "algebra";
    case Suite::wronskian:
      return "wronskian";
    case Suite::all:
      return "all";
  }
  return "?";
}

Complex GridPoint::alpha() const {
  if (!is_tau) {
    return value;
  }
  const Real p = pi();
  return {p * value.im, -p * value.re};
}

Complex GridPoint::tau() const {
  if (is_tau) {
    return value;
  }
  const Real p = pi();
  return {-value.im / p, value.re / p};
}

std::vector<GridPoint> default_alpha_grid() {
  return {{Complex(pi()), false},          {Complex(1), false},
          {Complex(2), false},             {Complex(Real("0.5")), false},
          {Complex(Real(1), Real("0.5")), false}, {Complex(Real(2), Real(1)), false}};
}

std::vector<GridPoint> default_tau_grid() {
  return {{Complex(Real(0), Real(1)), true},
          {Complex(Real(0), Real(2)), true},
          {Complex(Real(1), Real(3)), true},
          {Complex(Real("0.2"), Real("1.1")), true}};
}

namespace {

constexpr std::uint64_t kWronskianSeed = 20240917;
constexpr std::size_t kWronskianPairs = 50;

void guarded(std::vector<IdentityEntry>& out, const std::string& label, const Complex& point,
             const std::string& kind, const std::function<std::vector<IdentityEntry>()>& f) {
  try {
    auto entries = f();
    out.insert(out.end(), entries.begin(), entries.end());
  } catch (const Error& e) {
    out.push_back(error_entry(label, point, kind, e.what()));
  }
}

void run_mf5(const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
             std::vector<IdentityEntry>& out) {
  for (const auto& g : grid) {
    const Complex a = g.alpha();
    guarded(out, "mf5_scalar", a, "alpha", [&] { return check_mf5_scalar(a, ctx); });
    guarded(out, "mf5_matrix", a, "alpha",
            [&] { return std::vector<IdentityEntry>{check_mf5_matrix(a, ctx)}; });
    guarded(out, "lvec_consistency", a, "alpha",
            [&] { return std::vector<IdentityEntry>{check_l_consistency(a, ctx)}; });
    if (abs_r(a.im) == 0 && abs_r(a.re - pi()) < ctx.eps()) {
      guarded(out, "lvec_fixed_point", a, "alpha",
              [&] { return std::vector<IdentityEntry>{check_l_fixed_point(ctx)}; });
    }
  }
}

void run_stokes(const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
                std::vector<IdentityEntry>& out) {
  std::vector<Real> moduli;
  for (const auto& g : grid) {
    moduli.push_back(abs(g.alpha()));
  }
  if (moduli.empty()) {
    moduli = {Real(1), pi()};
  }
  std::vector<std::string> sides;
  for (const Real& m : moduli) {
    const Complex point(m);
    guarded(out, "stokes", point, "abs_alpha", [&] {
      auto entries = check_stokes(m, ctx);
      for (const auto& [k, v] : entries.front().detail) {
        if (k == "matched_side") {
          sides.push_back(v);
        }
      }
      return entries;
    });
  }
  const bool same = !sides.empty() && std::all_of(sides.begin(), sides.end(),
                                                  [&](const std::string& s) { return s == sides[0]; });
  IdentityEntry e = make_entry("stokes_sign_consistency", Complex(0), "none", Real(same ? 0 : 1),
                               Real(1), Real(0));
  e.detail = {{"matched_side", sides.empty() ? "none" : (same ? sides[0] : "mixed")}};
  out.push_back(e);
}

void run_mf3(const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
             std::vector<IdentityEntry>& out) {
  for (const auto& g : grid) {
    const Complex a = g.alpha();
    guarded(out, "mf3_omega", a, "alpha",
            [&] { return std::vector<IdentityEntry>{check_mf3_omega(a, ctx)}; });
    guarded(out, "mf3_omega_f", a, "alpha",
            [&] { return std::vector<IdentityEntry>{check_mf3_omega_f(a, ctx)}; });
    guarded(out, "mf3_alternative", a, "alpha",
            [&] { return std::vector<IdentityEntry>{check_mf3_alternative(a, ctx)}; });
  }
  for (int k = 0; k < 3; ++k) {
    const Real theta0 = pi() * k / 6;
    guarded(out, "growth_omega", expi(theta0), "alpha", [&] {
      return std::vector<IdentityEntry>{check_growth_omega(theta0, default_growth_moduli(), ctx)};
    });
  }
}

void run_theta_eta(const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
                   std::vector<IdentityEntry>& out) {
  for (const auto& g : grid) {
    const Complex t = g.tau();
    guarded(out, "eta_theta", t, "tau", [&] { return check_eta_theta(t, ctx); });
  }
}

void run_wronskian(const std::vector<GridPoint>& grid, const PrecisionContext& ctx,
                   std::vector<IdentityEntry>& out) {
  auto run_pair = [&](const std::vector<BigRational>& h0, const std::vector<BigRational>& h1,
                      const Complex& tau, const std::string& name) {
    guarded(out, "wronskian", tau, "tau", [&] {
      auto entries = wronskian_periodicity(h0, h1, tau, ctx);
      entries.push_back(g_function(h0, h1, tau, ctx).t_invariance);
      for (auto& e : entries) {
        e.detail.emplace_back("pair", name);
      }
      return entries;
    });
  };
  const std::vector<BigRational> one{BigRational(1)};
  const std::vector<BigRational> q{BigRational(0), BigRational(1)};
  for (const auto& g : grid) {
    run_pair(one, q, g.tau(), "canonical");
  }
  const Complex tau0(Real("0.2"), Real("1.1"));
  auto pairs = random_rational_pairs(kWronskianPairs, kWronskianSeed);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    run_pair(pairs[k].first, pairs[k].second, tau0, "random_" + std::to_string(k));
  }
}

}  // namespace

IdentityReport run_suite(Suite suite, const std::vector<GridPoint>& grid, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  for (const auto& g : grid) {
    if (!(g.alpha().re > 0)) {
      throw DomainError("grid point outside the upper half-plane (need Im tau > 0, Re alpha > 0)");
    }
  }
  IdentityReport report;
  report.identity = to_string(suite);
  report.prec_bits = ctx.prec_bits();
  report.eps = render_real(ctx.eps(), 6);
  auto pick = [&](const std::vector<GridPoint>& defaults) { return grid.empty() ? defaults : grid; };
  auto& out = report.entries;

  const bool all = suite == Suite::all;
  if (all || suite == Suite::mf5) {
    run_mf5(pick(default_alpha_grid()), ctx, out);
  }
  if (all || suite == Suite::mf5_stokes) {
    run_stokes(grid, ctx, out);
  }
  if (all || suite == Suite::mf3) {
    auto g3 = default_alpha_grid();
    g3.push_back({Complex(Real(1), Real("0.4")), false});
    run_mf3(pick(g3), ctx, out);
  }
  if (all || suite == Suite::theta_eta) {
    run_theta_eta(pick(default_tau_grid()), ctx, out);
  }
  if (all || suite == Suite::algebra) {
    auto g = group_relations(ctx);
    out.insert(out.end(), g.begin(), g.end());
  }
  if (all || suite == Suite::wronskian) {
    run_wronskian(pick(default_tau_grid()), ctx, out);
  }
  report.finalize();
  report.metadata = {
      {"prec_bits", std::to_string(ctx.prec_bits())},
      {"eps", render_real(ctx.eps(), 6)},
      {"series_term_cutoff", render_real(ctx.term_cutoff(), 6)},
      {"rounding_floor", render_real(ctx.rounding_floor(), 6)},
      {"quadrature", "tanh_sinh, ray rotated by -arg(alpha)/2"},
      {"budget_factor", std::to_string(kBudgetFactor)},
      {"wronskian_seed", std::to_string(kWronskianSeed)},
      {"entries", std::to_string(report.entries.size())},
  };
  return report;
}

}  // namespace mocklab
