#include "mocklab/quadrature.hpp"

#include "mocklab/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace mocklab {

std::string to_string(QuadScheme s) {
  return s == QuadScheme::tanh_sinh ? "tanh_sinh" : "gauss_patch";
}

namespace {

using Integrand = std::function<Complex(const Real&)>;

// Normalized tanh-sinh abscissae on [0, 1] with weights (dx/dt) for the
// nodes first introduced at a given level. Level 0 holds t = 0, +-1, +-2, ...
struct TsLevel {
  std::vector<Real> x;
  std::vector<Real> w;
};

std::mutex g_cache_mutex;

const TsLevel& ts_level(unsigned prec_bits, unsigned level) {
  static std::map<std::pair<unsigned, unsigned>, TsLevel> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(prec_bits, level);
  auto it = cache.find(key);
  if (it != cache.end()) {
    return it->second;
  }
  PrecisionScope scope(prec_bits);
  const Real half_pi = pi() / 2;
  const double tmax = std::asinh((prec_bits + 20) * std::log(2.0) / M_PI);
  const Real h = pow2(-static_cast<long>(level));
  TsLevel lv;
  // Level 0: integer t; later levels: odd multiples of h.
  const long step = level == 0 ? 1 : 2;
  const long start = level == 0 ? 0 : 1;
  const long jmax = static_cast<long>(std::floor(tmax * std::ldexp(1.0, static_cast<int>(level))));
  for (long j = start; j <= jmax; j += step) {
    for (int sgn : {1, -1}) {
      if (j == 0 && sgn < 0) {
        continue;
      }
      Real t = h * (sgn * j);
      Real u = half_pi * boost::multiprecision::sinh(t);
      Real e = boost::multiprecision::exp(-2 * u);
      Real cu = boost::multiprecision::cosh(u);
      lv.x.push_back(1 / (1 + e));
      lv.w.push_back(half_pi * boost::multiprecision::cosh(t) / (2 * cu * cu));
    }
  }
  return cache.emplace(key, std::move(lv)).first->second;
}

QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                           const PrecisionContext& ctx, std::size_t max_level) {
  const Real len = b - a;
  Complex sum;
  Real abs_sum(0);
  Complex prev;
  QuadratureResult out;
  out.scheme = QuadScheme::tanh_sinh;
  for (unsigned level = 0; level <= max_level; ++level) {
    const TsLevel& lv = ts_level(ctx.prec_bits(), level);
    for (std::size_t i = 0; i < lv.x.size(); ++i) {
      Complex v = f(a + len * lv.x[i]) * lv.w[i];
      abs_sum += abs(v);
      sum += v;
    }
    out.nodes_used += lv.x.size();
    const Real h = pow2(-static_cast<long>(level));
    Complex cur = sum * (h * len);
    if (level >= 3) {
      Real diff = abs(cur - prev);
      if (diff < tol / 16) {
        out.value = cur;
        out.err_estimate = diff + ctx.rounding_floor() * abs_sum * h * boost::multiprecision::abs(len);
        return out;
      }
    }
    prev = cur;
  }
  throw ConvergenceError("tanh-sinh refinement stalled above tolerance");
}

QuadratureResult gauss_patches(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                               const PrecisionContext& ctx, std::size_t max_level) {
  const GaussRule& rule = gauss_legendre(gauss_points_for(ctx.prec_bits()), ctx.prec_bits());
  const Real len = b - a;
  QuadratureResult out;
  out.scheme = QuadScheme::gauss_patch;
  Complex prev;
  std::size_t patches = 4;
  for (std::size_t level = 0; level <= max_level; ++level, patches *= 2) {
    const Real width = len / Real(patches);
    const Real half = width / 2;
    Complex total;
    Real abs_total(0);
    for (std::size_t p = 0; p < patches; ++p) {
      const Real mid = a + width * Real(p) + half;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        Complex v = f(mid + half * rule.nodes[i]) * rule.weights[i];
        abs_total += abs(v);
        total += v;
      }
    }
    out.nodes_used += patches * rule.nodes.size();
    Complex cur = total * half;
    if (level >= 1) {
      Real diff = abs(cur - prev);
      if (diff < tol / 16) {
        out.value = cur;
        out.err_estimate = diff + ctx.rounding_floor() * abs_total * boost::multiprecision::abs(half);
        return out;
      }
    }
    prev = cur;
  }
  throw ConvergenceError("Gauss patch refinement stalled above tolerance");
}

QuadratureResult run_scheme(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                            const PrecisionContext& ctx, const QuadOptions& opts) {
  return opts.scheme == QuadScheme::tanh_sinh ? tanh_sinh(f, a, b, tol, ctx, opts.max_level)
                                              : gauss_patches(f, a, b, tol, ctx, opts.max_level);
}

}  // namespace

std::size_t gauss_points_for(unsigned prec_bits) { return std::max<std::size_t>(20, prec_bits / 4); }

const GaussRule& gauss_legendre(std::size_t n, unsigned prec_bits) {
  static std::map<std::pair<std::size_t, unsigned>, GaussRule> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(n, prec_bits);
  auto it = cache.find(key);
  if (it != cache.end()) {
    return it->second;
  }
  PrecisionScope scope(prec_bits);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Real stop = pow2(-static_cast<long>(prec_bits) + 4);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    Real x(std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5)));
    Real dp;
    for (int iter = 0; iter < 200; ++iter) {
      // Legendre recurrence for P_n(x) and P_n'(x).
      Real p0(1);
      Real p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = Real(n) * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (boost::multiprecision::abs(dx) < stop) {
        // One more evaluation of the derivative at the converged node.
        Real q0(1);
        Real q1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
          Real q2 = (Real(2 * k - 1) * x * q1 - Real(k - 1) * q0) / Real(k);
          q0 = std::move(q1);
          q1 = std::move(q2);
        }
        dp = Real(n) * (x * q1 - q0) / (x * x - 1);
        break;
      }
    }
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

QuadratureResult integrate_ray(const RayIntegrand& g, const Real& angle, const PrecisionContext& ctx,
                               const QuadOptions& opts) {
  PrecisionScope scope(ctx);
  const Real two_pi = 2 * pi();
  for (const Real& pa : g.pole_angles) {
    Real d = boost::multiprecision::fmod(angle - pa, two_pi);
    if (d > pi()) {
      d -= two_pi;
    } else if (d <= -pi()) {
      d += two_pi;
    }
    if (boost::multiprecision::abs(d) < g.exclusion) {
      throw PoleProximityError("integration ray passes within " + to_decimal(g.exclusion, 6) +
                               " rad of a pole");
    }
  }
  const Complex w = expi(angle);
  const Real c = (g.gauss * w * w).re;
  if (!(c > 0)) {
    throw DomainError("Gaussian factor does not decay along the integration ray");
  }
  const Real tol = opts.tol ? Real(*opts.tol) : Real(ctx.eps());
  // Solve c S^2 - growth S = log(scale/tol) + margin for the truncation point.
  const Real target = boost::multiprecision::log(g.scale / tol) + 40;
  const Real S = (g.growth + boost::multiprecision::sqrt(g.growth * g.growth + 4 * c * target)) / (2 * c);
  Integrand h = [&](const Real& s) { return g.f(w * s) * w; };
  return run_scheme(h, Real(0), S, tol, ctx, opts);
}

QuadratureResult integrate_interval(const std::function<Complex(const Real&)>& f, const Real& a,
                                    const Real& b, const PrecisionContext& ctx,
                                    const QuadOptions& opts) {
  PrecisionScope scope(ctx);
  const Real tol = opts.tol ? Real(*opts.tol) : Real(ctx.eps());
  return run_scheme(f, a, b, tol, ctx, opts);
}

}  // namespace mocklab
