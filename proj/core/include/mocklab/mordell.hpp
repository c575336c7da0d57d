#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/matrix.hpp"
#include "mocklab/precision.hpp"
#include "mocklab/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mocklab {

/// Options for the Mordell-Appell integrals.
struct MordellOptions {
  QuadOptions quad;
  /// Override of the ray angle; by default -arg(beta)/2 when |arg beta| <= pi/2
  /// and a further pi/8 toward the Gaussian's good side beyond that.
  std::optional<Real> ray_angle;
  /// Smallest admissible pi - |arg alpha|.
  double pole_floor = 1e-3;
};

/// Default integration angle for a Gaussian e^{-c beta x^2} with arg beta = theta.
Real default_ray_angle(const Real& theta);

/// L(r, beta) = int_0^inf e^{-3 beta x^2/2} [cosh((3r-2) beta x) + cosh((3r-1) beta x)] / cosh(3 beta x/2) dx.
QuadratureResult l_integral_detailed(const Rational& r, const Complex& beta, const PrecisionContext& ctx,
                                     const MordellOptions& opts = {});
Complex l_integral(const Rational& r, const Complex& beta, const PrecisionContext& ctx);

/// L(r, beta) with beta = |beta| e^{i theta} given in polar form; theta may be +-pi.
QuadratureResult l_integral_polar(const Rational& r, const Real& abs_beta, const Real& theta,
                                  const PrecisionContext& ctx, const MordellOptions& opts = {});
/// d/dbeta L(r, beta) in polar form.
QuadratureResult l_integral_dbeta_polar(const Rational& r, const Real& abs_beta, const Real& theta,
                                        const PrecisionContext& ctx,
                                        const MordellOptions& opts = {});

/// W3(alpha) = int_0^inf e^{-3 alpha x^2} sinh(alpha x) / sinh(3 alpha x) dx.
QuadratureResult w3_integral_detailed(const Complex& alpha, const PrecisionContext& ctx,
                                      const MordellOptions& opts = {});
Complex w3_integral(const Complex& alpha, const PrecisionContext& ctx);

/// W2(alpha) = int_0^inf e^{-3 alpha x^2/2} cosh(alpha x) / cosh(3 alpha x) dx.
QuadratureResult w2_integral_detailed(const Complex& alpha, const PrecisionContext& ctx,
                                      const MordellOptions& opts = {});
Complex w2_integral(const Complex& alpha, const PrecisionContext& ctx);

/// sqrt(135 alpha/pi) (L(1/5, 10 alpha), L(2/5, 10 alpha)).
struct LVector {
  Complex l1;
  Complex l2;
  Real err_estimate;

  [[nodiscard]] Vec2 vec() const { return {l1, l2}; }
};

LVector l_vector(const Complex& alpha, const PrecisionContext& ctx, const MordellOptions& opts = {});

/// sum_{k>=0} (-1)^k [e^{-(a-(2k+1)p)^2/(4pt)} + e^{-(a+(2k+1)p)^2/(4pt)}], Re t > 0.
Complex pv_sum(const Real& a, const Real& p, const Complex& t, const PrecisionContext& ctx);

enum class PvGaussian {
  /// e^{-p t x^2}: the weight for which the closed form holds.
  matched,
  /// e^{-p x^2/t}: kept to measure the mismatch.
  reciprocal,
};

/// sqrt(4pt/pi) PV int_0^inf e^{-g(x)} cos(ax)/cos(px) dx with g selected by `gaussian`.
QuadratureResult pv_quadrature_detailed(const Real& a, const Real& p, const Real& t,
                                        const PrecisionContext& ctx,
                                        PvGaussian gaussian = PvGaussian::matched);
Real pv_quadrature(const Real& a, const Real& p, const Real& t, const PrecisionContext& ctx,
                   PvGaussian gaussian = PvGaussian::matched);

/// LVector at alpha = abs_alpha e^{i theta} for pi/2 <= |theta| <= pi - floor.
LVector lateral_L(const Real& abs_alpha, const Real& theta, const PrecisionContext& ctx,
                  const MordellOptions& opts = {});

/// LVector and its derivative in eps at theta = sign (pi - eps).
struct LateralSample {
  Real eps;
  int side = -1;  // -1: theta -> -pi, +1: theta -> +pi
  Vec2 value;
  Vec2 d_eps;
  Real err_estimate;
};
LateralSample lateral_sample(const Real& abs_alpha, const Real& eps, int side,
                             const PrecisionContext& ctx, const MordellOptions& opts = {});

/// Value at x = 0 of the Hermite interpolant through (x_i, y_i, y'_i).
Complex hermite_extrapolate(const std::vector<Real>& xs, const std::vector<Complex>& ys,
                            const std::vector<Complex>& ds);
/// Value at x = 0 of the polynomial interpolant through (x_i, y_i) (Neville).
Complex neville_extrapolate(const std::vector<Real>& xs, const std::vector<Complex>& ys);

/// Unary-series predictions for the Stokes-line decomposition at |alpha| = A.
struct StokesPrediction {
  /// (3/2) (u^{1/120} X0(u), u^{49/120} X1(u)) with u = e^{-2A}.
  Vec2 real_part;
  /// (3/2) sqrt(pi/A) M (v^{1/120} X0(v), v^{49/120} X1(v)) with v = e^{-2 pi^2/A}.
  Vec2 imag_part;
  /// The same objects without the 3/2 and with u^{-1/120}, u^{-49/120}
  /// (resp. v) prefactors.
  Vec2 real_part_unscaled;
  Vec2 imag_part_unscaled;
};
StokesPrediction stokes_prediction(const Real& abs_alpha, const PrecisionContext& ctx);

struct StokesRow {
  Real eps;
  Vec2 lower;  // theta = -(pi - eps)
  Vec2 upper;  // theta = +(pi - eps)
  /// |L_matched(eps) - (real + i s imag)| on the matched side.
  Real residual;
  Real residual_real;
  Real residual_imag;
};

struct StokesDecomposition {
  Real abs_alpha;
  std::vector<StokesRow> rows;
  StokesPrediction prediction;
  /// Hermite extrapolation to eps = 0 of each side.
  Vec2 extrapolated_lower;
  Vec2 extrapolated_upper;
  /// Polynomial (value-only) extrapolation of the matched side, for comparison.
  Vec2 extrapolated_plain;
  /// Direct evaluation on the Stokes line along the matched lateral ray.
  Vec2 direct_limit;
  /// "lower" when theta -> -pi matches real + i imag, "upper" otherwise.
  std::string matched_side;
  /// Sign s in real + i s imag for the upper lateral (the lower carries -s).
  int upper_sign = -1;
  Real residual_real;  // extrapolated
  /// |Hermite(all eps) - Hermite(all but the largest eps)| on the matched side.
  Real extrapolation_spread;
  Real residual_imag;  // extrapolated
  Real residual_other_side;
  Real residual_plain;
  Real residual_direct;
  /// |(L_lower + L_upper)/2 - real| at eps -> 0.
  Real residual_median;
  /// Componentwise Re(L)/real_part_unscaled for the matched extrapolation.
  Vec2 literal_ratio;
  bool monotone = false;
};

/// Default sequence (0.2, 0.1, 0.05, 0.025).
std::vector<Real> default_eps_seq();

/// Throws ExtrapolationError when the matched-side residuals do not decrease.
StokesDecomposition stokes_decompose(const Real& abs_alpha, const std::vector<Real>& eps_seq,
                                     const PrecisionContext& ctx, const MordellOptions& opts = {},
                                     bool throw_on_instability = true);

}  // namespace mocklab
