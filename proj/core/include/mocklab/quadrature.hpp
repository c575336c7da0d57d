#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/precision.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mocklab {

enum class QuadScheme { tanh_sinh, gauss_patch };

std::string to_string(QuadScheme s);

struct QuadratureResult {
  Complex value;
  /// At least the difference between the last two refinement levels.
  Real err_estimate;
  std::size_t nodes_used = 0;
  QuadScheme scheme = QuadScheme::tanh_sinh;
};

/// Integrand for int_0^inf f(z) dz along the ray z = s e^{i angle}.
///
/// Along the ray |f(s e^{i angle})| <= scale * exp(-Re(gauss e^{2 i angle}) s^2 + growth s).
/// Poles sit on the listed arguments; the ray must stay `exclusion` radians
/// away from every one of them.
struct RayIntegrand {
  std::function<Complex(const Complex&)> f;
  Complex gauss;
  Real growth = Real(0);
  Real scale = Real(1);
  std::vector<Real> pole_angles;
  Real exclusion = Real(0);
};

struct QuadOptions {
  QuadScheme scheme = QuadScheme::tanh_sinh;
  /// Absolute target; defaults to ctx.eps().
  std::optional<Real> tol;
  std::size_t max_level = 14;
};

/// Adaptive integration along a ray. Throws PoleProximityError when the ray
/// enters an exclusion wedge, DomainError when the Gaussian does not decay
/// along the ray, ConvergenceError when refinement stalls.
QuadratureResult integrate_ray(const RayIntegrand& g, const Real& angle, const PrecisionContext& ctx,
                               const QuadOptions& opts = {});

/// int_a^b f(x) dx for real endpoints with a smooth integrand.
QuadratureResult integrate_interval(const std::function<Complex(const Real&)>& f, const Real& a,
                                    const Real& b, const PrecisionContext& ctx,
                                    const QuadOptions& opts = {});

/// Gauss-Legendre rule on [-1, 1] at the current precision.
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const GaussRule& gauss_legendre(std::size_t n, unsigned prec_bits);

/// Node count per Gauss patch used at a given precision.
std::size_t gauss_points_for(unsigned prec_bits);

}  // namespace mocklab
