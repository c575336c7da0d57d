#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/matrix.hpp"
#include "mocklab/mordell.hpp"
#include "mocklab/precision.hpp"
#include "mocklab/report.hpp"

#include <string>
#include <vector>

namespace mocklab {

/// Helper accumulating sum_i coef_i * value_i together with its error budget.
class ResidualBuilder {
 public:
  explicit ResidualBuilder(const PrecisionContext& ctx) : ctx_(ctx) {}

  /// Adds coef * value where |value - exact| <= err.
  ResidualBuilder& add(const Complex& coef, const Complex& value, const Real& err);
  ResidualBuilder& add(const Complex& value, const Real& err) { return add(Complex(1), value, err); }

  [[nodiscard]] const Complex& sum() const { return sum_; }
  [[nodiscard]] Real budget() const;
  [[nodiscard]] const Real& scale() const { return scale_; }

  /// Entry with abs = |sum|, rel = abs / scale.
  [[nodiscard]] IdentityEntry entry(std::string label, const Complex& point, std::string kind) const;

 private:
  const PrecisionContext& ctx_;
  Complex sum_;
  Real err_ = Real(0);
  Real scale_ = Real(0);
};

/// Builds a pass/fail entry from already computed parts.
IdentityEntry make_entry(std::string label, const Complex& point, std::string kind,
                         const Real& abs_residual, const Real& scale, const Real& budget);

// --- order 5 ----------------------------------------------------------------

/// Both scalar chi laws: labels "mf5_scalar_chi0", "mf5_scalar_chi1".
std::vector<IdentityEntry> check_mf5_scalar(const Complex& alpha, const PrecisionContext& ctx);
/// Matrix law with the K pair: label "mf5_matrix".
IdentityEntry check_mf5_matrix(const Complex& alpha, const PrecisionContext& ctx);
/// L(alpha) - sqrt(pi/alpha) M L(pi^2/alpha): label "lvec_consistency".
IdentityEntry check_l_consistency(const Complex& alpha, const PrecisionContext& ctx);
/// ||(1 - M) L(pi)||: label "lvec_fixed_point".
IdentityEntry check_l_fixed_point(const PrecisionContext& ctx);

/// Stokes-line decomposition at |alpha|: labels "stokes_real", "stokes_imag",
/// "stokes_monotone"; the matched lateral side is recorded in the detail.
std::vector<IdentityEntry> check_stokes(const Real& abs_alpha, const PrecisionContext& ctx,
                                        const std::vector<Real>& eps_seq = default_eps_seq());

// --- order 3 ----------------------------------------------------------------

IdentityEntry check_mf3_omega(const Complex& alpha, const PrecisionContext& ctx);
IdentityEntry check_mf3_omega_f(const Complex& alpha, const PrecisionContext& ctx);
IdentityEntry check_mf3_alternative(const Complex& alpha, const PrecisionContext& ctx);

/// s(alpha) = |alpha|^{1/2} |q1|^{1/12} |omega(e^{-alpha})|.
Real growth_statistic(const Complex& alpha, const PrecisionContext& ctx);
/// No-growth check on the ray arg alpha = theta0: the residual is the ratio of
/// the smaller-|alpha| half maximum to the larger-half maximum (pass iff <= 2).
IdentityEntry check_growth_omega(const Real& theta0, const std::vector<Real>& moduli,
                                 const PrecisionContext& ctx);
std::vector<Real> default_growth_moduli();

// --- eta / theta ---------------------------------------------------------------

/// eta T and S laws, theta_3 T^2 and S laws, and the two links of the chain
/// theta3(1 - 1/z) = theta4(-1/z) = sqrt(-iz) theta2(z).
std::vector<IdentityEntry> check_eta_theta(const Complex& tau, const PrecisionContext& ctx);

// --- algebra -------------------------------------------------------------------

/// ||D^20 - 1||, ||M^2 - 1||, ||(-MD)^3 - 1||.
std::vector<IdentityEntry> group_relations(const PrecisionContext& ctx);

// --- Wronskian -----------------------------------------------------------------

/// v(tau) = (Q^{-1/20} H0(Q), Q^{-9/20} H1(Q)) and its tau-derivative.
struct VPair {
  Vec2 v;
  Vec2 dv;
  Real scale;  // sum of |term| magnitudes (rounding scale)
};
VPair v_pair(const std::vector<BigRational>& h0, const std::vector<BigRational>& h1,
             const Complex& tau, const PrecisionContext& ctx);
/// W = v0 v1' - v0' v1.
Complex wronskian(const VPair& v);

/// Labels "v_T_step" and "wronskian_T".
std::vector<IdentityEntry> wronskian_periodicity(const std::vector<BigRational>& h0,
                                                 const std::vector<BigRational>& h1,
                                                 const Complex& tau, const PrecisionContext& ctx);

struct GValue {
  Complex value;
  IdentityEntry t_invariance;  // label "G_T"
};
/// G = W^3 / eta^12 and its T-invariance residual.
GValue g_function(const std::vector<BigRational>& h0, const std::vector<BigRational>& h1,
                  const Complex& tau, const PrecisionContext& ctx);

/// Deterministic pseudo-random degree-8 rational coefficient pairs.
std::vector<std::pair<std::vector<BigRational>, std::vector<BigRational>>> random_rational_pairs(
    std::size_t count, std::uint64_t seed);

// --- suites --------------------------------------------------------------------

enum class Suite { mf5, mf5_stokes, mf3, theta_eta, algebra, wronskian, all };

Suite parse_suite(const std::string& s);
std::string to_string(Suite s);

struct GridPoint {
  Complex value;
  bool is_tau = false;

  [[nodiscard]] Complex alpha() const;
  [[nodiscard]] Complex tau() const;
};

std::vector<GridPoint> default_alpha_grid();
std::vector<GridPoint> default_tau_grid();

/// Runs a suite. An empty grid selects the suite's defaults. Invalid grid
/// points throw DomainError up front; evaluation failures are recorded per entry.
IdentityReport run_suite(Suite suite, const std::vector<GridPoint>& grid, const PrecisionContext& ctx);

}  // namespace mocklab
