#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qwotoc/otoc.hpp"
#include "qwotoc/walk_model.hpp"

namespace qwotoc {

/// Closed forms and approximations of the three OTOCs.
enum class ApproxLabel {
  MarginalZ,
  MarginalX,
  CCBessel,
  CCIntegral,
  CCRkSum,
  WWEigenSum,
  WWIntegral,
  WWQuadratic,
  CWDerivSum,
  CWIntegral,
  CWQuadratic,
  TwoLevel,
};

std::string_view to_string(ApproxLabel label);

/// Saturation value (11 - 7 sqrt 2) / sqrt 2 of the coin-coin OTOC.
double cc_plateau();

// Coin-coin.
double f_cc_marginal_z(const WalkParams& p, long t);
double f_cc_marginal_x(long t);

/// Tr[(D^-t A_k D^t A_k)^2] for one sector, written through a11 and |a12|.
double cc_rk_term(const MomentumSector& sector, long t);
/// Variant with (-1)^t multiplying the whole a11^2 |a12|^2 bracket; it
/// agrees with cc_rk_term for even t only.
double cc_rk_term_outer_parity(const MomentumSector& sector, long t);
/// 1 - (1/2N) sum_k cc_rk_term.
double f_cc_rk_sum(const WalkParams& p, long t);
double f_cc_rk_sum(const std::vector<MomentumSector>& sectors, long t);

double f_cc_bessel(long t);
struct ParityBranches {
  double even;
  double odd;
};
/// Both parity branches of the Bessel form at real t, for envelopes.
ParityBranches f_cc_bessel_branches(double t);

/// C4 from the k-averaged coefficients and the integrals
/// I_m(t) = (1/2pi) int cos(m alpha(x) t) dx. Hadamard coin only.
double c4_cc_integral(const WalkParams& p, long t);
double f_cc_integral(const WalkParams& p, long t);

// Walker-walker.
double f_ww_eigen_sum(const WalkParams& p, double t);
double f_ww_integral(const WalkParams& p, double t);
double f_ww_quadratic(const WalkParams& p, double t);

// Coin-walker.
double f_cw_marginal_z(const WalkParams& p, long t);
double f_cw_marginal_x(const WalkParams& p, long t);
double f_cw_deriv_sum(const WalkParams& p, double t);
/// Same, reusing sectors from diagonalize_all(p).
double f_cw_deriv_sum(const WalkParams& p, const std::vector<MomentumSector>& sectors, double t);
double f_cw_integral(const WalkParams& p, double t);
double f_cw_quadratic(const WalkParams& p, double t);

/// Two-level system with H = cos(theta) sigma_x + sin(theta) sigma_y and
/// A = B = sigma_z: F(t) = 1 - cos 4t, independent of theta.
double two_level_otoc(double theta, double t);

/// Uniform entry point. Marginal and parity-carrying labels (MarginalZ,
/// MarginalX, CCBessel, CCIntegral, CCRkSum) need an integer-valued t;
/// TwoLevel reads only p.theta. Marginal labels dispatch on the placement.
double evaluate(ApproxLabel label, Placement placement, const WalkParams& p, double t);

}  // namespace qwotoc
