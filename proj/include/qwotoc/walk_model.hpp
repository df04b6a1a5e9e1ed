#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "qwotoc/complex_matrix.hpp"

namespace qwotoc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// One walk instance: ring size and coin angle.
struct WalkParams {
  std::size_t sites = 2;  // N >= 2
  double theta = 0.0;     // radians, 0 <= theta <= pi/2

  /// Throws DomainError unless N >= 2 and theta lies in [0, pi/2]
  /// (values within 1e-12 outside the range are clamped).
  static WalkParams make(std::size_t sites, double theta);

  bool is_sigma_z() const noexcept;  // theta == 0 (within 1e-12)
  bool is_sigma_x() const noexcept;  // theta == pi/2 (within 1e-12)
  bool is_marginal() const noexcept { return is_sigma_z() || is_sigma_x(); }
};

/// Per-momentum eigen-structure of the walk block U_k.
///
/// `eigvecs` holds the eigenvectors as columns, ordered so that
/// `block = eigvecs * diag * adjoint(eigvecs)` with
/// `diag = diag(e^{i alpha}, -e^{-i alpha})`. Each column is phase fixed so its
/// first nonzero component is real and non-negative. `coin_conj` is the
/// Hadamard coin written in that eigenbasis, `adjoint(eigvecs) * H * eigvecs`.
struct MomentumSector {
  std::size_t k = 0;
  ComplexMatrix block;
  double alpha = 0.0;
  ComplexMatrix eigvecs;
  ComplexMatrix diag;
  ComplexMatrix coin_conj;
  double a11 = 0.0;
  Complex a12;

  /// block^t through the eigen-decomposition; valid for any signed t.
  ComplexMatrix power(long t) const;
};

/// exp(2 pi i m / N) with m reduced mod N first.
Complex root_of_unity(std::size_t sites, long m);

ComplexMatrix coin_matrix(double theta);
/// The Hadamard gate, coin_matrix(pi/4) written with exact 1/sqrt(2) entries.
ComplexMatrix hadamard();

ComplexMatrix position_shift(std::size_t sites);
ComplexMatrix momentum_shift(std::size_t sites);

/// Discrete Fourier matrix whose k-th column is the momentum state
/// |k~> = N^{-1/2} sum_n omega^{nk} |n>.
ComplexMatrix fourier_matrix(std::size_t sites);

/// Full 2N x 2N walk operator, coin-major ordering (coin * N + position).
ComplexMatrix walk_unitary(const WalkParams& p);

/// [[cos t w^k, sin t w^k], [sin t w^-k, -cos t w^-k]], 0 <= k < N.
ComplexMatrix momentum_block(const WalkParams& p, std::size_t k);

/// All N blocks in ascending k.
std::vector<ComplexMatrix> momentum_blocks(const WalkParams& p);

/// The 2x2 blocks of (1 x F)^dagger U (1 x F), where F is fourier_matrix(N).
/// These carry the k -> -k relabelling relative to momentum_block.
std::vector<ComplexMatrix> fourier_conjugated_blocks(const WalkParams& p);

/// Principal-branch eigenphase asin(cos(theta) sin(2 pi k / N)).
double alpha(const WalkParams& p, std::size_t k);
/// Same, continuous in k (used by derivative and integral approximations).
double alpha_at(const WalkParams& p, double k);

MomentumSector diagonalize_block(const WalkParams& p, std::size_t k);
std::vector<MomentumSector> diagonalize_all(const WalkParams& p);

/// d alpha / dk.
double alpha_d1(const WalkParams& p, double k);
/// d^2 alpha / dk^2.
double alpha_d2(const WalkParams& p, double k);

}  // namespace qwotoc
