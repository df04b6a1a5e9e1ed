#include "qwotoc/walk_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwotoc/errors.hpp"

namespace qwotoc {

namespace {

constexpr double kMarginalTol = 1e-12;

struct CosSin {
  double c;
  double s;
};

// Marginal angles get exact 0/1 entries.
CosSin coin_cos_sin(double theta) {
  if (std::abs(theta) <= kMarginalTol) return {1.0, 0.0};
  if (std::abs(theta - kHalfPi) <= kMarginalTol) return {0.0, 1.0};
  return {std::cos(theta), std::sin(theta)};
}

void require_sector(const WalkParams& p, std::size_t k) {
  if (k >= p.sites) {
    throw IndexError("momentum sector " + std::to_string(k) + " out of range for N=" + std::to_string(p.sites));
  }
}

// Unit eigenvector of a 2x2 matrix for eigenvalue lambda, first nonzero
// component made real and non-negative. `fallback` selects the basis vector
// used when the matrix is diagonal.
std::pair<Complex, Complex> eigvec2(const ComplexMatrix& m, Complex lambda, int fallback) {
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  Complex v0 = b, v1 = lambda - a;
  const Complex w0 = lambda - d, w1 = c;
  if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
    v0 = w0;
    v1 = w1;
  }
  double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
  if (nrm < 1e-13) {
    v0 = fallback == 0 ? 1.0 : 0.0;
    v1 = fallback == 0 ? 0.0 : 1.0;
    nrm = 1.0;
  }
  v0 /= nrm;
  v1 /= nrm;
  const Complex lead = std::abs(v0) > 1e-14 ? v0 : v1;
  const Complex phase = std::conj(lead) / std::abs(lead);
  return {v0 * phase, v1 * phase};
}

}  // namespace

WalkParams WalkParams::make(std::size_t sites, double theta) {
  if (sites < 2) throw DomainError("WalkParams: N must be >= 2, got " + std::to_string(sites));
  if (!std::isfinite(theta) || theta < -kMarginalTol || theta > kHalfPi + kMarginalTol) {
    throw DomainError("WalkParams: theta must lie in [0, pi/2], got " + std::to_string(theta));
  }
  return WalkParams{sites, std::clamp(theta, 0.0, kHalfPi)};
}

bool WalkParams::is_sigma_z() const noexcept { return std::abs(theta) <= kMarginalTol; }
bool WalkParams::is_sigma_x() const noexcept { return std::abs(theta - kHalfPi) <= kMarginalTol; }

Complex root_of_unity(std::size_t sites, long m) {
  const long n = static_cast<long>(sites);
  const long r = ((m % n) + n) % n;
  // Quarter turns are exact.
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

ComplexMatrix coin_matrix(double theta) {
  const auto [c, s] = coin_cos_sin(theta);
  return ComplexMatrix::from_rows({{c, s}, {s, -c}});
}

ComplexMatrix hadamard() {
  constexpr double r = 0.70710678118654752440;
  return ComplexMatrix::from_rows({{r, r}, {r, -r}});
}

ComplexMatrix position_shift(std::size_t sites) {
  if (sites < 2) throw DomainError("position_shift: N must be >= 2");
  ComplexMatrix t(sites, sites);
  for (std::size_t n = 0; n < sites; ++n) t((n + 1) % sites, n) = 1.0;
  return t;
}

ComplexMatrix momentum_shift(std::size_t sites) {
  if (sites < 2) throw DomainError("momentum_shift: N must be >= 2");
  ComplexMatrix t(sites, sites);
  for (std::size_t n = 0; n < sites; ++n) t(n, n) = root_of_unity(sites, static_cast<long>(n));
  return t;
}

ComplexMatrix fourier_matrix(std::size_t sites) {
  ComplexMatrix f(sites, sites);
  const double norm = 1.0 / std::sqrt(static_cast<double>(sites));
  for (std::size_t n = 0; n < sites; ++n) {
    for (std::size_t k = 0; k < sites; ++k) {
      f(n, k) = norm * root_of_unity(sites, static_cast<long>((n * k) % sites));
    }
  }
  return f;
}

ComplexMatrix walk_unitary(const WalkParams& p) {
  const std::size_t n = p.sites;
  const ComplexMatrix shift = position_shift(n);
  const ComplexMatrix p0 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix p1 = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  const ComplexMatrix conditional_shift = kron(p0, shift) + kron(p1, adjoint(shift));
  return matmul(conditional_shift, kron(coin_matrix(p.theta), ComplexMatrix::identity(n)));
}

ComplexMatrix momentum_block(const WalkParams& p, std::size_t k) {
  require_sector(p, k);
  const auto [c, s] = coin_cos_sin(p.theta);
  const Complex w = root_of_unity(p.sites, static_cast<long>(k));
  const Complex wi = root_of_unity(p.sites, -static_cast<long>(k));
  return ComplexMatrix::from_rows({{c * w, s * w}, {s * wi, -c * wi}});
}

std::vector<ComplexMatrix> momentum_blocks(const WalkParams& p) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(p.sites);
  for (std::size_t k = 0; k < p.sites; ++k) blocks.push_back(momentum_block(p, k));
  return blocks;
}

std::vector<ComplexMatrix> fourier_conjugated_blocks(const WalkParams& p) {
  const std::size_t n = p.sites;
  const ComplexMatrix lift = kron(ComplexMatrix::identity(2), fourier_matrix(n));
  const ComplexMatrix conj = matmul(adjoint(lift), matmul(walk_unitary(p), lift));
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix b(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) b(r, c) = conj(r * n + k, c * n + k);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

double alpha_at(const WalkParams& p, double k) {
  const auto [c, s] = coin_cos_sin(p.theta);
  (void)s;
  const double arg = c * std::sin(2.0 * kPi * k / static_cast<double>(p.sites));
  return std::asin(std::clamp(arg, -1.0, 1.0));
}

double alpha(const WalkParams& p, std::size_t k) {
  require_sector(p, k);
  const auto [c, s] = coin_cos_sin(p.theta);
  (void)s;
  // sin(2 pi k/N) from the exact root of unity keeps the marginal cases exact.
  const double arg = c * root_of_unity(p.sites, static_cast<long>(k)).imag();
  return std::asin(std::clamp(arg, -1.0, 1.0));
}

ComplexMatrix MomentumSector::power(long t) const {
  const Complex l1 = std::polar(1.0, alpha * static_cast<double>(t));
  const Complex l2 = (t % 2 == 0 ? 1.0 : -1.0) * std::polar(1.0, -alpha * static_cast<double>(t));
  ComplexMatrix out(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      out(r, c) = eigvecs(r, 0) * l1 * std::conj(eigvecs(c, 0)) + eigvecs(r, 1) * l2 * std::conj(eigvecs(c, 1));
    }
  }
  return out;
}

MomentumSector diagonalize_block(const WalkParams& p, std::size_t k) {
  require_sector(p, k);
  MomentumSector s;
  s.k = k;
  s.block = momentum_block(p, k);
  s.alpha = alpha(p, k);
  const Complex l1 = std::polar(1.0, s.alpha);
  const Complex l2 = -std::polar(1.0, -s.alpha);
  s.diag = ComplexMatrix::diagonal({l1, l2});

  if (std::abs(l1 - l2) < 1e-12) {
    // Degenerate pair: only reachable for a diagonal (scalar) block at theta = 0.
    s.eigvecs = ComplexMatrix::identity(2);
  } else {
    // For a diagonal block, pick the basis vector whose entry matches lambda.
    const int f1 = std::abs(s.block(0, 0) - l1) <= std::abs(s.block(1, 1) - l1) ? 0 : 1;
    const auto [v0, v1] = eigvec2(s.block, l1, f1);
    const auto [u0, u1] = eigvec2(s.block, l2, 1 - f1);
    s.eigvecs = ComplexMatrix::from_rows({{v0, u0}, {v1, u1}});
  }
  s.coin_conj = matmul(adjoint(s.eigvecs), matmul(hadamard(), s.eigvecs));
  s.a11 = s.coin_conj(0, 0).real();
  s.a12 = s.coin_conj(0, 1);
  return s;
}

std::vector<MomentumSector> diagonalize_all(const WalkParams& p) {
  std::vector<MomentumSector> sectors;
  sectors.reserve(p.sites);
  for (std::size_t k = 0; k < p.sites; ++k) sectors.push_back(diagonalize_block(p, k));
  return sectors;
}

double alpha_d1(const WalkParams& p, double k) {
  const auto [c, s] = coin_cos_sin(p.theta);
  (void)s;
  const double x = 2.0 * kPi * k / static_cast<double>(p.sites);
  const double sx = std::sin(x);
  return (2.0 * kPi / static_cast<double>(p.sites)) * c * std::cos(x) / std::sqrt(1.0 - c * c * sx * sx);
}

double alpha_d2(const WalkParams& p, double k) {
  const auto [c, s] = coin_cos_sin(p.theta);
  const double n = static_cast<double>(p.sites);
  const double x = 2.0 * kPi * k / n;
  const double sx = std::sin(x);
  const double denom = std::pow(1.0 - c * c * sx * sx, 1.5);
  return -(4.0 * kPi * kPi / (n * n)) * sx * c * s * s / denom;
}

}  // namespace qwotoc
