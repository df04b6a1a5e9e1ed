#include "qwotoc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwotoc/errors.hpp"
#include "qwotoc/walk_model.hpp"

namespace qwotoc {

QuadratureSpec::QuadratureSpec(std::size_t nodes) : nodes_(nodes) {
  if (nodes < 16 || nodes % 2 != 0) {
    throw DomainError("QuadratureSpec: node count must be even and >= 16, got " + std::to_string(nodes));
  }
}

QuadratureSpec QuadratureSpec::for_frequency(double omega_max) {
  if (!std::isfinite(omega_max) || omega_max < 0.0) throw DomainError("QuadratureSpec: bad frequency estimate");
  auto n = static_cast<std::size_t>(std::max(256.0, 8.0 * std::ceil(omega_max)));
  n += n % 2;
  return QuadratureSpec(n);
}

double periodic_trapezoid(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  const std::size_t n = spec.nodes();
  const double h = 2.0 * kPi / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += f(h * static_cast<double>(j));
  return h * acc;
}

double bessel_j0(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e5) throw DomainError("bessel_j0: |x| must be <= 1e5");
  const double ax = std::abs(x);
  // Trapezoid error for cos(x sin tau) is of order J_n(x), negligible once
  // n exceeds |x| by a margin; 8x with a floor of 64 is ample.
  std::size_t n = std::max<std::size_t>(64, 8 * static_cast<std::size_t>(std::ceil(ax)));
  n += n % 2;
  return periodic_trapezoid([ax](double tau) { return std::cos(ax * std::sin(tau)); }, QuadratureSpec(n)) /
         (2.0 * kPi);
}

}  // namespace qwotoc
