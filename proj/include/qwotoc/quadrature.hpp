#pragma once

#include <cstddef>
#include <functional>

namespace qwotoc {

/// Node count for the periodic trapezoid over [0, 2pi]. Must be even and >= 16.
class QuadratureSpec {
public:
  explicit QuadratureSpec(std::size_t nodes);

  /// Rule for oscillatory integrands: max(256, 8 * ceil(omega_max)), rounded
  /// up to even, where omega_max is the peak angular frequency of the
  /// integrand (callers include their own safety margin).
  static QuadratureSpec for_frequency(double omega_max);

  std::size_t nodes() const noexcept { return nodes_; }

private:
  std::size_t nodes_;
};

/// (2pi/n) * sum_{j<n} f(2 pi j / n), summed in ascending j. Spectrally
/// accurate for smooth 2pi-periodic f.
double periodic_trapezoid(const std::function<double(double)>& f, const QuadratureSpec& spec);

/// Bessel J0 from (1/2pi) * integral_0^{2pi} cos(x sin tau) dtau. |x| <= 1e5.
double bessel_j0(double x);

}  // namespace qwotoc
