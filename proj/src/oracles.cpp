#include "qwotoc/oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "qwotoc/errors.hpp"
#include "qwotoc/otoc.hpp"

namespace qwotoc::oracle {

double bessel_j0_series(double x) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  if (std::abs(x) > 40.0) throw DomainError("bessel_j0_series: |x| must be <= 40");
  const Big half_x_sq = Big(x) * Big(x) / 4;
  Big term = 1;
  Big sum = 1;
  for (int m = 1; m < 200; ++m) {
    term *= -half_x_sq / (Big(m) * Big(m));
    sum += term;
    if (abs(term) < Big("1e-45")) break;
  }
  return sum.convert_to<double>();
}

ComplexMatrix expm(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("expm: non-square matrix");
  const double norm = std::sqrt(frobenius_sq(m));
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = Complex(std::ldexp(1.0, -squarings), 0.0) * m;
  ComplexMatrix sum = ComplexMatrix::identity(m.rows());
  ComplexMatrix term = ComplexMatrix::identity(m.rows());
  for (int j = 1; j <= 30; ++j) {
    term = Complex(1.0 / j, 0.0) * matmul(term, scaled);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = matmul(sum, sum);
  return sum;
}

double two_level_dense(double theta, double dt, long steps) {
  const Complex i(0.0, 1.0);
  const ComplexMatrix h = ComplexMatrix::from_rows(
      {{0.0, std::cos(theta) - i * std::sin(theta)}, {std::cos(theta) + i * std::sin(theta), 0.0}});
  const ComplexMatrix sz = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  const ComplexMatrix step = expm(Complex(0.0, -dt) * h);
  return otoc_dense(step, sz, sz, steps);
}

}  // namespace qwotoc::oracle
