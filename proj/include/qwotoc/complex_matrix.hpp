#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qwotoc {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Small and dependency free: it carries the 2x2 momentum blocks as well as
/// the 2N x 2N operators used by the dense oracle. Every reduction in this
/// file runs in ascending index order so results are bitwise reproducible.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-wise literal, e.g. `ComplexMatrix::from_rows({{1, 0}, {0, 1}})`.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const noexcept { return data_; }

  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_sq(const ComplexMatrix& m);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

/// Squared Frobenius distance ||a - b||_F^2.
double distance_sq(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||M^dagger M - 1||_F < tol.
bool is_unitary(const ComplexMatrix& m, double tol = 1e-12);

/// Integer power by repeated multiplication. Negative powers are only
/// defined for unitary input and use the adjoint as inverse.
ComplexMatrix matpow_int(const ComplexMatrix& m, long t);

/// All powers m^0 .. m^t_max from one multiplication pass. For unitary input
/// the last rung is checked to still be unitary to 1e-10.
std::vector<ComplexMatrix> power_ladder(const ComplexMatrix& m, long t_max);

}  // namespace qwotoc
