#include "qwotoc/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "qwotoc/errors.hpp"

namespace qwotoc {

namespace {

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_finite(const ComplexMatrix& m, const char* where) {
  if (!m.all_finite()) throw DomainError(std::string(where) + ": non-finite matrix entry");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("ComplexMatrix: " + std::to_string(data_.size()) + " entries for a " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
  require_finite(*this, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ComplexMatrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: " + shape(a) + " * " + shape(b));
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("trace: non-square " + shape(m));
  Complex acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

double frobenius_sq(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& z : m.entries()) acc += std::norm(z);
  return acc;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: " + shape(a) + " + " + shape(b));
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("sub: " + shape(a) + " - " + shape(b));
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  }
  return out;
}

double distance_sq(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_sq(a - b); }

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  const double d2 = distance_sq(matmul(adjoint(m), m), ComplexMatrix::identity(m.rows()));
  return std::sqrt(d2) < tol;
}

ComplexMatrix matpow_int(const ComplexMatrix& m, long t) {
  if (!m.is_square()) throw ShapeError("matpow_int: non-square " + shape(m));
  if (t < 0 && !is_unitary(m, 1e-10)) throw DomainError("matpow_int: negative power of a non-unitary matrix");
  const ComplexMatrix base = t < 0 ? adjoint(m) : m;
  const long steps = t < 0 ? -t : t;
  ComplexMatrix out = ComplexMatrix::identity(m.rows());
  for (long i = 0; i < steps; ++i) out = matmul(out, base);
  return out;
}

std::vector<ComplexMatrix> power_ladder(const ComplexMatrix& m, long t_max) {
  if (!m.is_square()) throw ShapeError("power_ladder: non-square " + shape(m));
  if (t_max < 0) throw DomainError("power_ladder: negative t_max");
  std::vector<ComplexMatrix> ladder;
  ladder.reserve(static_cast<std::size_t>(t_max) + 1);
  ladder.push_back(ComplexMatrix::identity(m.rows()));
  for (long t = 1; t <= t_max; ++t) ladder.push_back(matmul(ladder.back(), m));
  // Drift guard: no re-unitarization is done along the ladder.
  if (is_unitary(m, 1e-10) && !is_unitary(ladder.back(), 1e-10)) {
    throw DomainError("power_ladder: unitarity drift above 1e-10 at t=" + std::to_string(t_max));
  }
  return ladder;
}

}  // namespace qwotoc
