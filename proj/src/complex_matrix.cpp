#include "qeur/complex_matrix.hpp"

#include <cmath>

#include "qeur/errors.hpp"
#include "qeur/kernels.hpp"

namespace qeur {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex{1.0, 0.0};
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) {
    throw DimensionMismatch("trace requires a square matrix");
  }
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!is_square()) {
    throw DimensionMismatch("hermiticity defect requires a square matrix");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      return false;
    }
  }
  return true;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes differ");
  }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  kernels::active().axpy(out.data(), b.data(), b.rows() * b.cols(),
                         Complex{1.0, 0.0});
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  kernels::active().axpy(out.data(), b.data(), b.rows() * b.cols(),
                         Complex{-1.0, 0.0});
  return out;
}

ComplexMatrix operator*(Complex alpha, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  kernels::active().scale_copy(out.data(), m.data(), m.rows() * m.cols(),
                               alpha);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

}  // namespace qeur
