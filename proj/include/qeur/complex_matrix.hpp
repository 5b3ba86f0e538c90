#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qeur {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Rows are contiguous so the kernel layer
/// can stream over them.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Complex* row(std::size_t r) { return entries_.data() + r * cols_; }
  const Complex* row(std::size_t r) const {
    return entries_.data() + r * cols_;
  }
  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  /// Sum of diagonal entries. Throws DimensionMismatch if not square.
  Complex trace() const;

  ComplexMatrix adjoint() const;

  /// Largest |entry|.
  double max_abs() const;

  /// Largest |m - m†| entry; square matrices only.
  double hermiticity_defect() const;

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex alpha, const ComplexMatrix& m);

/// Largest |a - b| entry; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qeur
