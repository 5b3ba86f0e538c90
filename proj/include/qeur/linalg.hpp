#pragma once

#include <vector>

#include "qeur/complex_matrix.hpp"
#include "qeur/layout.hpp"

namespace qeur {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the kept subsystems, in layout order. Trace is
/// preserved.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const SystemLayout& layout,
                            const std::vector<std::string>& keep);

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns, vectors.col(i) <-> values[i]
};

inline constexpr double kDefaultHermTol = 1e-9;

/// Cyclic Jacobi diagonalization of a dense Hermitian matrix.
/// Requires max |m - m†| entry <= tol; reconstruction error stays within
/// 1e-9 * dim in max norm.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m,
                                  double tol = kDefaultHermTol);

}  // namespace qeur
