#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qeur/complex_matrix.hpp"
#include "qeur/layout.hpp"

namespace qeur {

/// Validated quantum state: Hermitian, unit trace, positive semidefinite
/// (within the tolerances below) over a labeled tensor product.
class DensityMatrix {
 public:
  static constexpr double kHermTol = 1e-9;
  static constexpr double kTraceTol = 1e-9;
  static constexpr double kEigenvalueFloor = -1e-9;

  /// Throws InvalidState naming the violated invariant ("finite entries",
  /// "hermiticity", "trace", "positivity"), or DimensionMismatch if the
  /// matrix does not fit the layout.
  DensityMatrix(SystemLayout layout, ComplexMatrix matrix);

  const SystemLayout& layout() const { return layout_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

  /// Partial trace down to the kept labels (layout order preserved).
  DensityMatrix reduce(const std::vector<std::string>& keep) const;

 private:
  SystemLayout layout_;
  ComplexMatrix matrix_;
};

// State families.

/// (|00> + |11>)/sqrt(2) on {A,B}.
DensityMatrix bell_phi_plus();

/// (|0...0> + |1...1>)/sqrt(2) on n qubits labeled A, B, C, ...
DensityMatrix ghz(std::size_t n);

/// cos(theta)|0000> + sin(theta)|1111> on {A,B,C,D}; theta in [0, pi/2].
DensityMatrix ghz4_theta(double theta);

/// p |GHZ3><GHZ3| + (1-p)/8 I on {A,B,D}; p in [0,1].
DensityMatrix werner3(double p);

/// Normalized complex Gaussian vector as a pure state on n qubits.
DensityMatrix random_pure(std::size_t n, std::uint64_t seed);

/// G G†/tr(G G†) for a 2^n x rank complex Gaussian G; 1 <= rank <= 2^n.
DensityMatrix random_mixed(std::size_t n, std::size_t rank,
                           std::uint64_t seed);

enum class StateFamily { Bell, GhzN, GhzTheta, Werner3, RandomPure, RandomMixed };

struct StateFamilySpec {
  StateFamily family = StateFamily::Bell;
  std::size_t n_qubits = 2;
  double theta = 0.0;        // GhzTheta
  double p = 0.0;            // Werner3
  std::uint64_t seed = 0;    // random families
  std::size_t rank = 1;      // RandomMixed
};

DensityMatrix make_state(const StateFamilySpec& spec);

}  // namespace qeur
