#pragma once

#include <string>
#include <vector>

#include "qeur/complex_matrix.hpp"
#include "qeur/density_matrix.hpp"

namespace qeur {

enum class Pauli { X, Y, Z };

/// Nondegenerate observable given by its complete orthonormal eigenbasis.
/// Row i of the basis matrix holds the components of the i-th eigenstate.
class ProjectiveMeasurement {
 public:
  static constexpr double kBasisTol = 1e-9;

  /// Throws InvalidMeasurement unless the rows form a complete orthonormal
  /// basis within kBasisTol.
  ProjectiveMeasurement(std::string name, ComplexMatrix basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.rows(); }
  const ComplexMatrix& basis() const { return basis_; }
  const Complex* vector(std::size_t i) const { return basis_.row(i); }

  /// Rank-1 projector |phi_i><phi_i|.
  ComplexMatrix projector(std::size_t i) const;

 private:
  std::string name_;
  ComplexMatrix basis_;
};

ProjectiveMeasurement pauli(Pauli which);

/// Largest squared overlap between eigenstates of the two bases, in
/// [1/dim, 1].
double max_overlap(const ProjectiveMeasurement& r,
                   const ProjectiveMeasurement& k);

/// True iff every squared overlap equals 1/dim within tol.
bool is_mub_pair(const ProjectiveMeasurement& r,
                 const ProjectiveMeasurement& k, double tol = 1e-9);

/// Dephases the target subsystem in the measurement basis:
/// sum_i (P_i (x) 1) rho (P_i (x) 1).
DensityMatrix post_measurement_state(const DensityMatrix& rho,
                                     const ProjectiveMeasurement& m,
                                     const std::string& target);

/// Outcome probabilities p_i = tr[(P_i (x) 1) rho]. Round-off negatives
/// above -1e-9 are clamped to 0; anything lower raises NotADistribution.
std::vector<double> outcome_distribution(const DensityMatrix& rho,
                                         const ProjectiveMeasurement& m,
                                         const std::string& target);

/// Joint outcome table of two single-site measurements. Row index is the
/// first site's outcome.
struct ProbTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> p;  // row-major

  double& at(std::size_t r, std::size_t c) { return p[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return p[r * cols + c]; }
  double total() const;
  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;
};

ProbTable bilateral_distribution(const DensityMatrix& rho,
                                 const ProjectiveMeasurement& m1,
                                 const std::string& t1,
                                 const ProjectiveMeasurement& m2,
                                 const std::string& t2);

/// Observable-to-memory wiring for the N-observable bound.
struct MeasurementPair {
  ProjectiveMeasurement measurement;
  std::string memory_label;
};

struct MeasurementAssignment {
  std::string target_label;
  std::vector<MeasurementPair> pairs;
};

}  // namespace qeur
