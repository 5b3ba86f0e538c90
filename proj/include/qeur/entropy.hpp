#pragma once

#include <string>
#include <vector>

#include "qeur/density_matrix.hpp"
#include "qeur/measurement.hpp"

namespace qeur {

// All entropies are base-2, in bits.

/// -sum lambda_i log2 lambda_i. Eigenvalues below 1e-12 count as 0; values
/// in (-1e-9, 1e-12) are round-off and also count as 0; below -1e-9 raises
/// DomainError.
double von_neumann(const DensityMatrix& rho);

/// -sum p_i log2 p_i over a distribution (entries >= 0 up to round-off,
/// total 1 within 1e-9; NotADistribution otherwise).
double shannon(const std::vector<double>& p);

/// S(rho) - S(rho_condition). condition_on must be a proper nonempty subset
/// of the layout; conditioning on everything raises EmptyRemainder.
double conditional_entropy(const DensityMatrix& rho,
                           const std::vector<std::string>& condition_on);

/// S(M|B) of the dephased state: reduce to {target, memory}, dephase the
/// target in the measurement basis, then take S(full) - S(memory).
/// Nonnegative; round-off negatives above -1e-9 are clamped to 0.
double measured_conditional_entropy(const DensityMatrix& rho,
                                    const ProjectiveMeasurement& m,
                                    const std::string& target,
                                    const std::string& memory);

/// Holevo quantity I(M:B) = S(outcomes) + S(memory) - S(joint) of the
/// dephased state. Nonnegative; round-off negatives above -1e-9 are
/// clamped to 0.
double holevo(const DensityMatrix& rho, const ProjectiveMeasurement& m,
              const std::string& target, const std::string& memory);

/// H(joint) - H(column marginal): entropy of the row outcome given the
/// column outcome.
double classical_conditional_entropy(const ProbTable& table);

}  // namespace qeur
