#include "qeur/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "qeur/errors.hpp"
#include "qeur/linalg.hpp"

namespace qeur {

namespace {

constexpr double kValueClamp = 1e-12;
constexpr double kValueRaiseFloor = -1e-9;
constexpr double kTotalTol = 1e-9;
constexpr double kRoundOffFloor = -1e-9;

// -sum v log2 v with values below the clamp treated as 0. The caller
// supplies the error to raise for values below -1e-9.
template <typename Raise>
double entropy_sum(const std::vector<double>& values, Raise raise) {
  double h = 0.0;
  for (double v : values) {
    if (v < kValueRaiseFloor) {
      raise();
    }
    if (v >= kValueClamp) {
      h -= v * std::log2(v);
    }
  }
  return h;
}

double checked_distribution_entropy(const std::vector<double>& p) {
  const double h = entropy_sum(p, [] {
    throw NotADistribution("probability below -1e-9");
  });
  double total = 0.0;
  for (double v : p) {
    total += v;
  }
  if (std::abs(total - 1.0) > kTotalTol) {
    throw NotADistribution("probabilities must sum to 1");
  }
  return h;
}

double clamp_round_off(double v) {
  return (v < 0.0 && v > kRoundOffFloor) ? 0.0 : v;
}

void require_distinct_sites(const DensityMatrix& rho,
                            const std::string& target,
                            const std::string& memory) {
  rho.layout().index_of(target);
  rho.layout().index_of(memory);
  if (target == memory) {
    throw DomainError("target and memory must differ");
  }
}

}  // namespace

double von_neumann(const DensityMatrix& rho) {
  const Eigensystem eig = hermitian_eigensystem(rho.matrix());
  return entropy_sum(eig.values, [] {
    throw DomainError("eigenvalue below -1e-9");
  });
}

double shannon(const std::vector<double>& p) {
  return checked_distribution_entropy(p);
}

double conditional_entropy(const DensityMatrix& rho,
                           const std::vector<std::string>& condition_on) {
  if (condition_on.empty()) {
    throw DomainError("condition set must be nonempty");
  }
  std::vector<std::string> distinct;
  for (const std::string& l : condition_on) {
    rho.layout().index_of(l);
    if (std::find(distinct.begin(), distinct.end(), l) == distinct.end()) {
      distinct.push_back(l);
    }
  }
  if (distinct.size() == rho.layout().count()) {
    throw EmptyRemainder("conditioning on every subsystem");
  }
  return von_neumann(rho) - von_neumann(rho.reduce(distinct));
}

double measured_conditional_entropy(const DensityMatrix& rho,
                                    const ProjectiveMeasurement& m,
                                    const std::string& target,
                                    const std::string& memory) {
  require_distinct_sites(rho, target, memory);
  const DensityMatrix sigma =
      post_measurement_state(rho.reduce({target, memory}), m, target);
  return clamp_round_off(von_neumann(sigma) -
                         von_neumann(sigma.reduce({memory})));
}

double holevo(const DensityMatrix& rho, const ProjectiveMeasurement& m,
              const std::string& target, const std::string& memory) {
  require_distinct_sites(rho, target, memory);
  const DensityMatrix sigma =
      post_measurement_state(rho.reduce({target, memory}), m, target);
  return clamp_round_off(von_neumann(sigma.reduce({target})) +
                         von_neumann(sigma.reduce({memory})) -
                         von_neumann(sigma));
}

double classical_conditional_entropy(const ProbTable& table) {
  return checked_distribution_entropy(table.p) -
         checked_distribution_entropy(table.col_marginal());
}

}  // namespace qeur
