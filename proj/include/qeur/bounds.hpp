#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qeur/density_matrix.hpp"
#include "qeur/measurement.hpp"

namespace qeur {

/// Slack below this value counts as an inequality violation. Looser than
/// the 1e-9 computation tolerance to absorb eigensolver noise on
/// near-degenerate spectra.
inline constexpr double kViolationThreshold = -1e-7;

/// Slack at or below this value counts as tight.
inline constexpr double kTightTolerance = 1e-9;

/// Two-observable bound evaluation.
///
/// For the tripartite bound: rb_bound is the plain incompatibility bound
/// q_mu, delta may be negative, and new_bound = q_mu + max(0, delta) so
/// new_bound >= rb_bound always.
///
/// For the bipartite memory bound (berta_bound): delta holds the raw
/// conditional-entropy correction S(A|B) and new_bound = rb_bound =
/// q_mu + delta with no clamping.
struct EurReport {
  std::vector<double> lhs_terms;
  double lhs_total = 0.0;
  double q_mu = 0.0;
  double delta = 0.0;
  double rb_bound = 0.0;
  double new_bound = 0.0;
  double slack_new = 0.0;
  bool tight = false;
};

/// N-observable bound evaluation. rb_bound is b_mu alone; new_bound =
/// b_mu + max(0, delta_n).
struct GeurReport {
  std::size_t n = 0;
  std::vector<std::vector<double>> overlap_matrix;
  double b_mu = 0.0;
  double delta_n = 0.0;
  std::vector<double> lhs_terms;
  double lhs_total = 0.0;
  double rb_bound = 0.0;
  double new_bound = 0.0;
  double slack_new = 0.0;
  bool tight = false;
};

/// Secret-key-rate lower bounds, before and after the delta correction.
struct KeyRateReport {
  double q_mu = 0.0;
  double delta = 0.0;
  double s_r_given_b = 0.0;
  double s_k_given_b = 0.0;
  double s_r_given_rprime = 0.0;
  double s_k_given_kprime = 0.0;
  double k_old_unilateral = 0.0;
  double k_old_bilateral = 0.0;
  double k_new_unilateral = 0.0;
  double k_new_bilateral = 0.0;
  double improvement = 0.0;
};

/// -log2 of the maximal squared overlap, in [0, log2 dim].
double q_mu(const ProjectiveMeasurement& r, const ProjectiveMeasurement& k);

/// Bipartite memory bound on a two-party state: the first layout label is
/// measured, the second is the memory.
EurReport berta_bound(const DensityMatrix& rho_ab,
                      const ProjectiveMeasurement& r,
                      const ProjectiveMeasurement& k);

/// Tripartite bound with the delta correction: measurements r and k on
/// target, memories memory_r and memory_k.
EurReport theorem1_report(const DensityMatrix& rho, const ProjectiveMeasurement& r,
                          const std::string& memory_r,
                          const ProjectiveMeasurement& k,
                          const std::string& memory_k,
                          const std::string& target);

/// N-observable bound for a full observable-to-memory assignment.
GeurReport geur_report(const DensityMatrix& rho,
                       const MeasurementAssignment& assignment);

/// Key-rate bounds. Both observables are measured on alice; the bilateral
/// entropies compare against bob measuring the same observable. The delta
/// correction pairs r with memory bob and k with memory eve.
KeyRateReport key_rate_report(const DensityMatrix& rho_abd,
                              const ProjectiveMeasurement& r,
                              const ProjectiveMeasurement& k,
                              const std::string& alice, const std::string& bob,
                              const std::string& eve);

enum class CertifyScenario { Theorem1, Theorem2N3, Berta, KeyRateOrdering };

struct CertifySummary {
  CertifyScenario scenario = CertifyScenario::Theorem1;
  std::size_t trials = 0;
  std::size_t n_qubits = 0;
  std::uint64_t seed = 0;
  double min_slack = 0.0;
  std::size_t violations = 0;
  bool pass = false;
};

/// Required qubit count for a certification scenario.
std::size_t certify_qubits(CertifyScenario scenario);

const char* certify_scenario_name(CertifyScenario scenario);

/// Fuzzes the scenario's inequality over random mixed states (and, for the
/// N-observable scenario, random qubit bases). Violations are counted, not
/// thrown; pass means zero slacks below kViolationThreshold.
CertifySummary certify(std::size_t trials, std::size_t n_qubits,
                       std::uint64_t seed, CertifyScenario scenario);

}  // namespace qeur
