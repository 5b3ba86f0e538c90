#include "qeur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qeur/entropy.hpp"
#include "qeur/errors.hpp"
#include "qeur/rng.hpp"

namespace qeur {

double q_mu(const ProjectiveMeasurement& r, const ProjectiveMeasurement& k) {
  return -std::log2(max_overlap(r, k));
}

EurReport berta_bound(const DensityMatrix& rho_ab,
                      const ProjectiveMeasurement& r,
                      const ProjectiveMeasurement& k) {
  if (rho_ab.layout().count() != 2) {
    throw InvalidArity("bipartite layout required");
  }
  const std::string& target = rho_ab.layout().labels()[0];
  const std::string& memory = rho_ab.layout().labels()[1];
  EurReport rep;
  rep.lhs_terms = {measured_conditional_entropy(rho_ab, r, target, memory),
                   measured_conditional_entropy(rho_ab, k, target, memory)};
  rep.lhs_total = rep.lhs_terms[0] + rep.lhs_terms[1];
  rep.q_mu = q_mu(r, k);
  rep.delta = conditional_entropy(rho_ab, {memory});
  rep.rb_bound = rep.q_mu + rep.delta;
  rep.new_bound = rep.rb_bound;
  rep.slack_new = rep.lhs_total - rep.new_bound;
  rep.tight = rep.slack_new <= kTightTolerance;
  return rep;
}

EurReport theorem1_report(const DensityMatrix& rho,
                          const ProjectiveMeasurement& r,
                          const std::string& memory_r,
                          const ProjectiveMeasurement& k,
                          const std::string& memory_k,
                          const std::string& target) {
  if (rho.layout().count() != 3) {
    throw InvalidArity("tripartite layout required");
  }
  rho.layout().index_of(target);
  rho.layout().index_of(memory_r);
  rho.layout().index_of(memory_k);
  if (target == memory_r || target == memory_k || memory_r == memory_k) {
    throw DomainError("target and memory labels must be pairwise distinct");
  }
  EurReport rep;
  rep.lhs_terms = {measured_conditional_entropy(rho, r, target, memory_r),
                   measured_conditional_entropy(rho, k, target, memory_k)};
  rep.lhs_total = rep.lhs_terms[0] + rep.lhs_terms[1];
  rep.q_mu = q_mu(r, k);
  rep.delta = von_neumann(rho.reduce({target})) -
              (holevo(rho, r, target, memory_r) +
               holevo(rho, k, target, memory_k));
  rep.rb_bound = rep.q_mu;
  rep.new_bound = rep.q_mu + std::max(0.0, rep.delta);
  rep.slack_new = rep.lhs_total - rep.new_bound;
  rep.tight = rep.slack_new <= kTightTolerance;
  return rep;
}

GeurReport geur_report(const DensityMatrix& rho,
                       const MeasurementAssignment& assignment) {
  const std::size_t n = assignment.pairs.size();
  if (n < 2) {
    throw InvalidArity("at least two observables required");
  }
  rho.layout().index_of(assignment.target_label);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& mem = assignment.pairs[i].memory_label;
    rho.layout().index_of(mem);
    if (mem == assignment.target_label) {
      throw DomainError("memory label equals the measured label");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (mem == assignment.pairs[j].memory_label) {
        throw DomainError("memory labels must be distinct");
      }
    }
  }

  GeurReport rep;
  rep.n = n;
  rep.overlap_matrix.assign(n, std::vector<double>(n, 1.0));
  double pair_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = max_overlap(assignment.pairs[i].measurement,
                                   assignment.pairs[j].measurement);
      rep.overlap_matrix[i][j] = c;
      rep.overlap_matrix[j][i] = c;
      pair_sum += -std::log2(c);
    }
  }
  rep.b_mu = pair_sum / static_cast<double>(n - 1);

  double holevo_sum = 0.0;
  rep.lhs_terms.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pair = assignment.pairs[i];
    rep.lhs_terms[i] = measured_conditional_entropy(
        rho, pair.measurement, assignment.target_label, pair.memory_label);
    rep.lhs_total += rep.lhs_terms[i];
    holevo_sum += holevo(rho, pair.measurement, assignment.target_label,
                         pair.memory_label);
  }
  rep.delta_n = 0.5 * static_cast<double>(n) *
                    von_neumann(rho.reduce({assignment.target_label})) -
                holevo_sum;
  rep.rb_bound = rep.b_mu;
  rep.new_bound = rep.b_mu + std::max(0.0, rep.delta_n);
  rep.slack_new = rep.lhs_total - rep.new_bound;
  rep.tight = rep.slack_new <= kTightTolerance;
  return rep;
}

KeyRateReport key_rate_report(const DensityMatrix& rho_abd,
                              const ProjectiveMeasurement& r,
                              const ProjectiveMeasurement& k,
                              const std::string& alice, const std::string& bob,
                              const std::string& eve) {
  if (rho_abd.layout().count() != 3) {
    throw InvalidArity("tripartite layout required");
  }
  rho_abd.layout().index_of(alice);
  rho_abd.layout().index_of(bob);
  rho_abd.layout().index_of(eve);
  if (alice == bob || alice == eve || bob == eve) {
    throw DomainError("alice, bob and eve labels must be pairwise distinct");
  }
  KeyRateReport rep;
  rep.q_mu = q_mu(r, k);
  rep.s_r_given_b = measured_conditional_entropy(rho_abd, r, alice, bob);
  rep.s_k_given_b = measured_conditional_entropy(rho_abd, k, alice, bob);
  rep.s_r_given_rprime = classical_conditional_entropy(
      bilateral_distribution(rho_abd, r, alice, r, bob));
  rep.s_k_given_kprime = classical_conditional_entropy(
      bilateral_distribution(rho_abd, k, alice, k, bob));
  rep.delta = von_neumann(rho_abd.reduce({alice})) -
              (holevo(rho_abd, r, alice, bob) + holevo(rho_abd, k, alice, eve));
  const double bump = std::max(0.0, rep.delta);
  rep.k_old_unilateral = rep.q_mu - rep.s_r_given_b - rep.s_k_given_b;
  rep.k_old_bilateral = rep.q_mu - rep.s_r_given_rprime - rep.s_k_given_kprime;
  rep.k_new_unilateral = rep.k_old_unilateral + bump;
  rep.k_new_bilateral = rep.k_old_bilateral + bump;
  rep.improvement = rep.k_new_bilateral - rep.k_old_bilateral;
  return rep;
}

std::size_t certify_qubits(CertifyScenario scenario) {
  switch (scenario) {
    case CertifyScenario::Theorem1:
      return 3;
    case CertifyScenario::Theorem2N3:
      return 4;
    case CertifyScenario::Berta:
      return 2;
    case CertifyScenario::KeyRateOrdering:
      return 3;
  }
  throw DomainError("unknown certification scenario");
}

const char* certify_scenario_name(CertifyScenario scenario) {
  switch (scenario) {
    case CertifyScenario::Theorem1:
      return "theorem1";
    case CertifyScenario::Theorem2N3:
      return "theorem2-n3";
    case CertifyScenario::Berta:
      return "berta";
    case CertifyScenario::KeyRateOrdering:
      return "keyrate-ordering";
  }
  throw DomainError("unknown certification scenario");
}

namespace {

ProjectiveMeasurement random_qubit_basis(Rng& rng) {
  Complex a;
  Complex b;
  double norm_sq = 0.0;
  do {
    a = rng.gaussian_complex();
    b = rng.gaussian_complex();
    norm_sq = std::norm(a) + std::norm(b);
  } while (norm_sq < 1e-12);
  const double inv = 1.0 / std::sqrt(norm_sq);
  a *= inv;
  b *= inv;
  ComplexMatrix basis(2, 2);
  basis(0, 0) = a;
  basis(0, 1) = b;
  basis(1, 0) = -std::conj(b);
  basis(1, 1) = std::conj(a);
  return ProjectiveMeasurement("random", std::move(basis));
}

std::pair<Pauli, Pauli> random_distinct_paulis(Rng& rng) {
  constexpr Pauli kPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};
  const std::size_t first = rng.uniform_index(3);
  std::size_t second = rng.uniform_index(2);
  if (second >= first) {
    ++second;
  }
  return {kPaulis[first], kPaulis[second]};
}

double certify_trial(CertifyScenario scenario, std::size_t n_qubits,
                     Rng& rng) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t rank = 1 + rng.uniform_index(dim);
  switch (scenario) {
    case CertifyScenario::Theorem1: {
      const DensityMatrix rho = random_mixed(3, rank, rng.next_u64());
      const auto [p1, p2] = random_distinct_paulis(rng);
      const EurReport rep =
          theorem1_report(rho, pauli(p1), "B", pauli(p2), "C", "A");
      return rep.slack_new;
    }
    case CertifyScenario::Theorem2N3: {
      const DensityMatrix rho = random_mixed(4, rank, rng.next_u64());
      MeasurementAssignment assignment;
      assignment.target_label = "A";
      const char* memories[] = {"B", "C", "D"};
      for (const char* mem : memories) {
        assignment.pairs.push_back({random_qubit_basis(rng), mem});
      }
      return geur_report(rho, assignment).slack_new;
    }
    case CertifyScenario::Berta: {
      const DensityMatrix rho = random_mixed(2, rank, rng.next_u64());
      const auto [p1, p2] = random_distinct_paulis(rng);
      return berta_bound(rho, pauli(p1), pauli(p2)).slack_new;
    }
    case CertifyScenario::KeyRateOrdering: {
      const DensityMatrix rho = random_mixed(3, rank, rng.next_u64());
      const auto [p1, p2] = random_distinct_paulis(rng);
      const KeyRateReport rep =
          key_rate_report(rho, pauli(p1), pauli(p2), "A", "B", "C");
      return std::min(rep.k_new_unilateral - rep.k_old_unilateral,
                      rep.k_new_bilateral - rep.k_old_bilateral);
    }
  }
  throw DomainError("unknown certification scenario");
}

}  // namespace

CertifySummary certify(std::size_t trials, std::size_t n_qubits,
                       std::uint64_t seed, CertifyScenario scenario) {
  if (trials < 1) {
    throw DomainError("trials must be at least 1");
  }
  if (n_qubits != certify_qubits(scenario)) {
    throw DomainError(std::string("scenario ") +
                      certify_scenario_name(scenario) + " requires " +
                      std::to_string(certify_qubits(scenario)) + " qubits");
  }
  CertifySummary out;
  out.scenario = scenario;
  out.trials = trials;
  out.n_qubits = n_qubits;
  out.seed = seed;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(mix_seed(seed, trial));
    const double slack = certify_trial(scenario, n_qubits, rng);
    out.min_slack = std::min(out.min_slack, slack);
    if (slack < kViolationThreshold) {
      ++out.violations;
    }
  }
  out.pass = out.violations == 0;
  return out;
}

}  // namespace qeur
