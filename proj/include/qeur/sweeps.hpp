#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qeur/measurement.hpp"

namespace qeur {

enum class OutputFormat { Csv, Json };

/// Inclusive linear grid over [start, end] plus the output target.
struct SweepConfig {
  double start = 0.0;
  double end = 0.0;
  std::size_t points = 0;
  // theta sweep: observable-to-memory pairing, measured on A.
  std::vector<std::pair<Pauli, std::string>> pairing = {
      {Pauli::X, "B"}, {Pauli::Y, "C"}, {Pauli::Z, "D"}};
  // p sweep: (key, check) observables.
  std::pair<Pauli, Pauli> observables = {Pauli::Y, Pauli::Z};
  std::string out_path;
  OutputFormat format = OutputFormat::Csv;
};

struct Fig3Row {
  double theta = 0.0;
  double lhs_total = 0.0;
  double b_mu = 0.0;
  double delta3_raw = 0.0;
  double delta3_clamped = 0.0;
  double new_bound = 0.0;
  double rb_bound = 0.0;
  double slack_new = 0.0;
  double slack_rb = 0.0;
};

struct Fig4Row {
  double p = 0.0;
  double q_mu = 0.0;
  double delta_raw = 0.0;
  double k_old_bilateral = 0.0;
  double k_new_bilateral = 0.0;
  double improvement = 0.0;
};

/// theta sweep of the three-observable bound on the tilted four-qubit
/// family; grid must lie inside [0, pi/2].
std::vector<Fig3Row> fig3_rows(const SweepConfig& cfg);

/// p sweep of the key-rate bounds on the three-qubit Werner family with
/// alice A, bob B, eve D; grid must lie inside [0, 1].
std::vector<Fig4Row> fig4_rows(const SweepConfig& cfg);

/// Computes the rows and writes them to cfg.out_path atomically
/// (temp file + rename). Numeric CSV cells use fixed 9 decimal places.
void run_fig3_sweep(const SweepConfig& cfg);
void run_fig4_sweep(const SweepConfig& cfg);

}  // namespace qeur
