#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeur/bounds.hpp"
#include "qeur/density_matrix.hpp"
#include "qeur/entropy.hpp"
#include "qeur/errors.hpp"
#include "qeur/measurement.hpp"
#include "qeur/report_json.hpp"
#include "qeur/state_io.hpp"
#include "qeur/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

qeur::Pauli parse_pauli(const std::string& tok) {
  if (tok == "X" || tok == "x") {
    return qeur::Pauli::X;
  }
  if (tok == "Y" || tok == "y") {
    return qeur::Pauli::Y;
  }
  if (tok == "Z" || tok == "z") {
    return qeur::Pauli::Z;
  }
  throw qeur::DomainError("unknown Pauli \"" + tok + "\" (expected X, Y or Z)");
}

// A user basis file holds a unitary whose columns are the basis vectors:
// {"name": "...", "matrix_re": [[...]], "matrix_im": [[...]]}.
qeur::ProjectiveMeasurement load_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw qeur::IoError("cannot open basis file \"" + path + "\"");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw qeur::Error(std::string("basis file is not valid JSON: ") + e.what());
  }
  const auto re_it = doc.find("matrix_re");
  const auto im_it = doc.find("matrix_im");
  if (re_it == doc.end() || im_it == doc.end()) {
    throw qeur::Error("basis file needs \"matrix_re\" and \"matrix_im\"");
  }
  const auto& re = *re_it;
  const auto& im = *im_it;
  if (!re.is_array() || re.empty() || !im.is_array() ||
      im.size() != re.size()) {
    throw qeur::Error("basis matrix parts must be equal-size arrays of rows");
  }
  const std::size_t d = re.size();
  qeur::ComplexMatrix basis(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    if (!re[r].is_array() || re[r].size() != d || !im[r].is_array() ||
        im[r].size() != d) {
      throw qeur::Error("basis matrix rows must hold dim numbers");
    }
    for (std::size_t c = 0; c < d; ++c) {
      // Column c of the unitary becomes basis vector c (stored as row c).
      basis(c, r) = qeur::Complex{re[r][c].get<double>(),
                                  im[r][c].get<double>()};
    }
  }
  const std::string name =
      doc.contains("name") && doc["name"].is_string()
          ? doc["name"].get<std::string>()
          : path;
  return qeur::ProjectiveMeasurement(name, std::move(basis));
}

qeur::ProjectiveMeasurement parse_observable(const std::string& tok) {
  if (!tok.empty() && tok.front() == '@') {
    return load_basis_file(tok.substr(1));
  }
  return qeur::pauli(parse_pauli(tok));
}

std::vector<std::pair<qeur::Pauli, std::string>> parse_pairing(
    const std::string& text) {
  std::vector<std::pair<qeur::Pauli, std::string>> out;
  for (const std::string& item : split(text, ',')) {
    const std::vector<std::string> parts = split(item, ':');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw qeur::DomainError("pairing entries must look like X:B");
    }
    out.emplace_back(parse_pauli(parts[0]), parts[1]);
  }
  return out;
}

qeur::OutputFormat parse_format(const std::string& text) {
  if (text == "csv") {
    return qeur::OutputFormat::Csv;
  }
  if (text == "json") {
    return qeur::OutputFormat::Json;
  }
  throw qeur::DomainError("format must be csv or json");
}

qeur::CertifyScenario parse_certify_scenario(const std::string& text) {
  if (text == "theorem1") {
    return qeur::CertifyScenario::Theorem1;
  }
  if (text == "theorem2-n3") {
    return qeur::CertifyScenario::Theorem2N3;
  }
  if (text == "berta") {
    return qeur::CertifyScenario::Berta;
  }
  if (text == "keyrate-ordering") {
    return qeur::CertifyScenario::KeyRateOrdering;
  }
  throw qeur::DomainError(
      "scenario must be theorem1, theorem2-n3, berta or keyrate-ordering");
}

struct BoundOptions {
  std::string state_path;
  std::string scenario;
  std::string observables;  // default depends on the scenario
  std::string pairing = "X:B,Y:C,Z:D";
  std::string target = "A";
  std::string memories = "B,C";
  std::string alice = "A";
  std::string bob = "B";
  std::string eve = "D";
};

int run_bound(const BoundOptions& opt) {
  const qeur::DensityMatrix rho = qeur::load_state_file(opt.state_path);
  const std::string observables =
      !opt.observables.empty() ? opt.observables
      : opt.scenario == "keyrate" ? "Y,Z"
                                  : "X,Z";
  nlohmann::ordered_json doc;
  if (opt.scenario == "theorem1") {
    const std::vector<std::string> obs = split(observables, ',');
    const std::vector<std::string> mems = split(opt.memories, ',');
    if (obs.size() != 2 || mems.size() != 2) {
      throw qeur::DomainError(
          "theorem1 needs two observables and two memories");
    }
    doc = qeur::report_to_json(
        qeur::theorem1_report(rho, parse_observable(obs[0]), mems[0],
                              parse_observable(obs[1]), mems[1], opt.target),
        "theorem1");
  } else if (opt.scenario == "theorem2") {
    qeur::MeasurementAssignment assignment;
    assignment.target_label = opt.target;
    for (const auto& [which, memory] : parse_pairing(opt.pairing)) {
      assignment.pairs.push_back({qeur::pauli(which), memory});
    }
    doc = qeur::report_to_json(qeur::geur_report(rho, assignment));
  } else if (opt.scenario == "berta") {
    const std::vector<std::string> obs = split(observables, ',');
    if (obs.size() != 2) {
      throw qeur::DomainError("berta needs two observables");
    }
    doc = qeur::report_to_json(
        qeur::berta_bound(rho, parse_observable(obs[0]),
                          parse_observable(obs[1])),
        "berta");
  } else if (opt.scenario == "keyrate") {
    const std::vector<std::string> obs = split(observables, ',');
    if (obs.size() != 2) {
      throw qeur::DomainError("keyrate needs two observables");
    }
    doc = qeur::report_to_json(
        qeur::key_rate_report(rho, parse_observable(obs[0]),
                              parse_observable(obs[1]), opt.alice, opt.bob,
                              opt.eve));
  } else {
    throw qeur::DomainError(
        "scenario must be theorem1, theorem2, berta or keyrate");
  }
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty and key-rate bounds for multipartite "
               "qubit states"};
  app.require_subcommand(1);

  qeur::SweepConfig fig3_cfg;
  fig3_cfg.start = 0.0;
  fig3_cfg.end = 1.57079632679489661923;
  fig3_cfg.points = 9;
  fig3_cfg.out_path = "fig3.csv";
  std::string fig3_pairing = "X:B,Y:C,Z:D";
  std::string fig3_format = "csv";
  CLI::App* fig3 = app.add_subcommand(
      "fig3-sweep", "Theta sweep of the three-observable bound");
  fig3->add_option("--points", fig3_cfg.points, "Grid points (>= 2)");
  fig3->add_option("--start", fig3_cfg.start, "Grid start (radians)");
  fig3->add_option("--end", fig3_cfg.end, "Grid end (radians)");
  fig3->add_option("--pairing", fig3_pairing,
                   "Observable-to-memory pairing, e.g. X:B,Y:C,Z:D");
  fig3->add_option("--out", fig3_cfg.out_path, "Output path");
  fig3->add_option("--format", fig3_format, "csv or json");

  qeur::SweepConfig fig4_cfg;
  fig4_cfg.start = 0.0;
  fig4_cfg.end = 1.0;
  fig4_cfg.points = 11;
  fig4_cfg.out_path = "fig4.csv";
  std::string fig4_observables = "Y,Z";
  std::string fig4_format = "csv";
  CLI::App* fig4 = app.add_subcommand(
      "fig4-sweep", "Mixing sweep of the key-rate bounds");
  fig4->add_option("--points", fig4_cfg.points, "Grid points (>= 2)");
  fig4->add_option("--start", fig4_cfg.start, "Grid start");
  fig4->add_option("--end", fig4_cfg.end, "Grid end");
  fig4->add_option("--observables", fig4_observables,
                   "Key and check observables, e.g. Y,Z");
  fig4->add_option("--out", fig4_cfg.out_path, "Output path");
  fig4->add_option("--format", fig4_format, "csv or json");

  BoundOptions bound_opt;
  CLI::App* bound = app.add_subcommand(
      "bound", "Evaluate one bound on a state file and print a JSON report");
  bound->add_option("--state", bound_opt.state_path, "State JSON file")
      ->required();
  bound
      ->add_option("--scenario", bound_opt.scenario,
                   "theorem1, theorem2, berta or keyrate")
      ->required();
  bound->add_option("--observables", bound_opt.observables,
                    "Two observables (Pauli letter or @basis.json)");
  bound->add_option("--pairing", bound_opt.pairing,
                    "theorem2 pairing, e.g. X:B,Y:C,Z:D");
  bound->add_option("--target", bound_opt.target, "Measured label");
  bound->add_option("--memories", bound_opt.memories,
                    "theorem1 memories, e.g. B,C");
  bound->add_option("--alice", bound_opt.alice, "keyrate alice label");
  bound->add_option("--bob", bound_opt.bob, "keyrate bob label");
  bound->add_option("--eve", bound_opt.eve, "keyrate eve label");

  std::string certify_scenario;
  std::size_t certify_trials = 1000;
  std::uint64_t certify_seed = 42;
  std::size_t certify_qubits_opt = 0;
  CLI::App* certify = app.add_subcommand(
      "certify", "Fuzz an inequality over random states");
  certify
      ->add_option("--scenario", certify_scenario,
                   "theorem1, theorem2-n3, berta or keyrate-ordering")
      ->required();
  certify->add_option("--trials", certify_trials, "Trial count");
  certify->add_option("--seed", certify_seed, "Base seed");
  certify->add_option("--qubits", certify_qubits_opt,
                      "Qubit count (defaults to the scenario's)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (fig3->parsed()) {
      fig3_cfg.pairing = parse_pairing(fig3_pairing);
      fig3_cfg.format = parse_format(fig3_format);
      qeur::run_fig3_sweep(fig3_cfg);
      return kExitOk;
    }
    if (fig4->parsed()) {
      const std::vector<std::string> obs = split(fig4_observables, ',');
      if (obs.size() != 2) {
        throw qeur::DomainError("exactly two observables required");
      }
      fig4_cfg.observables = {parse_pauli(obs[0]), parse_pauli(obs[1])};
      fig4_cfg.format = parse_format(fig4_format);
      qeur::run_fig4_sweep(fig4_cfg);
      return kExitOk;
    }
    if (bound->parsed()) {
      return run_bound(bound_opt);
    }
    if (certify->parsed()) {
      const qeur::CertifyScenario scenario =
          parse_certify_scenario(certify_scenario);
      const std::size_t qubits = certify_qubits_opt == 0
                                     ? qeur::certify_qubits(scenario)
                                     : certify_qubits_opt;
      const qeur::CertifySummary summary =
          qeur::certify(certify_trials, qubits, certify_seed, scenario);
      std::cout << qeur::certify_text(summary);
      return summary.pass ? kExitOk : kExitViolation;
    }
  } catch (const qeur::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qeur::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
