#include "qeur/report_json.hpp"

#include <cinttypes>
#include <cstdio>

namespace qeur {

nlohmann::ordered_json report_to_json(const EurReport& rep,
                                      const std::string& scenario) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["scenario"] = scenario;
  doc["lhs_terms"] = rep.lhs_terms;
  doc["lhs_total"] = rep.lhs_total;
  doc["q_mu"] = rep.q_mu;
  doc["delta"] = rep.delta;
  doc["rb_bound"] = rep.rb_bound;
  doc["new_bound"] = rep.new_bound;
  doc["slack_new"] = rep.slack_new;
  doc["tight"] = rep.tight;
  return doc;
}

nlohmann::ordered_json report_to_json(const GeurReport& rep) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["scenario"] = "theorem2";
  doc["n"] = rep.n;
  doc["overlap_matrix"] = rep.overlap_matrix;
  doc["b_mu"] = rep.b_mu;
  doc["delta_n"] = rep.delta_n;
  doc["lhs_terms"] = rep.lhs_terms;
  doc["lhs_total"] = rep.lhs_total;
  doc["rb_bound"] = rep.rb_bound;
  doc["new_bound"] = rep.new_bound;
  doc["slack_new"] = rep.slack_new;
  doc["tight"] = rep.tight;
  return doc;
}

nlohmann::ordered_json report_to_json(const KeyRateReport& rep) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["scenario"] = "keyrate";
  doc["q_mu"] = rep.q_mu;
  doc["delta"] = rep.delta;
  doc["s_r_given_b"] = rep.s_r_given_b;
  doc["s_k_given_b"] = rep.s_k_given_b;
  doc["s_r_given_rprime"] = rep.s_r_given_rprime;
  doc["s_k_given_kprime"] = rep.s_k_given_kprime;
  doc["k_old_unilateral"] = rep.k_old_unilateral;
  doc["k_old_bilateral"] = rep.k_old_bilateral;
  doc["k_new_unilateral"] = rep.k_new_unilateral;
  doc["k_new_bilateral"] = rep.k_new_bilateral;
  doc["improvement"] = rep.improvement;
  return doc;
}

nlohmann::ordered_json report_to_json(const CertifySummary& summary) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["scenario"] = certify_scenario_name(summary.scenario);
  doc["trials"] = summary.trials;
  doc["qubits"] = summary.n_qubits;
  doc["seed"] = summary.seed;
  doc["min_slack"] = summary.min_slack;
  doc["violations"] = summary.violations;
  doc["pass"] = summary.pass;
  return doc;
}

std::string certify_text(const CertifySummary& summary) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "scenario: %s\n"
                "trials: %zu\n"
                "qubits: %zu\n"
                "seed: %" PRIu64 "\n"
                "min_slack: %.12e\n"
                "violations: %zu\n"
                "pass: %s\n",
                certify_scenario_name(summary.scenario), summary.trials,
                summary.n_qubits, summary.seed, summary.min_slack,
                summary.violations, summary.pass ? "true" : "false");
  return buf;
}

}  // namespace qeur
