#include "qeur/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "qeur/bounds.hpp"
#include "qeur/density_matrix.hpp"
#include "qeur/errors.hpp"

namespace qeur {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kDomainSlop = 1e-12;

std::vector<double> grid(const SweepConfig& cfg, double lo, double hi) {
  if (cfg.points < 2) {
    throw DomainError("sweep requires at least 2 grid points");
  }
  if (!(cfg.start < cfg.end)) {
    throw DomainError("sweep start must be below end");
  }
  if (cfg.start < lo - kDomainSlop || cfg.end > hi + kDomainSlop) {
    throw DomainError("sweep grid leaves the family's domain");
  }
  std::vector<double> xs(cfg.points);
  const double step = (cfg.end - cfg.start) / static_cast<double>(cfg.points - 1);
  for (std::size_t i = 0; i < cfg.points; ++i) {
    xs[i] = cfg.start + step * static_cast<double>(i);
  }
  xs.front() = cfg.start;
  xs.back() = cfg.end;
  for (double& x : xs) {
    x = std::clamp(x, lo, hi);
  }
  return xs;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) {
      throw IoError("cannot open \"" + tmp + "\" for writing");
    }
    out << content;
    if (!out) {
      throw IoError("write to \"" + tmp + "\" failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw IoError("cannot rename \"" + tmp + "\" to \"" + path + "\"");
  }
}

void append_cell(std::string& line, double v, bool first) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), first ? "%.9f" : ",%.9f", v);
  line += buf;
}

}  // namespace

std::vector<Fig3Row> fig3_rows(const SweepConfig& cfg) {
  const std::vector<double> thetas = grid(cfg, 0.0, kHalfPi);
  MeasurementAssignment assignment;
  assignment.target_label = "A";
  for (const auto& [which, memory] : cfg.pairing) {
    assignment.pairs.push_back({pauli(which), memory});
  }
  std::vector<Fig3Row> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    const GeurReport rep = geur_report(ghz4_theta(theta), assignment);
    Fig3Row row;
    row.theta = theta;
    row.lhs_total = rep.lhs_total;
    row.b_mu = rep.b_mu;
    row.delta3_raw = rep.delta_n;
    row.delta3_clamped = std::max(0.0, rep.delta_n);
    row.new_bound = rep.new_bound;
    row.rb_bound = rep.rb_bound;
    row.slack_new = rep.slack_new;
    row.slack_rb = rep.lhs_total - rep.rb_bound;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Fig4Row> fig4_rows(const SweepConfig& cfg) {
  const std::vector<double> ps = grid(cfg, 0.0, 1.0);
  const ProjectiveMeasurement key = pauli(cfg.observables.first);
  const ProjectiveMeasurement check = pauli(cfg.observables.second);
  std::vector<Fig4Row> rows;
  rows.reserve(ps.size());
  for (double p : ps) {
    const KeyRateReport rep =
        key_rate_report(werner3(p), key, check, "A", "B", "D");
    Fig4Row row;
    row.p = p;
    row.q_mu = rep.q_mu;
    row.delta_raw = rep.delta;
    row.k_old_bilateral = rep.k_old_bilateral;
    row.k_new_bilateral = rep.k_new_bilateral;
    row.improvement = rep.improvement;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fig3_csv(const std::vector<Fig3Row>& rows) {
  std::string out =
      "theta,lhs_total,b_mu,delta3_raw,delta3_clamped,new_bound,rb_bound,"
      "slack_new,slack_rb\n";
  for (const Fig3Row& r : rows) {
    std::string line;
    append_cell(line, r.theta, true);
    for (double v : {r.lhs_total, r.b_mu, r.delta3_raw, r.delta3_clamped,
                     r.new_bound, r.rb_bound, r.slack_new, r.slack_rb}) {
      append_cell(line, v, false);
    }
    line += '\n';
    out += line;
  }
  return out;
}

std::string fig4_csv(const std::vector<Fig4Row>& rows) {
  std::string out =
      "p,q_mu,delta_raw,k_old_bilateral,k_new_bilateral,improvement\n";
  for (const Fig4Row& r : rows) {
    std::string line;
    append_cell(line, r.p, true);
    for (double v : {r.q_mu, r.delta_raw, r.k_old_bilateral,
                     r.k_new_bilateral, r.improvement}) {
      append_cell(line, v, false);
    }
    line += '\n';
    out += line;
  }
  return out;
}

std::string fig3_json(const std::vector<Fig3Row>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Fig3Row& r : rows) {
    nlohmann::ordered_json row;
    row["theta"] = r.theta;
    row["lhs_total"] = r.lhs_total;
    row["b_mu"] = r.b_mu;
    row["delta3_raw"] = r.delta3_raw;
    row["delta3_clamped"] = r.delta3_clamped;
    row["new_bound"] = r.new_bound;
    row["rb_bound"] = r.rb_bound;
    row["slack_new"] = r.slack_new;
    row["slack_rb"] = r.slack_rb;
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string fig4_json(const std::vector<Fig4Row>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Fig4Row& r : rows) {
    nlohmann::ordered_json row;
    row["p"] = r.p;
    row["q_mu"] = r.q_mu;
    row["delta_raw"] = r.delta_raw;
    row["k_old_bilateral"] = r.k_old_bilateral;
    row["k_new_bilateral"] = r.k_new_bilateral;
    row["improvement"] = r.improvement;
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

void run_fig3_sweep(const SweepConfig& cfg) {
  const std::vector<Fig3Row> rows = fig3_rows(cfg);
  atomic_write(cfg.out_path, cfg.format == OutputFormat::Csv
                                 ? fig3_csv(rows)
                                 : fig3_json(rows));
}

void run_fig4_sweep(const SweepConfig& cfg) {
  const std::vector<Fig4Row> rows = fig4_rows(cfg);
  atomic_write(cfg.out_path, cfg.format == OutputFormat::Csv
                                 ? fig4_csv(rows)
                                 : fig4_json(rows));
}

}  // namespace qeur
