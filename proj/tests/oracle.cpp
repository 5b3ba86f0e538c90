#include "oracle.hpp"

#include <cmath>

namespace oracle {

Mat zeros(std::size_t n) { return Mat(n, Vec(n, C{0.0, 0.0})); }

Mat identity(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = C{1.0, 0.0};
  }
  return m;
}

Mat outer(const Vec& v) {
  Mat m = zeros(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      m[r][c] = v[r] * std::conj(v[c]);
    }
  }
  return m;
}

Mat add(const Mat& a, const Mat& b) {
  Mat m = a;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      m[r][c] += b[r][c];
    }
  }
  return m;
}

Mat scale(C s, const Mat& a) {
  Mat m = a;
  for (auto& row : m) {
    for (auto& z : row) {
      z *= s;
    }
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Mat out(n, Vec(m, C{0.0, 0.0}));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      const C arj = a[r][j];
      for (std::size_t c = 0; c < m; ++c) {
        out[r][c] += arj * b[j][c];
      }
    }
  }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ar = a.size();
  const std::size_t ac = a.empty() ? 0 : a[0].size();
  const std::size_t br = b.size();
  const std::size_t bc = b.empty() ? 0 : b[0].size();
  Mat out(ar * br, Vec(ac * bc, C{0.0, 0.0}));
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < ac; ++j) {
      for (std::size_t k2 = 0; k2 < br; ++k2) {
        for (std::size_t l = 0; l < bc; ++l) {
          out[i * br + k2][j * bc + l] = a[i][j] * b[k2][l];
        }
      }
    }
  }
  return out;
}

Mat dagger(const Mat& a) {
  const std::size_t n = a.size();
  const std::size_t m = a.empty() ? 0 : a[0].size();
  Mat out(m, Vec(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      out[c][r] = std::conj(a[r][c]);
    }
  }
  return out;
}

C trace(const Mat& a) {
  C t{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    t += a[i][i];
  }
  return t;
}

Vec matvec(const Mat& a, const Vec& v) {
  Vec out(a.size(), C{0.0, 0.0});
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      out[r] += a[r][c] * v[c];
    }
  }
  return out;
}

C inner(const Vec& a, const Vec& b) {
  C t{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    t += std::conj(a[i]) * b[i];
  }
  return t;
}

Mat trace_out_qubits(const Mat& rho, std::size_t n_qubits,
                     const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(n_qubits, false);
  for (std::size_t q : drop) {
    dropped[q] = true;
  }
  // Qubit q carries index bit (n_qubits - 1 - q).
  std::vector<std::size_t> keep_bits;
  std::vector<std::size_t> drop_bits;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t bit = n_qubits - 1 - q;
    (dropped[q] ? drop_bits : keep_bits).push_back(bit);
  }
  const std::size_t keep_dim = std::size_t{1} << keep_bits.size();
  const std::size_t drop_dim = std::size_t{1} << drop_bits.size();

  // Digit k of a reduced index (counting from the most significant) is the
  // kept qubit with the k smallest position, i.e. the largest bit.
  auto expand = [](std::size_t packed, const std::vector<std::size_t>& bits) {
    std::size_t full = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const std::size_t digit = (packed >> (bits.size() - 1 - k)) & 1;
      full |= digit << bits[k];
    }
    return full;
  };

  Mat out = zeros(keep_dim);
  for (std::size_t r = 0; r < keep_dim; ++r) {
    for (std::size_t c = 0; c < keep_dim; ++c) {
      C acc{0.0, 0.0};
      for (std::size_t t = 0; t < drop_dim; ++t) {
        const std::size_t toff = expand(t, drop_bits);
        acc += rho[expand(r, keep_bits) | toff][expand(c, keep_bits) | toff];
      }
      out[r][c] = acc;
    }
  }
  return out;
}

std::vector<double> herm_eigs_small(const Mat& m) {
  if (m.size() == 1) {
    return {m[0][0].real()};
  }
  const double a = m[0][0].real();
  const double d = m[1][1].real();
  const double half_tr = 0.5 * (a + d);
  const double radius =
      std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m[0][1]));
  return {half_tr + radius, half_tr - radius};
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 1e-12) {
    h -= p * std::log2(p);
  }
  if (1.0 - p > 1e-12) {
    h -= (1.0 - p) * std::log2(1.0 - p);
  }
  return h;
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 1e-12) {
      h -= v * std::log2(v);
    }
  }
  return h;
}

Mat basis_x() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{C{r, 0.0}, C{r, 0.0}}, {C{r, 0.0}, C{-r, 0.0}}};
}

Mat basis_y() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{C{r, 0.0}, C{0.0, r}}, {C{r, 0.0}, C{0.0, -r}}};
}

Mat basis_z() {
  return {{C{1.0, 0.0}, C{0.0, 0.0}}, {C{0.0, 0.0}, C{1.0, 0.0}}};
}

double max_overlap(const Mat& basis_a, const Mat& basis_b) {
  double best = 0.0;
  for (const Vec& u : basis_a) {
    for (const Vec& v : basis_b) {
      best = std::max(best, std::norm(inner(u, v)));
    }
  }
  return best;
}

QcBlocks measure_first(const Mat& rho4, const Mat& basis) {
  QcBlocks out;
  for (const Vec& phi : basis) {
    // block[a][b] = (<phi| (x) <a|) rho (|phi> (x) |b>)
    Mat block = zeros(2);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        C acc{0.0, 0.0};
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) {
            acc += std::conj(phi[i]) * rho4[2 * i + a][2 * j + b] * phi[j];
          }
        }
        block[a][b] = acc;
      }
    }
    out.probs.push_back(trace(block).real());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

namespace {

// Entropy of the dephased state: its spectrum is the union of the
// unnormalized blocks' spectra.
double qc_entropy(const QcBlocks& qc) {
  std::vector<double> eigs;
  for (const Mat& block : qc.blocks) {
    for (double v : herm_eigs_small(block)) {
      eigs.push_back(v);
    }
  }
  return shannon(eigs);
}

double memory_entropy(const QcBlocks& qc) {
  Mat memory = zeros(2);
  for (const Mat& block : qc.blocks) {
    memory = add(memory, block);
  }
  return shannon(herm_eigs_small(memory));
}

}  // namespace

double mce_first(const Mat& rho4, const Mat& basis) {
  const QcBlocks qc = measure_first(rho4, basis);
  return qc_entropy(qc) - memory_entropy(qc);
}

double holevo_first(const Mat& rho4, const Mat& basis) {
  const QcBlocks qc = measure_first(rho4, basis);
  return shannon(qc.probs) + memory_entropy(qc) - qc_entropy(qc);
}

std::vector<std::vector<double>> joint_table(const Mat& rho4,
                                             const Mat& basis_first,
                                             const Mat& basis_second) {
  std::vector<std::vector<double>> table(2, std::vector<double>(2, 0.0));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Vec v(4);
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          v[2 * a + b] = basis_first[i][a] * basis_second[j][b];
        }
      }
      table[i][j] = inner(v, matvec(rho4, v)).real();
    }
  }
  return table;
}

double table_conditional_entropy(const std::vector<std::vector<double>>& t) {
  std::vector<double> joint;
  std::vector<double> cols(t[0].size(), 0.0);
  for (const auto& row : t) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      joint.push_back(row[c]);
      cols[c] += row[c];
    }
  }
  return shannon(joint) - shannon(cols);
}

Vec bell_vec() { return ghz_vec(2); }

Vec ghz_vec(std::size_t n) {
  Vec v(std::size_t{1} << n, C{0.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  v.front() = C{r, 0.0};
  v.back() = C{r, 0.0};
  return v;
}

Vec ghz4_theta_vec(double theta) {
  Vec v(16, C{0.0, 0.0});
  v.front() = C{std::cos(theta), 0.0};
  v.back() = C{std::sin(theta), 0.0};
  return v;
}

Mat werner3_mat(double p) {
  return add(scale(C{p, 0.0}, outer(ghz_vec(3))),
             scale(C{(1.0 - p) / 8.0, 0.0}, identity(8)));
}

double delta3_of_theta(double theta) {
  const Mat rho = outer(ghz4_theta_vec(theta));
  const Mat rho_ab = trace_out_qubits(rho, 4, {2, 3});
  const Mat rho_ac = trace_out_qubits(rho, 4, {1, 3});
  const Mat rho_ad = trace_out_qubits(rho, 4, {1, 2});
  const Mat rho_a = trace_out_qubits(rho, 4, {1, 2, 3});
  const double s_a = shannon(herm_eigs_small(rho_a));
  return 1.5 * s_a - (holevo_first(rho_ab, basis_x()) +
                      holevo_first(rho_ac, basis_y()) +
                      holevo_first(rho_ad, basis_z()));
}

WernerKeyRates werner_key_rates(double p) {
  const Mat rho = werner3_mat(p);
  const Mat rho_ab = trace_out_qubits(rho, 3, {2});
  const Mat rho_ad = trace_out_qubits(rho, 3, {1});
  const Mat rho_a = trace_out_qubits(rho, 3, {1, 2});

  WernerKeyRates out{};
  out.q_mu = -std::log2(max_overlap(basis_y(), basis_z()));
  out.delta = shannon(herm_eigs_small(rho_a)) -
              (holevo_first(rho_ab, basis_y()) +
               holevo_first(rho_ad, basis_z()));
  const double s_y_given_yprime =
      table_conditional_entropy(joint_table(rho_ab, basis_y(), basis_y()));
  const double s_z_given_zprime =
      table_conditional_entropy(joint_table(rho_ab, basis_z(), basis_z()));
  out.k_old_bilateral = out.q_mu - s_y_given_yprime - s_z_given_zprime;
  out.k_new_bilateral = out.k_old_bilateral + std::max(0.0, out.delta);
  out.improvement = out.k_new_bilateral - out.k_old_bilateral;
  return out;
}

}  // namespace oracle
