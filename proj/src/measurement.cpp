#include "qeur/measurement.hpp"

#include <cmath>
#include <utility>

#include "qeur/errors.hpp"
#include "qeur/kernels.hpp"
#include "qeur/linalg.hpp"

namespace qeur {

namespace {

constexpr double kProbRaiseFloor = -1e-9;
constexpr double kProbClamp = 1e-12;

double clamp_probability(double p) {
  if (p < kProbRaiseFloor) {
    throw NotADistribution("outcome probability below -1e-9");
  }
  return p < kProbClamp ? 0.0 : p;
}

std::vector<Complex> matvec(const ComplexMatrix& m, const Complex* v) {
  std::vector<Complex> out(m.rows(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc{0.0, 0.0};
    const Complex* row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      acc += row[c] * v[c];
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(std::string name,
                                             ComplexMatrix basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0) {
    throw InvalidMeasurement("basis must hold dim vectors of length dim");
  }
  if (!basis_.all_finite()) {
    throw InvalidMeasurement("basis entries must be finite");
  }
  const auto& ops = kernels::active();
  const std::size_t d = basis_.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex g = ops.dot_conj(basis_.row(i), basis_.row(j), d);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - Complex{target, 0.0}) > kBasisTol) {
        throw InvalidMeasurement(i == j
                                     ? "basis vector is not unit norm"
                                     : "basis vectors are not orthogonal");
      }
    }
  }
}

ComplexMatrix ProjectiveMeasurement::projector(std::size_t i) const {
  const std::size_t d = dim();
  const Complex* v = vector(i);
  ComplexMatrix p(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      p(r, c) = v[r] * std::conj(v[c]);
    }
  }
  return p;
}

ProjectiveMeasurement pauli(Pauli which) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix basis(2, 2);
  switch (which) {
    case Pauli::X:
      basis(0, 0) = {r, 0.0};
      basis(0, 1) = {r, 0.0};
      basis(1, 0) = {r, 0.0};
      basis(1, 1) = {-r, 0.0};
      return ProjectiveMeasurement("X", std::move(basis));
    case Pauli::Y:
      basis(0, 0) = {r, 0.0};
      basis(0, 1) = {0.0, r};
      basis(1, 0) = {r, 0.0};
      basis(1, 1) = {0.0, -r};
      return ProjectiveMeasurement("Y", std::move(basis));
    case Pauli::Z:
      basis(0, 0) = {1.0, 0.0};
      basis(1, 1) = {1.0, 0.0};
      return ProjectiveMeasurement("Z", std::move(basis));
  }
  throw DomainError("unknown Pauli");
}

double max_overlap(const ProjectiveMeasurement& r,
                   const ProjectiveMeasurement& k) {
  if (r.dim() != k.dim()) {
    throw DimensionMismatch("basis dimensions differ");
  }
  const auto& ops = kernels::active();
  double best = 0.0;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < k.dim(); ++j) {
      const Complex g = ops.dot_conj(r.vector(i), k.vector(j), r.dim());
      best = std::max(best, std::norm(g));
    }
  }
  return best;
}

bool is_mub_pair(const ProjectiveMeasurement& r,
                 const ProjectiveMeasurement& k, double tol) {
  if (r.dim() != k.dim()) {
    throw DimensionMismatch("basis dimensions differ");
  }
  const auto& ops = kernels::active();
  const double want = 1.0 / static_cast<double>(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < k.dim(); ++j) {
      const Complex g = ops.dot_conj(r.vector(i), k.vector(j), r.dim());
      if (std::abs(std::norm(g) - want) > tol) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// P_i embedded at the target factor: 1_before (x) P_i (x) 1_after.
ComplexMatrix embedded_projector(const SystemLayout& layout,
                                 const ProjectiveMeasurement& m,
                                 std::size_t target_pos, std::size_t outcome) {
  std::size_t before = 1;
  std::size_t after = 1;
  for (std::size_t i = 0; i < layout.count(); ++i) {
    if (i < target_pos) {
      before *= layout.dims()[i];
    } else if (i > target_pos) {
      after *= layout.dims()[i];
    }
  }
  ComplexMatrix p = m.projector(outcome);
  if (before > 1) {
    p = kron(ComplexMatrix::identity(before), p);
  }
  if (after > 1) {
    p = kron(p, ComplexMatrix::identity(after));
  }
  return p;
}

void require_site(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                  const std::string& target) {
  if (m.dim() != rho.layout().dim_of(target)) {
    throw DimensionMismatch("measurement dimension does not match subsystem");
  }
}

}  // namespace

DensityMatrix post_measurement_state(const DensityMatrix& rho,
                                     const ProjectiveMeasurement& m,
                                     const std::string& target) {
  require_site(rho, m, target);
  const std::size_t pos = rho.layout().index_of(target);
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const ComplexMatrix p = embedded_projector(rho.layout(), m, pos, i);
    out = out + matmul(p, matmul(rho.matrix(), p));
  }
  return DensityMatrix(rho.layout(), std::move(out));
}

std::vector<double> outcome_distribution(const DensityMatrix& rho,
                                         const ProjectiveMeasurement& m,
                                         const std::string& target) {
  require_site(rho, m, target);
  const ComplexMatrix site =
      partial_trace(rho.matrix(), rho.layout(), {target});
  const auto& ops = kernels::active();
  std::vector<double> p(m.dim(), 0.0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const std::vector<Complex> sv = matvec(site, m.vector(i));
    p[i] = clamp_probability(
        ops.dot_conj(m.vector(i), sv.data(), m.dim()).real());
  }
  return p;
}

double ProbTable::total() const {
  double t = 0.0;
  for (double v : p) {
    t += v;
  }
  return t;
}

std::vector<double> ProbTable::row_marginal() const {
  std::vector<double> out(rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out[r] += at(r, c);
    }
  }
  return out;
}

std::vector<double> ProbTable::col_marginal() const {
  std::vector<double> out(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out[c] += at(r, c);
    }
  }
  return out;
}

ProbTable bilateral_distribution(const DensityMatrix& rho,
                                 const ProjectiveMeasurement& m1,
                                 const std::string& t1,
                                 const ProjectiveMeasurement& m2,
                                 const std::string& t2) {
  if (t1 == t2) {
    throw DomainError("bilateral targets must differ");
  }
  require_site(rho, m1, t1);
  require_site(rho, m2, t2);
  const bool t1_first = rho.layout().index_of(t1) < rho.layout().index_of(t2);
  const ComplexMatrix pair =
      partial_trace(rho.matrix(), rho.layout(),
                    t1_first ? std::vector<std::string>{t1, t2}
                             : std::vector<std::string>{t2, t1});
  const auto& ops = kernels::active();
  const std::size_t d1 = m1.dim();
  const std::size_t d2 = m2.dim();
  ProbTable table;
  table.rows = d1;
  table.cols = d2;
  table.p.assign(d1 * d2, 0.0);
  std::vector<Complex> joint(d1 * d2);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      const Complex* v1 = m1.vector(i);
      const Complex* v2 = m2.vector(j);
      for (std::size_t a = 0; a < d1; ++a) {
        for (std::size_t b = 0; b < d2; ++b) {
          joint[t1_first ? a * d2 + b : b * d1 + a] = v1[a] * v2[b];
        }
      }
      const std::vector<Complex> sv = matvec(pair, joint.data());
      table.at(i, j) = clamp_probability(
          ops.dot_conj(joint.data(), sv.data(), joint.size()).real());
    }
  }
  return table;
}

}  // namespace qeur
