#include "qeur/density_matrix.hpp"

#include <cmath>
#include <utility>

#include "qeur/errors.hpp"
#include "qeur/linalg.hpp"
#include "qeur/rng.hpp"

namespace qeur {

DensityMatrix::DensityMatrix(SystemLayout layout, ComplexMatrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() != layout_.total_dim()) {
    throw DimensionMismatch("state dimension does not match layout");
  }
  if (!matrix_.all_finite()) {
    throw InvalidState("state violates the finite entries invariant");
  }
  if (matrix_.hermiticity_defect() > kHermTol) {
    throw InvalidState("state violates the hermiticity invariant");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw InvalidState("state violates the trace invariant");
  }
  const Eigensystem eig = hermitian_eigensystem(matrix_, kHermTol);
  if (!eig.values.empty() && eig.values.back() < kEigenvalueFloor) {
    throw InvalidState("state violates the positivity invariant");
  }
}

DensityMatrix DensityMatrix::reduce(const std::vector<std::string>& keep) const {
  return DensityMatrix(layout_.restricted(keep),
                       partial_trace(matrix_, layout_, keep));
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < 26) {
      labels.emplace_back(1, static_cast<char>('A' + i));
    } else {
      labels.push_back("Q" + std::to_string(i));
    }
  }
  return labels;
}

DensityMatrix pure_state(SystemLayout layout, const std::vector<Complex>& vec) {
  ComplexMatrix m(vec.size(), vec.size());
  for (std::size_t r = 0; r < vec.size(); ++r) {
    for (std::size_t c = 0; c < vec.size(); ++c) {
      m(r, c) = vec[r] * std::conj(vec[c]);
    }
  }
  return DensityMatrix(std::move(layout), std::move(m));
}

}  // namespace

DensityMatrix bell_phi_plus() { return ghz(2); }

DensityMatrix ghz(std::size_t n) {
  if (n < 2) {
    throw InvalidArity("ghz requires at least 2 qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> vec(dim, Complex{0.0, 0.0});
  const double amp = 1.0 / std::sqrt(2.0);
  vec.front() = Complex{amp, 0.0};
  vec.back() = Complex{amp, 0.0};
  return pure_state(SystemLayout::qubits(default_labels(n)), vec);
}

DensityMatrix ghz4_theta(double theta) {
  constexpr double kHalfPi = 1.57079632679489661923;
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw DomainError("theta must lie in [0, pi/2]");
  }
  std::vector<Complex> vec(16, Complex{0.0, 0.0});
  vec.front() = Complex{std::cos(theta), 0.0};
  vec.back() = Complex{std::sin(theta), 0.0};
  return pure_state(SystemLayout::qubits({"A", "B", "C", "D"}), vec);
}

DensityMatrix werner3(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("p must lie in [0, 1]");
  }
  ComplexMatrix m(8, 8);
  const double mixed = (1.0 - p) / 8.0;
  for (std::size_t i = 0; i < 8; ++i) {
    m(i, i) = Complex{mixed, 0.0};
  }
  const Complex ghz_weight{p / 2.0, 0.0};
  m(0, 0) += ghz_weight;
  m(0, 7) += ghz_weight;
  m(7, 0) += ghz_weight;
  m(7, 7) += ghz_weight;
  return DensityMatrix(SystemLayout::qubits({"A", "B", "D"}), std::move(m));
}

DensityMatrix random_pure(std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw InvalidArity("random_pure requires at least 1 qubit");
  }
  Rng rng(seed);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> vec(dim);
  double norm_sq = 0.0;
  for (Complex& z : vec) {
    z = rng.gaussian_complex();
    norm_sq += std::norm(z);
  }
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (Complex& z : vec) {
    z *= inv_norm;
  }
  return pure_state(SystemLayout::qubits(default_labels(n)), vec);
}

DensityMatrix random_mixed(std::size_t n, std::size_t rank,
                           std::uint64_t seed) {
  if (n < 1) {
    throw InvalidArity("random_mixed requires at least 1 qubit");
  }
  const std::size_t dim = std::size_t{1} << n;
  if (rank < 1 || rank > dim) {
    throw RankError("rank must lie in [1, 2^n]");
  }
  Rng rng(seed);
  ComplexMatrix g(dim, rank);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < rank; ++c) {
      g(r, c) = rng.gaussian_complex();
    }
  }
  ComplexMatrix m = matmul(g, g.adjoint());
  const double tr = m.trace().real();
  m = Complex{1.0 / tr, 0.0} * m;
  return DensityMatrix(SystemLayout::qubits(default_labels(n)), std::move(m));
}

DensityMatrix make_state(const StateFamilySpec& spec) {
  if (spec.n_qubits < 2) {
    throw InvalidArity("state families require at least 2 qubits");
  }
  switch (spec.family) {
    case StateFamily::Bell:
      return bell_phi_plus();
    case StateFamily::GhzN:
      return ghz(spec.n_qubits);
    case StateFamily::GhzTheta:
      return ghz4_theta(spec.theta);
    case StateFamily::Werner3:
      return werner3(spec.p);
    case StateFamily::RandomPure:
      return random_pure(spec.n_qubits, spec.seed);
    case StateFamily::RandomMixed:
      return random_mixed(spec.n_qubits, spec.rank, spec.seed);
  }
  throw DomainError("unknown state family");
}

}  // namespace qeur
