#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <doctest.h>

#include "oracle.hpp"
#include "qeur/density_matrix.hpp"
#include "qeur/errors.hpp"
#include "qeur/linalg.hpp"
#include "qeur/measurement.hpp"
#include "qeur/rng.hpp"

namespace {

using qeur::Complex;
using qeur::ComplexMatrix;
using qeur::DensityMatrix;
using qeur::Pauli;
using qeur::ProjectiveMeasurement;
using qeur::SystemLayout;

constexpr double kInvSqrt2 = 0.70710678118654752;

oracle::Mat to_oracle(const ComplexMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = m(r, c);
    }
  }
  return out;
}

double max_abs_diff_oracle(const ComplexMatrix& have, const oracle::Mat& want) {
  double worst = 0.0;
  for (std::size_t r = 0; r < have.rows(); ++r) {
    for (std::size_t c = 0; c < have.cols(); ++c) {
      worst = std::max(worst, std::abs(have(r, c) - want[r][c]));
    }
  }
  return worst;
}

ProjectiveMeasurement rotated_basis(double alpha) {
  ComplexMatrix basis(2, 2);
  basis(0, 0) = Complex{std::cos(alpha), 0.0};
  basis(0, 1) = Complex{std::sin(alpha), 0.0};
  basis(1, 0) = Complex{-std::sin(alpha), 0.0};
  basis(1, 1) = Complex{std::cos(alpha), 0.0};
  return ProjectiveMeasurement("rot", std::move(basis));
}

}  // namespace

TEST_CASE("pauli eigenbases") {
  const ProjectiveMeasurement x = qeur::pauli(Pauli::X);
  CHECK(x.name() == "X");
  CHECK(std::abs(x.basis()(0, 0) - Complex{kInvSqrt2, 0.0}) < 1e-15);
  CHECK(std::abs(x.basis()(0, 1) - Complex{kInvSqrt2, 0.0}) < 1e-15);
  CHECK(std::abs(x.basis()(1, 0) - Complex{kInvSqrt2, 0.0}) < 1e-15);
  CHECK(std::abs(x.basis()(1, 1) - Complex{-kInvSqrt2, 0.0}) < 1e-15);

  const ProjectiveMeasurement y = qeur::pauli(Pauli::Y);
  CHECK(y.name() == "Y");
  CHECK(std::abs(y.basis()(0, 1) - Complex{0.0, kInvSqrt2}) < 1e-15);
  CHECK(std::abs(y.basis()(1, 1) - Complex{0.0, -kInvSqrt2}) < 1e-15);

  const ProjectiveMeasurement z = qeur::pauli(Pauli::Z);
  CHECK(z.name() == "Z");
  CHECK(qeur::max_abs_diff(z.basis(), ComplexMatrix::identity(2)) == 0.0);

  // Each basis diagonalizes its Pauli matrix: sigma |phi_i> = (+/-)|phi_i>.
  for (Pauli which : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const ProjectiveMeasurement m = qeur::pauli(which);
    ComplexMatrix sigma(2, 2);
    switch (which) {
      case Pauli::X:
        sigma(0, 1) = sigma(1, 0) = Complex{1.0, 0.0};
        break;
      case Pauli::Y:
        sigma(0, 1) = Complex{0.0, -1.0};
        sigma(1, 0) = Complex{0.0, 1.0};
        break;
      case Pauli::Z:
        sigma(0, 0) = Complex{1.0, 0.0};
        sigma(1, 1) = Complex{-1.0, 0.0};
        break;
    }
    for (std::size_t i = 0; i < 2; ++i) {
      const double sign = i == 0 ? 1.0 : -1.0;
      for (std::size_t r = 0; r < 2; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < 2; ++c) {
          acc += sigma(r, c) * m.basis()(i, c);
        }
        CHECK(std::abs(acc - sign * m.basis()(i, r)) < 1e-12);
      }
    }
  }
}

TEST_CASE("overlaps and unbiasedness") {
  const ProjectiveMeasurement x = qeur::pauli(Pauli::X);
  const ProjectiveMeasurement y = qeur::pauli(Pauli::Y);
  const ProjectiveMeasurement z = qeur::pauli(Pauli::Z);

  CHECK(qeur::max_overlap(x, z) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qeur::max_overlap(x, y) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qeur::max_overlap(y, z) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qeur::max_overlap(z, z) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qeur::max_overlap(x, z) ==
        doctest::Approx(qeur::max_overlap(z, x)).epsilon(1e-15));
  CHECK(qeur::max_overlap(x, z) ==
        doctest::Approx(oracle::max_overlap(oracle::basis_x(),
                                            oracle::basis_z()))
            .epsilon(1e-12));

  CHECK(qeur::is_mub_pair(x, z));
  CHECK(qeur::is_mub_pair(x, y));
  CHECK_FALSE(qeur::is_mub_pair(z, z));

  for (double alpha : {0.1, 0.5, 1.0, 1.4}) {
    const double c2 = std::cos(alpha) * std::cos(alpha);
    const double want = std::max(c2, 1.0 - c2);
    CHECK(qeur::max_overlap(rotated_basis(alpha), z) ==
          doctest::Approx(want).epsilon(1e-12));
  }

  // A global phase on one eigenstate changes nothing.
  ComplexMatrix phased(2, 2);
  const Complex phase{std::cos(0.9), std::sin(0.9)};
  phased(0, 0) = phase * Complex{kInvSqrt2, 0.0};
  phased(0, 1) = phase * Complex{kInvSqrt2, 0.0};
  phased(1, 0) = Complex{kInvSqrt2, 0.0};
  phased(1, 1) = Complex{-kInvSqrt2, 0.0};
  const ProjectiveMeasurement xp("Xp", phased);
  CHECK(qeur::max_overlap(xp, z) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qeur::is_mub_pair(xp, z));
}

TEST_CASE("measurement validation") {
  ComplexMatrix long_row(2, 2);
  long_row(0, 0) = Complex{1.0, 0.0};
  long_row(0, 1) = Complex{1.0, 0.0};
  long_row(1, 1) = Complex{1.0, 0.0};
  CHECK_THROWS_WITH_AS(ProjectiveMeasurement("bad", long_row),
                       "basis vector is not unit norm",
                       const qeur::InvalidMeasurement&);

  ComplexMatrix skewed(2, 2);
  skewed(0, 0) = Complex{1.0, 0.0};
  skewed(1, 0) = Complex{kInvSqrt2, 0.0};
  skewed(1, 1) = Complex{kInvSqrt2, 0.0};
  CHECK_THROWS_WITH_AS(ProjectiveMeasurement("bad", skewed),
                       "basis vectors are not orthogonal",
                       const qeur::InvalidMeasurement&);

  CHECK_THROWS_AS(ProjectiveMeasurement("bad", ComplexMatrix(2, 3)),
                  const qeur::InvalidMeasurement&);
}

TEST_CASE("dephasing known states") {
  const ProjectiveMeasurement z = qeur::pauli(Pauli::Z);

  // A state already diagonal on the target is a fixed point.
  ComplexMatrix zero_proj(2, 2);
  zero_proj(0, 0) = Complex{1.0, 0.0};
  ComplexMatrix memory(2, 2);
  memory(0, 0) = Complex{0.25, 0.0};
  memory(0, 1) = Complex{0.1, 0.2};
  memory(1, 0) = Complex{0.1, -0.2};
  memory(1, 1) = Complex{0.75, 0.0};
  const DensityMatrix product(SystemLayout::qubits({"A", "B"}),
                              qeur::kron(zero_proj, memory));
  const DensityMatrix dephased = qeur::post_measurement_state(product, z, "A");
  CHECK(qeur::max_abs_diff(dephased.matrix(), product.matrix()) < 1e-12);

  // The Bell state loses its corner coherences.
  const DensityMatrix bell_z =
      qeur::post_measurement_state(qeur::bell_phi_plus(), z, "A");
  ComplexMatrix want(4, 4);
  want(0, 0) = Complex{0.5, 0.0};
  want(3, 3) = Complex{0.5, 0.0};
  CHECK(qeur::max_abs_diff(bell_z.matrix(), want) < 1e-12);
}

TEST_CASE("dephasing agrees with the reference on random states") {
  qeur::Rng rng(qeur::mix_seed(9090, 0));
  for (Pauli which : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const ProjectiveMeasurement m = qeur::pauli(which);
    for (int trial = 0; trial < 3; ++trial) {
      const DensityMatrix rho = qeur::random_mixed(2, 4, rng.next_u64());
      const DensityMatrix sigma = qeur::post_measurement_state(rho, m, "A");

      const oracle::QcBlocks qc =
          oracle::measure_first(to_oracle(rho.matrix()), to_oracle(m.basis()));
      oracle::Mat want = oracle::zeros(4);
      for (std::size_t i = 0; i < 2; ++i) {
        const oracle::Vec phi = {m.basis()(i, 0), m.basis()(i, 1)};
        want = oracle::add(want,
                           oracle::kron(oracle::outer(phi), qc.blocks[i]));
      }
      CHECK(max_abs_diff_oracle(sigma.matrix(), want) < 1e-12);

      // Dephasing twice changes nothing more.
      const DensityMatrix twice = qeur::post_measurement_state(sigma, m, "A");
      CHECK(qeur::max_abs_diff(twice.matrix(), sigma.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("outcome distributions") {
  const ProjectiveMeasurement x = qeur::pauli(Pauli::X);
  const ProjectiveMeasurement z = qeur::pauli(Pauli::Z);

  ComplexMatrix zero_proj(2, 2);
  zero_proj(0, 0) = Complex{1.0, 0.0};
  const DensityMatrix ground(SystemLayout::qubits({"A"}), zero_proj);
  const std::vector<double> pz = qeur::outcome_distribution(ground, z, "A");
  CHECK(pz[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pz[1] == doctest::Approx(0.0).epsilon(1e-12));

  for (int i = 0; i <= 10; ++i) {
    const double theta = 1.5707963267948966 * i / 10.0;
    const DensityMatrix rho = qeur::ghz4_theta(theta);
    const double c2 = std::cos(theta) * std::cos(theta);

    const std::vector<double> main_axis =
        qeur::outcome_distribution(rho, z, "A");
    CHECK(main_axis[0] == doctest::Approx(c2).epsilon(1e-9));
    CHECK(main_axis[1] == doctest::Approx(1.0 - c2).epsilon(1e-9));

    const std::vector<double> cross_axis =
        qeur::outcome_distribution(rho, x, "B");
    CHECK(cross_axis[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(cross_axis[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(main_axis[0] + main_axis[1] == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Probabilities match the reference blocks on random states.
  qeur::Rng rng(qeur::mix_seed(9090, 1));
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = qeur::random_mixed(2, 2, rng.next_u64());
    const std::vector<double> have = qeur::outcome_distribution(rho, x, "A");
    const oracle::QcBlocks qc =
        oracle::measure_first(to_oracle(rho.matrix()), oracle::basis_x());
    CHECK(have[0] == doctest::Approx(qc.probs[0]).epsilon(1e-12));
    CHECK(have[1] == doctest::Approx(qc.probs[1]).epsilon(1e-12));
  }
}

TEST_CASE("bilateral distributions") {
  const ProjectiveMeasurement y = qeur::pauli(Pauli::Y);
  const ProjectiveMeasurement z = qeur::pauli(Pauli::Z);

  const qeur::ProbTable bell_zz =
      qeur::bilateral_distribution(qeur::bell_phi_plus(), z, "A", z, "B");
  CHECK(bell_zz.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell_zz.at(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell_zz.at(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bell_zz.total() == doctest::Approx(1.0).epsilon(1e-12));

  const qeur::ProbTable flat =
      qeur::bilateral_distribution(qeur::werner3(0.0), z, "A", z, "B");
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(flat.at(r, c) == doctest::Approx(0.25).epsilon(1e-12));
    }
  }

  const DensityMatrix ghz_ab = qeur::ghz(3).reduce({"A", "B"});
  const qeur::ProbTable yy =
      qeur::bilateral_distribution(ghz_ab, y, "A", y, "B");
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(yy.at(r, c) == doctest::Approx(0.25).epsilon(1e-12));
    }
  }

  // Marginals are consistent with single-site distributions, in both
  // argument orders.
  qeur::Rng rng(qeur::mix_seed(9090, 2));
  const DensityMatrix rho = qeur::random_mixed(2, 3, rng.next_u64());
  const qeur::ProbTable fwd = qeur::bilateral_distribution(rho, y, "A", z, "B");
  const qeur::ProbTable rev = qeur::bilateral_distribution(rho, z, "B", y, "A");
  const std::vector<double> pa = qeur::outcome_distribution(rho, y, "A");
  const std::vector<double> pb = qeur::outcome_distribution(rho, z, "B");
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(fwd.row_marginal()[i] == doctest::Approx(pa[i]).epsilon(1e-12));
    CHECK(fwd.col_marginal()[i] == doctest::Approx(pb[i]).epsilon(1e-12));
    CHECK(rev.row_marginal()[i] == doctest::Approx(pb[i]).epsilon(1e-12));
    CHECK(rev.col_marginal()[i] == doctest::Approx(pa[i]).epsilon(1e-12));
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(fwd.at(r, c) == doctest::Approx(rev.at(c, r)).epsilon(1e-12));
    }
  }

  // Against the reference tables.
  const auto want = oracle::joint_table(to_oracle(rho.matrix()),
                                        oracle::basis_y(), oracle::basis_z());
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(fwd.at(r, c) == doctest::Approx(want[r][c]).epsilon(1e-12));
    }
  }

  CHECK_THROWS_WITH_AS(qeur::bilateral_distribution(rho, y, "A", z, "A"),
                       "bilateral targets must differ",
                       const qeur::DomainError&);
  CHECK_THROWS_AS(qeur::bilateral_distribution(rho, y, "A", z, "Q"),
                  const qeur::UnknownLabel&);
}
