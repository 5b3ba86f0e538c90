#include "qeur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qeur/errors.hpp"
#include "qeur/kernels.hpp"

namespace qeur {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  const auto& ops = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik != Complex{0.0, 0.0}) {
        ops.axpy(dst, b.row(k), b.cols(), aik);
      }
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto& ops = kernels::active();
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ib = 0; ib < b.rows(); ++ib) {
      Complex* dst = out.row(ia * b.rows() + ib);
      for (std::size_t ja = 0; ja < a.cols(); ++ja) {
        ops.scale_copy(dst + ja * b.cols(), b.row(ib), b.cols(), a(ia, ja));
      }
    }
  }
  return out;
}

namespace {

// Basis-index offsets contributed by the subsystems at the given layout
// positions, enumerated in mixed-radix order (first position most
// significant).
std::vector<std::size_t> subspace_offsets(const std::vector<std::size_t>& pos,
                                          const std::vector<std::size_t>& dims,
                                          const std::vector<std::size_t>& stride) {
  std::size_t n = 1;
  for (std::size_t p : pos) {
    n *= dims[p];
  }
  std::vector<std::size_t> out(n);
  std::vector<std::size_t> digits(pos.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      off += digits[k] * stride[pos[k]];
    }
    out[idx] = off;
    for (std::size_t k = pos.size(); k-- > 0;) {
      if (++digits[k] < dims[pos[k]]) {
        break;
      }
      digits[k] = 0;
    }
  }
  return out;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const SystemLayout& layout,
                            const std::vector<std::string>& keep) {
  if (!rho.is_square() || rho.rows() != layout.total_dim()) {
    throw DimensionMismatch("operator dimension does not match layout");
  }
  if (keep.empty()) {
    throw DomainError("keep set must be nonempty");
  }
  std::vector<bool> kept(layout.count(), false);
  for (const std::string& l : keep) {
    kept[layout.index_of(l)] = true;
  }

  const std::vector<std::size_t>& dims = layout.dims();
  std::vector<std::size_t> stride(layout.count());
  std::size_t s = 1;
  for (std::size_t i = layout.count(); i-- > 0;) {
    stride[i] = s;
    s *= dims[i];
  }

  std::vector<std::size_t> keep_pos;
  std::vector<std::size_t> tr_pos;
  for (std::size_t i = 0; i < layout.count(); ++i) {
    (kept[i] ? keep_pos : tr_pos).push_back(i);
  }
  const std::vector<std::size_t> keep_off =
      subspace_offsets(keep_pos, dims, stride);
  const std::vector<std::size_t> tr_off = subspace_offsets(tr_pos, dims, stride);

  ComplexMatrix out(keep_off.size(), keep_off.size());
  for (std::size_t r = 0; r < keep_off.size(); ++r) {
    for (std::size_t c = 0; c < keep_off.size(); ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : tr_off) {
        acc += rho(keep_off[r] + t, keep_off[c] + t);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) {
    throw DimensionMismatch("eigendecomposition requires a square matrix");
  }
  if (m.hermiticity_defect() > tol) {
    throw NotHermitian("hermiticity defect exceeds tolerance");
  }
  const std::size_t n = m.rows();

  // Work on the exactly Hermitian average of m and m†.
  ComplexMatrix a = m;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = Complex{a(r, r).real(), 0.0};
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex mean = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = mean;
      a(c, r) = std::conj(mean);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-14 * std::max(1.0, a.max_abs());
  const int max_sweeps = 60;
  const auto& ops = kernels::active();

  for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        off = std::max(off, std::abs(a(p, q)));
      }
    }
    if (off <= stop) {
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double beta = std::abs(a(p, q));
        if (beta <= stop) {
          continue;
        }
        // Factor the pivot's phase out, then apply the real Jacobi rotation
        // that zeroes the (p,q) entry.
        const Complex eip = a(p, q) / beta;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * beta);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex se = s * eip;
        const Complex ce = c * eip;

        // Rows are contiguous: kernel rotation.
        ops.rot2(a.row(p), a.row(q), n, Complex{c, 0.0}, -se, Complex{s, 0.0},
                 ce);
        // Columns are strided: scalar rotation with the conjugate phase.
        const Complex sec = std::conj(se);
        const Complex cec = std::conj(ce);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xk = a(k, p);
          const Complex yk = a(k, q);
          a(k, p) = c * xk - sec * yk;
          a(k, q) = s * xk + cec * yk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xk = v(k, p);
          const Complex yk = v(k, q);
          v(k, p) = c * xk - sec * yk;
          v(k, q) = s * xk + cec * yk;
        }
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) {
                     return a(i, i).real() > a(j, j).real();
                   });

  Eigensystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t k = 0; k < n; ++k) {
      out.vectors(k, j) = v(k, order[j]);
    }
  }
  return out;
}

}  // namespace qeur
