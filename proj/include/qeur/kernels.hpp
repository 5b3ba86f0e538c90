#pragma once

#include <complex>
#include <cstddef>

namespace qeur::kernels {

using Complex = std::complex<double>;

/// Table of the data-parallel inner loops everything else is built on.
/// One table per backend; the scalar table is the reference semantics,
/// SIMD tables must agree with it to floating-point roundoff.
struct Ops {
  /// dst[i] += alpha * src[i]
  void (*axpy)(Complex* dst, const Complex* src, std::size_t n, Complex alpha);
  /// dst[i] = alpha * src[i]
  void (*scale_copy)(Complex* dst, const Complex* src, std::size_t n,
                     Complex alpha);
  /// In-place plane rotation of two vectors:
  ///   (x[i], y[i]) <- (a*x[i] + b*y[i], c*x[i] + d*y[i])
  void (*rot2)(Complex* x, Complex* y, std::size_t n, Complex a, Complex b,
               Complex c, Complex d);
  /// sum_i conj(x[i]) * y[i]
  Complex (*dot_conj)(const Complex* x, const Complex* y, std::size_t n);
  const char* name;
};

enum class Backend { Scalar, Avx2 };

/// Reference table for a specific backend. Returns nullptr if the backend
/// was not compiled in (e.g. AVX2 on a non-x86 build).
const Ops* table(Backend b);

/// Best backend supported by the running CPU.
Backend detect_best();

/// Currently selected table. First use picks detect_best(), unless the
/// QEUR_KERNELS environment variable ("scalar" or "avx2") overrides it.
const Ops& active();

/// Force a backend. Returns false (and leaves the selection unchanged)
/// if the backend is unavailable on this CPU/build.
bool set_backend(Backend b);

const char* active_name();

}  // namespace qeur::kernels
