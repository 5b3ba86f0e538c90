#include "qeur/kernels.hpp"

namespace qeur::kernels {
namespace {

void axpy_scalar(Complex* dst, const Complex* src, std::size_t n,
                 Complex alpha) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] += alpha * src[i];
  }
}

void scale_copy_scalar(Complex* dst, const Complex* src, std::size_t n,
                       Complex alpha) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = alpha * src[i];
  }
}

void rot2_scalar(Complex* x, Complex* y, std::size_t n, Complex a, Complex b,
                 Complex c, Complex d) {
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

Complex dot_conj_scalar(const Complex* x, const Complex* y, std::size_t n) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::conj(x[i]) * y[i];
  }
  return acc;
}

const Ops kScalarOps = {axpy_scalar, scale_copy_scalar, rot2_scalar,
                        dot_conj_scalar, "scalar"};

}  // namespace

const Ops* scalar_table() { return &kScalarOps; }

}  // namespace qeur::kernels
