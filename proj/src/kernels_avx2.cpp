// AVX2+FMA variants of the complex inner loops. This translation unit is
// compiled with -mavx2 -mfma on x86 and must only be entered after the
// dispatcher has confirmed CPU support.

#include "qeur/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace qeur::kernels {
namespace {

// One __m256d holds two complex doubles as (re0, im0, re1, im1).

inline __m256d broadcast_c(Complex a) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&a));
}

// Packed complex multiply.
inline __m256d cmul(__m256d a, __m256d b) {
  __m256d a_re = _mm256_movedup_pd(a);
  __m256d a_im = _mm256_permute_pd(a, 0xF);
  __m256d b_flip = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_flip));
}

// Packed conj(a) * b.
inline __m256d cmul_conj(__m256d a, __m256d b) {
  __m256d a_re = _mm256_movedup_pd(a);
  __m256d a_im = _mm256_permute_pd(a, 0xF);
  __m256d b_flip = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(a_re, b, _mm256_mul_pd(a_im, b_flip));
}

void axpy_avx2(Complex* dst, const Complex* src, std::size_t n,
               Complex alpha) {
  const __m256d va = broadcast_c(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vd = _mm256_loadu_pd(reinterpret_cast<const double*>(dst + i));
    __m256d vs = _mm256_loadu_pd(reinterpret_cast<const double*>(src + i));
    vd = _mm256_add_pd(vd, cmul(va, vs));
    _mm256_storeu_pd(reinterpret_cast<double*>(dst + i), vd);
  }
  for (; i < n; ++i) {
    dst[i] += alpha * src[i];
  }
}

void scale_copy_avx2(Complex* dst, const Complex* src, std::size_t n,
                     Complex alpha) {
  const __m256d va = broadcast_c(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vs = _mm256_loadu_pd(reinterpret_cast<const double*>(src + i));
    _mm256_storeu_pd(reinterpret_cast<double*>(dst + i), cmul(va, vs));
  }
  for (; i < n; ++i) {
    dst[i] = alpha * src[i];
  }
}

void rot2_avx2(Complex* x, Complex* y, std::size_t n, Complex a, Complex b,
               Complex c, Complex d) {
  const __m256d va = broadcast_c(a);
  const __m256d vb = broadcast_c(b);
  const __m256d vc = broadcast_c(c);
  const __m256d vd = broadcast_c(d);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
    __m256d nx = _mm256_add_pd(cmul(va, vx), cmul(vb, vy));
    __m256d ny = _mm256_add_pd(cmul(vc, vx), cmul(vd, vy));
    _mm256_storeu_pd(reinterpret_cast<double*>(x + i), nx);
    _mm256_storeu_pd(reinterpret_cast<double*>(y + i), ny);
  }
  for (; i < n; ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

Complex dot_conj_avx2(const Complex* x, const Complex* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
    acc = _mm256_add_pd(acc, cmul_conj(vx, vy));
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d sum = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, sum);
  Complex total{out[0], out[1]};
  for (; i < n; ++i) {
    total += std::conj(x[i]) * y[i];
  }
  return total;
}

const Ops kAvx2Ops = {axpy_avx2, scale_copy_avx2, rot2_avx2, dot_conj_avx2,
                      "avx2"};

}  // namespace

const Ops* avx2_table() { return &kAvx2Ops; }

}  // namespace qeur::kernels

#else

namespace qeur::kernels {
const Ops* avx2_table() { return nullptr; }
}  // namespace qeur::kernels

#endif
