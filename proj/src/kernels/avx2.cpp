// Compiled with -mavx2 -mfma; only reached through the dispatcher after a
// CPUID check. One __m256d holds two interleaved complex doubles.

#include <immintrin.h>

#include <cmath>
#include <numbers>

#include "adiabatic/kernels.hpp"

namespace adiabatic::kernels::detail {
namespace {

inline double* raw(std::span<cplx> x) { return reinterpret_cast<double*>(x.data()); }
inline const double* raw(std::span<const cplx> x) { return reinterpret_cast<const double*>(x.data()); }

// (a+bi)(c+di) for two complex pairs at once.
inline __m256d complex_mul(__m256d x, __m256d f) {
  const __m256d f_re = _mm256_movedup_pd(f);
  const __m256d f_im = _mm256_permute_pd(f, 0xF);
  const __m256d x_swap = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(x, f_re, _mm256_mul_pd(x_swap, f_im));
}

void walsh_hadamard_avx2(std::span<cplx> x) {
  const std::size_t dim = x.size();
  if (dim < 2) return;
  const double k = std::numbers::sqrt2 / 2.0;
  const __m256d scale = _mm256_set1_pd(k);
  double* p = raw(x);

  // half = 1: butterflies between adjacent complex numbers in one register.
  for (std::size_t i = 0; i < dim; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
    const __m256d sum = _mm256_add_pd(v, swapped);
    const __m256d diff = _mm256_sub_pd(swapped, v);
    _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(_mm256_blend_pd(sum, diff, 0b1100), scale));
  }
  for (std::size_t half = 2; half < dim; half <<= 1) {
    for (std::size_t block = 0; block < dim; block += 2 * half) {
      for (std::size_t i = block; i < block + half; i += 2) {
        double* a_ptr = p + 2 * i;
        double* b_ptr = p + 2 * (i + half);
        const __m256d a = _mm256_loadu_pd(a_ptr);
        const __m256d b = _mm256_loadu_pd(b_ptr);
        _mm256_storeu_pd(a_ptr, _mm256_mul_pd(_mm256_add_pd(a, b), scale));
        _mm256_storeu_pd(b_ptr, _mm256_mul_pd(_mm256_sub_pd(a, b), scale));
      }
    }
  }
}

void multiply_avx2(std::span<cplx> x, std::span<const cplx> f) {
  const std::size_t n = x.size();
  double* px = raw(x);
  const double* pf = raw(f);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(px + 2 * i, complex_mul(v, _mm256_loadu_pd(pf + 2 * i)));
  }
  for (; i < n; ++i) x[i] *= f[i];
}

void diagonal_multiply_avx2(std::span<const double> d, std::span<const cplx> x, std::span<cplx> y) {
  const std::size_t n = x.size();
  const double* px = raw(x);
  double* py = raw(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128d dd = _mm_loadu_pd(d.data() + i);
    const __m256d dv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(dd), 0b01010000);
    _mm256_storeu_pd(py + 2 * i, _mm256_mul_pd(dv, _mm256_loadu_pd(px + 2 * i)));
  }
  for (; i < n; ++i) y[i] = d[i] * x[i];
}

void axpy_avx2(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  const std::size_t n = x.size();
  const double* px = raw(x);
  double* py = raw(y);
  const __m256d a_re = _mm256_set1_pd(a.real());
  const __m256d a_im = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    const __m256d prod = _mm256_fmaddsub_pd(v, a_re, _mm256_mul_pd(_mm256_permute_pd(v, 0x5), a_im));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void phase_rotate_avx2(std::span<cplx> x, std::span<const double> values, double angle) {
  // sincos stays scalar; the complex rotation is vectorized.
  const std::size_t n = x.size();
  double* px = raw(x);
  std::size_t i = 0;
  alignas(32) double f[4];
  for (; i + 2 <= n; i += 2) {
    const double t0 = angle * values[i];
    const double t1 = angle * values[i + 1];
    f[0] = std::cos(t0);
    f[1] = -std::sin(t0);
    f[2] = std::cos(t1);
    f[3] = -std::sin(t1);
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(px + 2 * i, complex_mul(v, _mm256_load_pd(f)));
  }
  for (; i < n; ++i) {
    const double theta = angle * values[i];
    x[i] *= cplx(std::cos(theta), -std::sin(theta));
  }
}

double squared_norm_avx2(std::span<const cplx> x) {
  const std::size_t n = x.size();
  const double* px = raw(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += std::norm(x[i]);
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{Isa::avx2,      walsh_hadamard_avx2, multiply_avx2,    diagonal_multiply_avx2,
                             axpy_avx2,      phase_rotate_avx2,   squared_norm_avx2};
  return t;
}

}  // namespace adiabatic::kernels::detail
