// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "qsym/simd/kernels.hpp"

namespace qsym::simd::avx2 {

bool available() {
#if defined(__GNUC__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

// acc += (ar + i ai) * b for two packed complex numbers in b.
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  __m256d bswap = _mm256_permute_pd(b, 0x5);
  __m256d t = _mm256_mul_pd(ai, bswap);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, t));
}

}  // namespace

void cgemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c) {
  std::fill(c, c + m * n, cd(0.0, 0.0));
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cd aip = a[i * k + p];
      if (aip == cd(0.0, 0.0)) continue;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        __m256d acc = _mm256_loadu_pd(crow + 2 * j);
        __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmul_acc(acc, ar, ai, bv));
      }
      if (j < n) c[i * n + j] += aip * b[p * n + j];
    }
  }
}

cd cdotc(std::size_t n, const cd* x, const cd* y) {
  // conj(x) * y: re = xr yr + xi yi, im = xr yi - xi yr
  __m256d accr = _mm256_setzero_pd();
  __m256d acci = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  const std::size_t n2 = n & ~std::size_t(1);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    accr = _mm256_fmadd_pd(xv, yv, accr);
    acci = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acci);
  }
  alignas(32) double r[4];
  alignas(32) double im[4];
  _mm256_store_pd(r, accr);
  _mm256_store_pd(im, acci);
  // accr lanes: xr*yr, xi*yi ; acci lanes: xr*yi, xi*yr
  cd s(r[0] + r[1] + r[2] + r[3], (im[0] - im[1]) + (im[2] - im[3]));
  for (; i < n; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

}  // namespace qsym::simd::avx2
