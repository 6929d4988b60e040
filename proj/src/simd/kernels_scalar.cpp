#include <algorithm>

#include "qsym/simd/kernels.hpp"

namespace qsym::simd::scalar {

void cgemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c) {
  std::fill(c, c + m * n, cd(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    cd* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cd aip = a[i * k + p];
      if (aip == cd(0.0, 0.0)) continue;
      const cd* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

cd cdotc(std::size_t n, const cd* x, const cd* y) {
  cd s(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

}  // namespace qsym::simd::scalar
