#pragma once

#include <complex>
#include <cstddef>

namespace qsym::simd {

using cd = std::complex<double>;

enum class Path { Scalar, Avx2 };

/// C(m x n) = A(m x k) * B(k x n), all row-major, C overwritten.
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c);
/// sum_i conj(x_i) * y_i
cd cdotc(std::size_t n, const cd* x, const cd* y);

/// Path chosen at first use: AVX2+FMA when the CPU has it, unless QSYM_SIMD=scalar.
Path active_path();
const char* path_name(Path p);

namespace scalar {
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c);
cd cdotc(std::size_t n, const cd* x, const cd* y);
}  // namespace scalar

namespace avx2 {
bool available();
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c);
cd cdotc(std::size_t n, const cd* x, const cd* y);
}  // namespace avx2

}  // namespace qsym::simd
