#include <cstdlib>
#include <cstring>

#include "qsym/simd/kernels.hpp"

namespace qsym::simd {

namespace {

Path detect() {
  const char* env = std::getenv("QSYM_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Path::Scalar;
  return avx2::available() ? Path::Avx2 : Path::Scalar;
}

}  // namespace

Path active_path() {
  static const Path p = detect();
  return p;
}

const char* path_name(Path p) { return p == Path::Avx2 ? "avx2" : "scalar"; }

void cgemm(std::size_t m, std::size_t n, std::size_t k, const cd* a, const cd* b, cd* c) {
  if (active_path() == Path::Avx2) avx2::cgemm(m, n, k, a, b, c);
  else scalar::cgemm(m, n, k, a, b, c);
}

cd cdotc(std::size_t n, const cd* x, const cd* y) {
  return active_path() == Path::Avx2 ? avx2::cdotc(n, x, y) : scalar::cdotc(n, x, y);
}

}  // namespace qsym::simd
