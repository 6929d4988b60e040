#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qsym/scalar/traits.hpp"

namespace qsym {

/// Incremental span test: float mode orthogonalizes, exact mode row-reduces.
template <class S>
class SpanBuilder {
 public:
  explicit SpanBuilder(double tol) : tol_(tol) {}
  bool add(const std::vector<S>& v) {
    using Tr = ScalarTraits<S>;
    std::vector<S> r = v;
    if constexpr (Tr::exact) {
      for (const auto& [p, row] : rows_) {
        if (Tr::is_zero(r[p], 0.0)) continue;
        S f = r[p];
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= f * row[k];
      }
      std::size_t p = r.size();
      for (std::size_t k = 0; k < r.size() && p == r.size(); ++k)
        if (!Tr::is_zero(r[k], 0.0)) p = k;
      if (p == r.size()) return false;
      S inv = S(1) / r[p];
      for (auto& x : r) x *= inv;
      rows_.emplace_back(p, std::move(r));
      return true;
    } else {
      double n0 = norm(r);
      if (n0 <= tol_) return false;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& [p, q] : rows_) {
          S c = S();
          for (std::size_t k = 0; k < r.size(); ++k) c += Tr::conj(q[k]) * r[k];
          for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * q[k];
        }
      double n1 = norm(r);
      if (n1 <= 1e-8 * n0) return false;
      for (auto& x : r) x /= n1;
      rows_.emplace_back(0, std::move(r));
      return true;
    }
  }
  std::size_t size() const { return rows_.size(); }

 private:
  static double norm(const std::vector<S>& v) {
    double s = 0;
    for (const auto& x : v) s += ScalarTraits<S>::magnitude(x) * ScalarTraits<S>::magnitude(x);
    return std::sqrt(s);
  }
  double tol_;
  std::vector<std::pair<std::size_t, std::vector<S>>> rows_;
};

}  // namespace qsym
