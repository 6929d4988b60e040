#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qsym/fusion/ring.hpp"
#include "qsym/tube/analysis.hpp"

namespace qsym::tube {

/// Fusion ring read off the hom spaces of a matrix backend.
template <class C>
std::shared_ptr<fusion::FiniteRing> ring_of(const C& cat, const std::string& description) {
  const std::size_t n = cat.rank();
  std::vector<std::string> names;
  std::vector<Rational> dims;
  std::vector<fusion::Label> conj;
  std::vector<unsigned long> table(n * n * n, 0);
  auto w = [](Label x) { return x == 0 ? Word{} : Word{x}; };
  for (Label a = 0; a < n; ++a) {
    names.push_back(cat.name(a));
    dims.push_back(cat.rational_dim(a));
    conj.push_back(cat.dual(a));
    for (Label b = 0; b < n; ++b) {
      Word ab = w(a);
      for (auto x : w(b)) ab.push_back(x);
      for (Label c = 0; c < n; ++c) table[(a * n + b) * n + c] = cat.hom_basis(ab, w(c)).size();
    }
  }
  return std::make_shared<fusion::FiniteRing>(description, std::move(names), std::move(dims), std::move(conj),
                                              std::move(table));
}

inline std::vector<bool> orbit_mask(const fusion::FusionRing& ring, const fusion::SubcategorySpec& sub, Label alpha) {
  std::vector<bool> mask(ring.labels().size(), false);
  for (const auto& blk : fusion::orbits(ring, sub).blocks) {
    bool hit = false;
    for (auto x : blk) hit = hit || x == alpha;
    if (!hit) continue;
    for (auto x : blk) mask[x] = true;
  }
  return mask;
}

/// Diagonal 0/1 operator on the layout: keeps blocks with key.i in rows (all if empty) and key.a in mids.
template <class T>
Matrix<typename T::S> block_projection(const Layout<T>& lay, const std::vector<bool>& rows, const std::vector<bool>& mids) {
  using S = typename T::S;
  Matrix<S> e(lay.dim(), lay.dim());
  for (std::size_t n = 0; n < lay.keys().size(); ++n) {
    const Key& k = lay.keys()[n];
    if ((!rows.empty() && !rows[k.i]) || !mids[k.a]) continue;
    std::size_t end = n + 1 < lay.keys().size() ? lay.offset(n + 1) : lay.dim();
    for (std::size_t x = lay.offset(n); x < end; ++x) e(x, x) = S(1);
  }
  return e;
}

/// Projection of L2(A) onto the blocks whose middle label lies in the orbit of alpha under sub.
template <class T>
Matrix<typename T::S> subcat_projection(const T& tube, const fusion::FusionRing& ring, const fusion::SubcategorySpec& sub,
                                        Label alpha = 0) {
  Layout<T> lay(tube, tube.keys());
  return block_projection(lay, {}, orbit_mask(ring, sub, alpha));
}

struct Residual {
  std::string check;
  double residual = 0.0;
  bool exact = false;
};

/// sum_j sum_W d(j) W e_C1 W#  against  d([conj(a) a]_C1)/d(a) p_i e_{a C1}, as operators on L2(A).
template <class T>
Residual lemma39_check(const T& tube, const fusion::FusionRing& ring, Label i, Label alpha,
                       const fusion::SubcategorySpec& sub) {
  using S = typename T::S;
  using Tr = ScalarTraits<S>;
  const auto& cat = tube.category();
  Layout<T> lay(tube, tube.keys());
  const std::size_t n = cat.rank();
  Matrix<S> e1 = block_projection(lay, {}, orbit_mask(ring, sub, 0));
  Matrix<S> lhs(lay.dim(), lay.dim());
  for (Label j = 0; j < n; ++j) {
    const Key k{i, alpha, j};
    const auto& blk = tube.block(k);
    const std::size_t m = blk.basis.size();
    if (m == 0) continue;
    std::vector<Matrix<S>> lw, lws;
    for (std::size_t a = 0; a < m; ++a) {
      auto b = tube.basis_element(k, a);
      lw.push_back(left_matrix(tube, lay, b));
      lws.push_back(left_matrix(tube, lay, tube.sharp(b)));
    }
    for (std::size_t a = 0; a < m; ++a) {
      Matrix<S> le = lw[a] * e1;
      for (std::size_t b = 0; b < m; ++b) {
        const S c = blk.gram_inv(a, b) * cat.dim(j);
        if (Tr::is_zero(c, 0.0)) continue;
        lhs += (le * lws[b]) * c;
      }
    }
  }
  std::vector<bool> row(n, false);
  row[i] = true;
  const Rational factor = fusion::sub_dim(ring, sub, {ring.conj(alpha), alpha}) / cat.rational_dim(alpha);
  Matrix<S> rhs = block_projection(lay, row, orbit_mask(ring, sub, alpha)) * Tr::from_rational(factor);
  Matrix<S> diff = lhs - rhs;
  Residual r{"lemma39(i=" + cat.name(i) + ", alpha=" + cat.name(alpha) + ")", 0.0, Tr::exact};
  if constexpr (Tr::exact) {
    r.residual = diff.is_zero(0.0) ? 0.0 : 1.0;
  } else {
    r.residual = operator_norm(diff, l2_metric(tube, lay));
  }
  return r;
}

template <class T>
struct MarkovResult {
  typename T::Element sum;
  Rational lambda_inv;
  Residual residual;
};

/// Pimsner-Popa basis sum over orbit representatives, compared with [C:C1] times the unit.
template <class T>
MarkovResult<T> markov_sum_check(const T& tube, const fusion::FusionRing& ring, const fusion::SubcategorySpec& sub) {
  using S = typename T::S;
  using Tr = ScalarTraits<S>;
  const auto& cat = tube.category();
  MarkovResult<T> res;
  const auto idx = fusion::index(ring, sub);
  if (idx.kind != fusion::IndexResult::Kind::Finite) throw InvalidInput("index is not finite: " + idx.str());
  res.lambda_inv = idx.value;
  for (const auto& blk : fusion::orbits(ring, sub).blocks) {
    const Label a = blk.front();
    const Rational w = cat.rational_dim(a) / fusion::sub_dim(ring, sub, {ring.conj(a), a});
    for (Label i = 0; i < cat.rank(); ++i)
      for (Label j = 0; j < cat.rank(); ++j) {
        const Key k{i, a, j};
        const auto& b = tube.block(k);
        const S f = Tr::from_rational(w * cat.rational_dim(j));
        for (std::size_t x = 0; x < b.basis.size(); ++x)
          for (std::size_t y = 0; y < b.basis.size(); ++y) {
            const S c = b.gram_inv(x, y) * f;
            if (Tr::is_zero(c, 0.0)) continue;
            res.sum = T::add(res.sum, T::scale(tube.mul(tube.basis_element(k, x), tube.sharp(tube.basis_element(k, y))), c));
          }
      }
  }
  auto diff = T::sub(res.sum, T::scale(tube.unit(), Tr::from_rational(res.lambda_inv)));
  res.residual = {"markov", tube.residual(diff), Tr::exact};
  return res;
}

}  // namespace qsym::tube
