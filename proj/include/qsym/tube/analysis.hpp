#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "qsym/tube/tube.hpp"

namespace qsym::tube {

/// Coordinates of a direct sum of blocks as one flat vector.
template <class T>
class Layout {
 public:
  using S = typename T::S;
  using Element = typename T::Element;

  Layout(const T& tube, std::vector<Key> keys) : keys_(std::move(keys)) {
    for (const auto& k : keys_) {
      offset_.push_back(dim_);
      dim_ += tube.block_dim(k);
    }
  }
  std::size_t dim() const { return dim_; }
  const std::vector<Key>& keys() const { return keys_; }
  std::size_t offset(std::size_t n) const { return offset_[n]; }

  std::vector<S> flatten(const Element& x) const {
    std::vector<S> v(dim_, S());
    for (std::size_t n = 0; n < keys_.size(); ++n) {
      auto it = x.find(keys_[n]);
      if (it == x.end()) continue;
      std::copy(it->second.begin(), it->second.end(), v.begin() + static_cast<long>(offset_[n]));
    }
    return v;
  }
  Element unflatten(const std::vector<S>& v) const {
    Element x;
    for (std::size_t n = 0; n < keys_.size(); ++n) {
      std::size_t len = (n + 1 < keys_.size() ? offset_[n + 1] : dim_) - offset_[n];
      x[keys_[n]] = std::vector<S>(v.begin() + static_cast<long>(offset_[n]),
                                   v.begin() + static_cast<long>(offset_[n] + len));
    }
    return x;
  }
  /// Basis element number idx, as a tube element.
  std::pair<Key, std::size_t> locate(std::size_t idx) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), idx);
    std::size_t n = static_cast<std::size_t>(it - offset_.begin()) - 1;
    return {keys_[n], idx - offset_[n]};
  }

 private:
  std::vector<Key> keys_;
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
};

/// Matrix of y -> x y on the span of the layout's blocks.
template <class T>
Matrix<typename T::S> left_matrix(const T& tube, const Layout<T>& lay, const typename T::Element& x) {
  Matrix<typename T::S> m(lay.dim(), lay.dim());
  for (std::size_t q = 0; q < lay.dim(); ++q) {
    auto [k, idx] = lay.locate(q);
    auto col = lay.flatten(tube.mul(x, tube.basis_element(k, idx)));
    for (std::size_t r = 0; r < lay.dim(); ++r) m(r, q) = col[r];
  }
  return m;
}

/// Gram matrix of the L2 inner product tau(y# x) on the layout.
template <class T>
Matrix<typename T::S> l2_metric(const T& tube, const Layout<T>& lay) {
  Matrix<typename T::S> g(lay.dim(), lay.dim());
  for (std::size_t n = 0; n < lay.keys().size(); ++n) {
    const Key& k = lay.keys()[n];
    const auto& b = tube.block(k);
    const auto d = tube.category().dim(k.a);
    for (std::size_t x = 0; x < b.basis.size(); ++x)
      for (std::size_t y = 0; y < b.basis.size(); ++y) g(lay.offset(n) + x, lay.offset(n) + y) = b.gram(x, y) / d;
  }
  return g;
}

inline Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
  Eigen::MatrixXcd e(static_cast<long>(m.rows()), static_cast<long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(static_cast<long>(r), static_cast<long>(c)) = m(r, c);
  return e;
}

/// Operator norm of M with respect to the inner product y^* G x.
inline double operator_norm(const Matrix<Complex>& m, const Matrix<Complex>& metric) {
  if (m.rows() == 0) return 0.0;
  Eigen::MatrixXcd g = to_eigen(metric);
  Eigen::LLT<Eigen::MatrixXcd> llt(g);
  if (llt.info() != Eigen::Success) throw NumericalError("L2 metric is not positive definite");
  Eigen::MatrixXcd l = llt.matrixL();
  // z = L^* x is orthonormal; the operator becomes L^* M L^{-*}
  Eigen::MatrixXcd lstar = l.adjoint();
  Eigen::MatrixXcd a = lstar * to_eigen(m);
  Eigen::MatrixXcd op = lstar.transpose().triangularView<Eigen::Lower>().solve(a.transpose()).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op);
  return svd.singularValues()(0);
}

/// Moments tau(U_i^k), computed in the algebra.
template <class T>
typename T::S moment_algebra(const T& tube, Label i, unsigned k) {
  return tube.tau(tube.power(tube.central_U(i), k, i));
}

/// conj(Tr zeta) for the rotation zeta of Hom(unit, i^k).
template <class T>
typename T::S moment_rotation(const T& tube, Label i, unsigned k) {
  using S = typename T::S;
  using Tr = ScalarTraits<S>;
  const auto& cat = tube.category();
  if (k == 0) return cat.dim(i);  // tau(p_i)
  if (i == 0) return S(1);
  Word ik(k, i);
  auto basis = cat.hom_basis(ik, {});
  const std::size_t n = basis.size();
  if (n == 0) return S();
  Matrix<S> h(n, n), y(n, n);
  const Label ibar = cat.dual(i);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h(a, b) = cat.trace(cat.compose(cat.adjoint(basis[a]), basis[b]));
  for (std::size_t b = 0; b < n; ++b) {
    // (1^{k} (x) s_i^*)(1_i (x) xi (x) 1_ibar) s_i
    typename T::Mor z;
    if constexpr (requires { cat.rotate(basis[b], i); }) {
      z = cat.rotate(basis[b], i);
    } else {
      auto mid = cat.tensor(cat.tensor(cat.id({i}), basis[b]), cat.id({ibar}));
      auto cap = cat.tensor(cat.id(ik), cat.adjoint(cat.s(i)));
      z = cat.compose(cap, cat.compose(mid, cat.s(i)));
    }
    for (std::size_t a = 0; a < n; ++a) y(a, b) = cat.trace(cat.compose(cat.adjoint(basis[a]), z));
  }
  Matrix<S> zeta = inverse(h, tube.tol()) * y;
  return Tr::conj(zeta.trace());
}

template <class S>
struct SpectralPiece {
  Complex lambda;
  std::string lambda_str;
  S weight;  // tau of the spectral projection
};

template <class T>
struct SpectralResult {
  using S = typename T::S;
  typename T::Element q;  // projection onto the fixed space of U_i
  S tau_q;
  std::vector<SpectralPiece<S>> pieces;
  unsigned period = 0;  // exact mode
};

/// Spectral decomposition of U_i in the corner p_i A p_i.
template <class T>
SpectralResult<T> spectral(const T& tube, Label i, double gap_tol = 1e-6, unsigned period_bound = 128) {
  using S = typename T::S;
  using Tr = ScalarTraits<S>;
  using Element = typename T::Element;
  SpectralResult<T> res;
  const Element u = tube.central_U(i);
  const Element pi = tube.p(i);
  if constexpr (Tr::exact) {
    std::vector<Element> pw{pi};
    for (unsigned n = 1;; ++n) {
      if (n > period_bound)
        throw NumericalError("U_i has no finite period up to " + std::to_string(period_bound) + "; use float mode");
      Element next = tube.mul(pw.back(), u);
      if (tube.is_zero(T::sub(next, pi))) {
        res.period = n;
        break;
      }
      pw.push_back(std::move(next));
    }
    const unsigned N = res.period;
    for (unsigned m = 0; m < N; ++m) {
      Element pm;
      for (unsigned k = 0; k < N; ++k)
        pm = T::add(pm, T::scale(pw[k], Cyclotomic::zeta(N, -static_cast<long>(m * k)) / Cyclotomic(Rational(N))));
      if (tube.is_zero(pm)) continue;
      const Cyclotomic lam = Cyclotomic::zeta(N, static_cast<long>(m));
      res.pieces.push_back({lam.to_complex(), lam.str(), tube.tau(pm)});
      if (m == 0) res.q = pm;
    }
  } else {
    Layout<T> lay(tube, tube.corner_keys(i));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(left_matrix(tube, lay, u)), false);
    std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    std::vector<std::vector<Complex>> clusters;
    for (const auto& z : ev) {
      bool placed = false;
      for (auto& c : clusters)
        if (std::abs(c.front() - z) < gap_tol) {
          c.push_back(z);
          placed = true;
          break;
        }
      if (!placed) clusters.push_back({z});
    }
    std::vector<Complex> centers;
    for (const auto& c : clusters) {
      Complex m = 0;
      for (auto z : c) m += z;
      centers.push_back(m / static_cast<double>(c.size()));
    }
    for (std::size_t a = 0; a < centers.size(); ++a)
      for (std::size_t b = a + 1; b < centers.size(); ++b)
        if (std::abs(centers[a] - centers[b]) < 1e3 * gap_tol)
          throw NumericalError("eigenvalue clusters of U_i are not separated; use exact mode");
    for (std::size_t a = 0; a < centers.size(); ++a) {
      Element proj = pi;
      for (std::size_t b = 0; b < centers.size(); ++b) {
        if (b == a) continue;
        Element f = T::sub(u, T::scale(pi, centers[b]));
        proj = T::scale(tube.mul(proj, f), S(1) / (centers[a] - centers[b]));
      }
      Complex lam = centers[a];
      res.pieces.push_back({lam, Tr::str(lam), tube.tau(proj)});
      if (std::abs(lam - 1.0) < gap_tol) res.q = proj;
    }
  }
  res.tau_q = tube.tau(res.q);
  return res;
}

/// Orbit of a label under right tensoring by the labels in sub.
template <class T>
std::set<Label> orbit_of(const T& tube, Label a, const std::set<Label>& sub) {
  const auto& cat = tube.category();
  std::set<Label> out{a};
  std::vector<Label> todo{a};
  while (!todo.empty()) {
    Label x = todo.back();
    todo.pop_back();
    for (Label b : sub)
      for (Label c = 0; c < cat.rank(); ++c)
        if (!out.count(c) && !cat.hom_basis(T::word({x, b}), T::word({c})).empty()) {
          out.insert(c);
          todo.push_back(c);
        }
  }
  return out;
}

}  // namespace qsym::tube
