#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/grouprep/group.hpp"
#include "qsym/linalg/matrix.hpp"
#include "qsym/linalg/span.hpp"
#include "qsym/scalar/cyclotomic.hpp"
#include "qsym/scalar/traits.hpp"

namespace qsym::grp {

/// Tensor word of irreducible labels; label 0 (the unit) never appears.
using Word = std::vector<std::size_t>;

inline Word normalize(Word w) {
  std::erase(w, std::size_t(0));
  return w;
}
inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

/// Morphism dom -> cod, stored as a (dim cod) x (dim dom) matrix.
template <class S>
struct MatMor {
  Word cod, dom;
  Matrix<S> m;
};

template <class S>
struct UnitaryIrrep {
  std::string label;
  std::size_t degree = 0;
  std::vector<Matrix<S>> rho;  // indexed by group element
};

template <class S>
S from_cyclotomic(const Cyclotomic& z);
template <>
inline Complex from_cyclotomic<Complex>(const Cyclotomic& z) {
  return z.to_complex();
}
template <>
inline Cyclotomic from_cyclotomic<Cyclotomic>(const Cyclotomic& z) {
  return z;
}

/// Irreps of the built-in groups over Q(zeta): "z<n>", "s3", "a4". Index 0 is trivial.
struct BuiltinReps {
  FiniteGroup group;
  std::vector<UnitaryIrrep<Cyclotomic>> irreps;
};
BuiltinReps builtin_reps(const std::string& name);

/// Composition, tensor product, adjoint and trace shared by the matrix-valued backends.
template <class S>
class MatrixCategory {
 public:
  using Scalar = S;
  using Mor = MatMor<S>;

  explicit MatrixCategory(double tol) : tol_(tol) {}
  virtual ~MatrixCategory() = default;

  double tol() const { return tol_; }
  virtual std::size_t rank() const = 0;
  virtual std::size_t word_dim(const Word& w) const = 0;
  virtual std::size_t dual(std::size_t a) const = 0;
  virtual S dim(std::size_t a) const = 0;
  virtual Rational rational_dim(std::size_t a) const = 0;
  virtual std::string name(std::size_t a) const = 0;
  virtual std::vector<Mor> hom_basis(const Word& cod, const Word& dom) const = 0;
  virtual Mor s(std::size_t a) const = 0;
  virtual Mor t(std::size_t a) const = 0;

  Mor id(const Word& w) const {
    Word n = normalize(w);
    return {n, n, Matrix<S>::identity(word_dim(n))};
  }
  Mor zero(const Word& cod, const Word& dom) const {
    return {normalize(cod), normalize(dom), Matrix<S>(word_dim(cod), word_dim(dom))};
  }
  /// f after g.
  Mor compose(const Mor& f, const Mor& g) const {
    if (f.dom != g.cod) throw InvalidInput("compose: domain/codomain mismatch");
    return {f.cod, g.dom, f.m * g.m};
  }
  Mor tensor(const Mor& f, const Mor& g) const {
    return {concat(f.cod, g.cod), concat(f.dom, g.dom), Matrix<S>::kron(f.m, g.m)};
  }
  Mor adjoint(const Mor& f) const { return {f.dom, f.cod, f.m.adjoint()}; }
  Mor add(const Mor& f, const Mor& g) const {
    if (f.dom != g.dom || f.cod != g.cod) throw InvalidInput("add: word mismatch");
    return {f.cod, f.dom, f.m + g.m};
  }
  Mor scale(const Mor& f, const S& c) const { return {f.cod, f.dom, f.m * c}; }
  /// Categorical trace; equals the matrix trace for the standard solutions used here.
  S trace(const Mor& f) const {
    if (f.dom != f.cod) throw InvalidInput("trace of a non-endomorphism");
    return f.m.trace();
  }
  bool is_zero(const Mor& f) const { return f.m.is_zero(tol_); }

  /// (1 (x) s_a^*)(1_a (x) xi (x) 1_abar) s_a for xi in (w a, unit); lands in (a w, unit).
  Mor rotate(const Mor& xi, std::size_t a) const {
    if (!xi.dom.empty() || xi.cod.empty() || xi.cod.back() != a)
      throw InvalidInput("rotate needs a vector whose last letter is the rotated label");
    const Mor sa = s(a);
    const std::size_t d = word_dim({a}), db = word_dim(normalize({dual(a)}));
    const std::size_t rest = xi.m.rows() / d;
    // m(k, p) = sum_q conj(s(k, q)) s(p, q)
    Matrix<S> m(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < db; ++q) m(k, p) += ScalarTraits<S>::conj(sa.m(k * db + q, 0)) * sa.m(p * db + q, 0);
    Word cod{a};
    cod.insert(cod.end(), xi.cod.begin(), xi.cod.end() - 1);
    Matrix<S> out(d * rest, 1);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t k = 0; k < d; ++k) {
        if (ScalarTraits<S>::is_zero(m(k, p), 0.0)) continue;
        for (std::size_t r = 0; r < rest; ++r) out(p * rest + r, 0) += m(k, p) * xi.m(r * d + k, 0);
      }
    return {normalize(cod), {}, std::move(out)};
  }
  std::size_t unit() const { return 0; }

 protected:
  double tol_;
};

/// Rep(G) for a finite group with explicit unitary irreps.
template <class S>
class RepCategory : public MatrixCategory<S> {
 public:
  using Mor = MatMor<S>;

  /// Validates homomorphism, unitarity, irreducibility, completeness and conjugate closure.
  RepCategory(FiniteGroup g, std::vector<UnitaryIrrep<S>> irreps, double tol = 1e-10);

  static std::shared_ptr<RepCategory> builtin(const std::string& name, double tol = 1e-10) {
    auto b = builtin_reps(name);
    std::vector<UnitaryIrrep<S>> irr;
    for (const auto& r : b.irreps) {
      UnitaryIrrep<S> u{r.label, r.degree, {}};
      for (const auto& m : r.rho) {
        Matrix<S> x(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) x(i, j) = from_cyclotomic<S>(m(i, j));
        u.rho.push_back(std::move(x));
      }
      irr.push_back(std::move(u));
    }
    return std::make_shared<RepCategory>(std::move(b.group), std::move(irr), tol);
  }

  const FiniteGroup& group() const { return g_; }
  const std::vector<UnitaryIrrep<S>>& irreps() const { return irreps_; }
  std::size_t rank() const override { return irreps_.size(); }
  std::size_t dual(std::size_t a) const override { return dual_.at(a); }
  S dim(std::size_t a) const override { return S(static_cast<long>(irreps_.at(a).degree)); }
  Rational rational_dim(std::size_t a) const override { return Rational(static_cast<long>(irreps_.at(a).degree)); }
  std::string name(std::size_t a) const override { return irreps_.at(a).label; }
  std::size_t find(const std::string& label) const {
    for (std::size_t a = 0; a < rank(); ++a)
      if (irreps_[a].label == label) return a;
    throw InvalidInput("unknown irrep '" + label + "'");
  }
  std::size_t word_dim(const Word& w) const override {
    std::size_t d = 1;
    for (auto a : w) d *= irreps_.at(a).degree;
    return d;
  }

  /// rho_w(g) as a Kronecker product, first letter most significant.
  const std::vector<Matrix<S>>& rho(const Word& w) const;
  /// (1/|G|) sum_g chi_cod(g) conj(chi_dom(g)), from the traces of the irreps.
  std::size_t hom_dim(const Word& cod, const Word& dom) const;
  /// Basis of (cod, dom) = Hom(dom, cod) by averaging matrix units in row-major scan order.
  std::vector<Mor> hom_basis(const Word& cod, const Word& dom) const override;
  /// Orthonormal basis for <T,S> = Tr(S*T); float mode only.
  std::vector<Mor> onb(const Word& cod, const Word& dom) const;
  bool is_intertwiner(const Mor& f) const;

  /// s_a = sum_k e_k (x) conj(e_k) in (a conj(a), eps).
  Mor s(std::size_t a) const override { return pair_vector(a, {a, dual(a)}); }
  /// t_a = sum_k conj(e_k) (x) e_k in (conj(a) a, eps).
  Mor t(std::size_t a) const override { return pair_vector(a, {dual(a), a}); }

  /// (Tr_a (x) id)(T) for T in (a b, a c), a the first letter of both words.
  Mor partial_trace_left(const Mor& T) const;
  /// (id (x) Tr_a)(T) for T in (b a, c a), a the last letter of both words.
  Mor partial_trace_right(const Mor& T) const;
  /// (ab, g) -> (a, g conj(b)): T -> (1 (x) s_b*)(T (x) 1).
  Mor frobenius_right(const Mor& T) const;
  /// (ab, g) -> (b, conj(a) g): T -> (t_a* (x) 1)(1 (x) T).
  Mor frobenius_left(const Mor& T) const;
  /// Inverses: (a, g conj(b)) -> (ab, g) and (b, conj(a) g) -> (ab, g).
  Mor frobenius_right_inverse(const Mor& X, std::size_t b) const;
  Mor frobenius_left_inverse(const Mor& Y, std::size_t a) const;

 private:
  Mor pair_vector(std::size_t a, Word cod) const {
    const std::size_t d = irreps_.at(a).degree;
    Matrix<S> v(d * d, 1);
    for (std::size_t k = 0; k < d; ++k) v(k * d + k, 0) = S(1);
    return {normalize(std::move(cod)), {}, std::move(v)};
  }
  /// rho_w(g) e_r as a Kronecker product of columns
  std::vector<S> column(const Word& w, std::size_t g, std::size_t r) const {
    std::vector<S> out{S(1)};
    std::size_t stride = word_dim(w);
    for (auto a : w) {
      const auto& m = irreps_[a].rho[g];
      stride /= m.rows();
      const std::size_t ra = (r / stride) % m.rows();
      std::vector<S> next;
      next.reserve(out.size() * m.rows());
      for (const auto& o : out)
        for (std::size_t i = 0; i < m.rows(); ++i) next.push_back(o * m(i, ra));
      out = std::move(next);
    }
    return out;
  }

  S character(const Word& w, std::size_t g) const {
    S c(1);
    for (auto a : w) c *= irreps_[a].rho[g].trace();
    return c;
  }

  FiniteGroup g_;
  std::vector<UnitaryIrrep<S>> irreps_;
  std::vector<std::size_t> dual_;
  struct Cache {
    std::mutex mu;
    std::map<Word, std::vector<Matrix<S>>> rho;
    std::map<std::pair<Word, Word>, std::vector<MatMor<S>>> hom;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

/// Vec(G): simple objects are group elements, hom spaces are C or 0, trivial associator.
template <class S>
class VecCategory : public MatrixCategory<S> {
 public:
  using Mor = MatMor<S>;
  explicit VecCategory(FiniteGroup g, double tol = 1e-10) : MatrixCategory<S>(tol), g_(std::move(g)) {}

  const FiniteGroup& group() const { return g_; }
  std::size_t rank() const override { return g_.order(); }
  std::size_t word_dim(const Word&) const override { return 1; }
  std::size_t dual(std::size_t a) const override { return g_.inv(a); }
  S dim(std::size_t) const override { return S(1); }
  Rational rational_dim(std::size_t) const override { return Rational(1); }
  std::string name(std::size_t a) const override { return g_.element_name(a); }
  std::size_t product(const Word& w) const {
    std::size_t x = 0;
    for (auto a : w) x = g_.mul(x, a);
    return x;
  }
  std::vector<Mor> hom_basis(const Word& cod, const Word& dom) const override {
    if (product(cod) != product(dom)) return {};
    return {{normalize(cod), normalize(dom), Matrix<S>::identity(1)}};
  }
  Mor s(std::size_t a) const override { return {normalize({a, dual(a)}), {}, Matrix<S>::identity(1)}; }
  Mor t(std::size_t a) const override { return {normalize({dual(a), a}), {}, Matrix<S>::identity(1)}; }

 private:
  FiniteGroup g_;
};

// ---------------------------------------------------------------- implementation

template <class S>
RepCategory<S>::RepCategory(FiniteGroup g, std::vector<UnitaryIrrep<S>> irreps, double tol)
    : MatrixCategory<S>(tol), g_(std::move(g)), irreps_(std::move(irreps)) {
  using Tr = ScalarTraits<S>;
  const std::size_t n = g_.order();
  if (irreps_.empty()) throw InvalidInput("no irreps given");
  auto close = [&](const Matrix<S>& a, const Matrix<S>& b) { return (a - b).is_zero(this->tol_); };
  std::size_t sum_sq = 0;
  for (const auto& r : irreps_) {
    if (r.rho.size() != n) throw InvalidInput("irrep " + r.label + " needs one matrix per group element");
    for (const auto& m : r.rho)
      if (m.rows() != r.degree || m.cols() != r.degree) throw InvalidInput("irrep " + r.label + " has a wrong shape");
    for (std::size_t x = 0; x < n; ++x) {
      if (!close(r.rho[x] * r.rho[x].adjoint(), Matrix<S>::identity(r.degree)))
        throw InvalidInput("irrep " + r.label + " is not unitary at " + g_.element_name(x));
      for (std::size_t y = 0; y < n; ++y)
        if (!close(r.rho[g_.mul(x, y)], r.rho[x] * r.rho[y]))
          throw InvalidInput("irrep " + r.label + " is not a homomorphism");
    }
    sum_sq += r.degree * r.degree;
  }
  for (const auto& m : irreps_[0].rho)
    if (irreps_[0].degree != 1 || !close(m, Matrix<S>::identity(1)))
      throw InvalidInput("irrep 0 must be the trivial representation");
  for (std::size_t a = 0; a < rank(); ++a)
    if (hom_basis({a}, {a}).size() != 1) throw InvalidInput("irrep " + irreps_[a].label + " is reducible");
  for (std::size_t a = 0; a < rank(); ++a)
    for (std::size_t b = a + 1; b < rank(); ++b)
      if (!hom_basis({a}, {b}).empty())
        throw InvalidInput("irreps " + irreps_[a].label + " and " + irreps_[b].label + " are equivalent");
  if (sum_sq != n) throw InvalidInput("irrep degrees do not satisfy sum d^2 = |G|");
  dual_.assign(rank(), rank());
  for (std::size_t a = 0; a < rank(); ++a)
    for (std::size_t b = 0; b < rank() && dual_[a] == rank(); ++b) {
      if (irreps_[b].degree != irreps_[a].degree) continue;
      bool same = true;
      for (std::size_t x = 0; x < n && same; ++x) same = close(irreps_[a].rho[x].conj(), irreps_[b].rho[x]);
      if (same) dual_[a] = b;
    }
  for (std::size_t a = 0; a < rank(); ++a)
    if (dual_[a] == rank())
      throw InvalidInput("the entrywise conjugate of " + irreps_[a].label + " is not among the irreps");
  (void)Tr::exact;
}

template <class S>
const std::vector<Matrix<S>>& RepCategory<S>::rho(const Word& w0) const {
  Word w = normalize(w0);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->rho.find(w);
  if (it != cache_->rho.end()) return it->second;
  std::vector<Matrix<S>> out;
  for (std::size_t x = 0; x < g_.order(); ++x) {
    Matrix<S> m = Matrix<S>::identity(1);
    for (auto a : w) m = Matrix<S>::kron(m, irreps_.at(a).rho[x]);
    out.push_back(std::move(m));
  }
  return cache_->rho.emplace(w, std::move(out)).first->second;
}

template <class S>
std::size_t RepCategory<S>::hom_dim(const Word& cod, const Word& dom) const {
  S acc = S();
  for (std::size_t x = 0; x < g_.order(); ++x) acc += character(cod, x) * ScalarTraits<S>::conj(character(dom, x));
  acc = acc / S(static_cast<long>(g_.order()));
  if constexpr (ScalarTraits<S>::exact) {
    if (!acc.is_rational() || acc.rational_part().get_den() != 1 || acc.rational_part() < 0)
      throw ConsistencyError("character inner product is not a natural number");
    return acc.rational_part().get_num().get_ui();
  } else {
    double r = std::round(acc.real());
    if (std::abs(acc - S(r)) > 1e-6 || r < 0) throw ConsistencyError("character inner product is not a natural number");
    return static_cast<std::size_t>(r);
  }
}

template <class S>
std::vector<MatMor<S>> RepCategory<S>::hom_basis(const Word& cod0, const Word& dom0) const {
  Word cod = normalize(cod0), dom = normalize(dom0);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->hom.find({cod, dom});
    if (it != cache_->hom.end()) return it->second;
  }
  const std::size_t target = hom_dim(cod, dom);
  const std::size_t nr = word_dim(cod), nc = word_dim(dom), ng = g_.order();
  const S inv_order = S(1) / S(static_cast<long>(ng));
  std::vector<Mor> basis;
  SpanBuilder<S> span(this->tol_);
  for (std::size_t r = 0; r < nr && basis.size() < target; ++r)
    for (std::size_t c = 0; c < nc && basis.size() < target; ++c) {
      // E(e_rc) = (1/|G|) sum_g rho_cod(g)[:, r] rho_dom(g)^*[c, :]
      Matrix<S> e(nr, nc);
      for (std::size_t x = 0; x < ng; ++x) {
        const auto u = column(cod, x, r);
        const auto v = column(dom, x, c);
        for (std::size_t i = 0; i < nr; ++i) {
          if (ScalarTraits<S>::is_zero(u[i], 0.0)) continue;
          for (std::size_t j = 0; j < nc; ++j) {
            if (ScalarTraits<S>::is_zero(v[j], 0.0)) continue;
            e(i, j) += u[i] * ScalarTraits<S>::conj(v[j]);
          }
        }
      }
      e *= inv_order;
      if (span.add(e.data())) basis.push_back({cod, dom, std::move(e)});
    }
  if (basis.size() != target)
    throw ConsistencyError("hom space scan found " + std::to_string(basis.size()) + " vectors, expected " +
                           std::to_string(target));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->hom.emplace(std::make_pair(cod, dom), basis);
  return basis;
}

template <class S>
std::vector<MatMor<S>> RepCategory<S>::onb(const Word& cod, const Word& dom) const {
  if constexpr (ScalarTraits<S>::exact) {
    throw InvalidInput("onb needs square roots; use float mode");
  } else {
    auto b = hom_basis(cod, dom);
    std::vector<Mor> out;
    for (auto v : b) {
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : out) {
          S c = this->trace(this->compose(this->adjoint(u), v));
          v.m -= u.m * c;
        }
      double n2 = std::real(this->trace(this->compose(this->adjoint(v), v)));
      if (n2 <= this->tol_ * this->tol_) throw NumericalError("Gram-Schmidt met a numerically dependent vector");
      v.m *= S(1.0 / std::sqrt(n2));
      out.push_back(std::move(v));
    }
    return out;
  }
}

template <class S>
bool RepCategory<S>::is_intertwiner(const Mor& f) const {
  const auto& rc = rho(f.cod);
  const auto& rd = rho(f.dom);
  for (std::size_t x = 0; x < g_.order(); ++x)
    if (!(rc[x] * f.m - f.m * rd[x]).is_zero(this->tol_ * std::max(1.0, f.m.max_abs()))) return false;
  return true;
}

template <class S>
MatMor<S> RepCategory<S>::partial_trace_left(const Mor& T) const {
  if (T.cod.empty() || T.dom.empty() || T.cod[0] != T.dom[0])
    throw InvalidInput("partial_trace_left needs a common first letter");
  const std::size_t a = T.cod[0];
  Word b(T.cod.begin() + 1, T.cod.end()), c(T.dom.begin() + 1, T.dom.end());
  // (t_a* (x) 1)(1 (x) T)(t_a (x) 1)
  Mor ta = t(a);
  Mor lhs = this->tensor(this->adjoint(ta), this->id(b));
  Mor mid = this->tensor(this->id({dual(a)}), T);
  Mor rhs = this->tensor(ta, this->id(c));
  return this->compose(lhs, this->compose(mid, rhs));
}

template <class S>
MatMor<S> RepCategory<S>::partial_trace_right(const Mor& T) const {
  if (T.cod.empty() || T.dom.empty() || T.cod.back() != T.dom.back())
    throw InvalidInput("partial_trace_right needs a common last letter");
  const std::size_t a = T.cod.back();
  Word b(T.cod.begin(), T.cod.end() - 1), c(T.dom.begin(), T.dom.end() - 1);
  // (1 (x) s_a*)(T (x) 1)(1 (x) s_a)
  Mor sa = s(a);
  Mor lhs = this->tensor(this->id(b), this->adjoint(sa));
  Mor mid = this->tensor(T, this->id({dual(a)}));
  Mor rhs = this->tensor(this->id(c), sa);
  return this->compose(lhs, this->compose(mid, rhs));
}

template <class S>
MatMor<S> RepCategory<S>::frobenius_right(const Mor& T) const {
  if (T.cod.size() != 2) throw InvalidInput("frobenius_right expects T in (ab, g)");
  const std::size_t a = T.cod[0], b = T.cod[1];
  Mor lhs = this->tensor(this->id({a}), this->adjoint(s(b)));
  return this->compose(lhs, this->tensor(T, this->id({dual(b)})));
}

template <class S>
MatMor<S> RepCategory<S>::frobenius_left(const Mor& T) const {
  if (T.cod.size() != 2) throw InvalidInput("frobenius_left expects T in (ab, g)");
  const std::size_t a = T.cod[0], b = T.cod[1];
  Mor lhs = this->tensor(this->adjoint(t(a)), this->id({b}));
  return this->compose(lhs, this->tensor(this->id({dual(a)}), T));
}

template <class S>
MatMor<S> RepCategory<S>::frobenius_right_inverse(const Mor& X, std::size_t b) const {
  // X in (a, g conj(b)):  (X (x) 1_b)(1_g (x) t_b)
  Word g(X.dom.begin(), X.dom.end() - (b == 0 ? 0 : 1));
  return this->compose(this->tensor(X, this->id({b})), this->tensor(this->id(g), t(b)));
}

template <class S>
MatMor<S> RepCategory<S>::frobenius_left_inverse(const Mor& Y, std::size_t a) const {
  // Y in (b, conj(a) g):  (1_a (x) Y)(s_a (x) 1_g)
  Word g(Y.dom.begin() + (a == 0 ? 0 : 1), Y.dom.end());
  return this->compose(this->tensor(this->id({a}), Y), this->tensor(s(a), this->id(g)));
}

}  // namespace qsym::grp
