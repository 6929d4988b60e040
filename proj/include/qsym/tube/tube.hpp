#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/linalg/matrix.hpp"
#include "qsym/scalar/traits.hpp"

namespace qsym::tube {

using Label = std::size_t;
using Word = std::vector<Label>;

/// Block (i alpha, alpha j) of the tube algebra.
struct Key {
  Label i = 0, a = 0, j = 0;
  auto operator<=>(const Key&) const = default;
};

/// Tube algebra of a category with finitely many irreducibles 0..rank-1 (0 the unit).
///
/// The backend B supplies Scalar, Mor, rank, dual, dim, name, id, zero, compose (f after g),
/// tensor, adjoint, add, scale, trace, hom_basis(cod, dom) = basis of Hom(dom, cod), s, t, tol.
/// Words drop the unit label.
template <class B>
class Tube {
 public:
  using S = typename B::Scalar;
  using Mor = typename B::Mor;
  using Tr = ScalarTraits<S>;
  using Element = std::map<Key, std::vector<S>>;

  struct Block {
    Key key;
    std::vector<Mor> basis;
    Matrix<S> gram;      // gram(a,b) = Tr(b_a^* b_b)
    Matrix<S> gram_inv;
  };

  explicit Tube(std::shared_ptr<const B> cat) : cat_(std::move(cat)), cache_(std::make_unique<Cache>()) {}

  const B& category() const { return *cat_; }
  std::size_t rank() const { return cat_->rank(); }
  double tol() const { return cat_->tol(); }

  static Word word(std::initializer_list<Label> ls) {
    Word w;
    for (auto l : ls)
      if (l != 0) w.push_back(l);
    return w;
  }
  static Word join(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  }

  const Block& block(const Key& k) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->blocks.find(k);
      if (it != cache_->blocks.end()) return *it->second;
    }
    auto b = std::make_unique<Block>();
    b->key = k;
    b->basis = cat_->hom_basis(word({k.i, k.a}), word({k.a, k.j}));
    const std::size_t n = b->basis.size();
    b->gram = Matrix<S>(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        b->gram(x, y) = cat_->trace(cat_->compose(cat_->adjoint(b->basis[x]), b->basis[y]));
    b->gram_inv = n ? inverse(b->gram, tol()) : Matrix<S>();
    std::lock_guard<std::mutex> lock(cache_->mu);
    return *cache_->blocks.emplace(k, std::move(b)).first->second;
  }

  std::size_t block_dim(const Key& k) const { return block(k).basis.size(); }

  /// Every nonzero block, in lexicographic order.
  std::vector<Key> keys() const {
    std::vector<Key> out;
    for (Label i = 0; i < rank(); ++i)
      for (Label a = 0; a < rank(); ++a)
        for (Label j = 0; j < rank(); ++j)
          if (block_dim({i, a, j}) > 0) out.push_back({i, a, j});
    return out;
  }
  std::vector<Key> corner_keys(Label i) const {
    std::vector<Key> out;
    for (Label a = 0; a < rank(); ++a)
      if (block_dim({i, a, i}) > 0) out.push_back({i, a, i});
    return out;
  }

  Element basis_element(const Key& k, std::size_t idx) const {
    std::vector<S> c(block_dim(k), S());
    c.at(idx) = S(1);
    return {{k, std::move(c)}};
  }

  /// sum_k c_k b_k
  Mor morphism(const Key& k, const std::vector<S>& c) const {
    const Block& b = block(k);
    Mor m = cat_->zero(word({k.i, k.a}), word({k.a, k.j}));
    for (std::size_t x = 0; x < c.size(); ++x)
      if (!Tr::is_zero(c[x], 0.0)) m = cat_->add(m, cat_->scale(b.basis[x], c[x]));
    return m;
  }

  /// Coordinates of V in (i a, a j), a irreducible.
  std::vector<S> coords(const Key& k, const Mor& v) const {
    const Block& b = block(k);
    const std::size_t n = b.basis.size();
    Matrix<S> y(n, 1);
    for (std::size_t x = 0; x < n; ++x) y(x, 0) = cat_->trace(cat_->compose(cat_->adjoint(b.basis[x]), v));
    Matrix<S> c = b.gram_inv * y;
    return c.data();
  }

  /// V in (i alpha, alpha j) for a word alpha, expanded over the irreducible blocks.
  Element embed(const Mor& v, Label i, const Word& alpha, Label j) const {
    Element out;
    if (alpha.empty()) {
      if (block_dim({i, 0, j}) > 0) add_into(out, {i, 0, j}, coords({i, 0, j}, v), S(1));
      return out;
    }
    const auto& dec = decomposition(alpha);
    for (const auto& part : dec) {
      const Label g = part.gamma;
      if (block_dim({i, g, j}) == 0) continue;
      Mor acc = cat_->zero(word({i, g}), word({g, j}));
      const std::size_t n = part.w.size();
      for (std::size_t a = 0; a < n; ++a) {
        Mor right = cat_->compose(v, cat_->tensor(part.w[a], cat_->id(word({j}))));
        for (std::size_t b = 0; b < n; ++b) {
          const S& m = part.coef(a, b);
          if (Tr::is_zero(m, 0.0)) continue;
          Mor left = cat_->tensor(cat_->id(word({i})), cat_->adjoint(part.w[b]));
          acc = cat_->add(acc, cat_->scale(cat_->compose(left, right), m));
        }
      }
      add_into(out, {i, g, j}, coords({i, g, j}, acc), S(1));
    }
    return out;
  }

  Element mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [k1, c1] : x)
      for (const auto& [k2, c2] : y) {
        if (k1.j != k2.i) continue;
        const auto& table = products(k1, k2);
        for (std::size_t p = 0; p < c1.size(); ++p) {
          if (Tr::is_zero(c1[p], 0.0)) continue;
          for (std::size_t q = 0; q < c2.size(); ++q) {
            if (Tr::is_zero(c2[q], 0.0)) continue;
            const S f = c1[p] * c2[q];
            for (const auto& [k, c] : table[p * c2.size() + q]) add_into(out, k, c, f);
          }
        }
      }
    prune(out);
    return out;
  }

  Element sharp(const Element& x) const {
    Element out;
    for (const auto& [k, c] : x) {
      const auto& images = sharps(k);
      for (std::size_t p = 0; p < c.size(); ++p) {
        if (Tr::is_zero(c[p], 0.0)) continue;
        add_into(out, {k.j, cat_->dual(k.a), k.i}, images[p], Tr::conj(c[p]));
      }
    }
    prune(out);
    return out;
  }

  /// sum over diagonal unit blocks of Tr_i
  S tau(const Element& x) const {
    S t = S();
    for (const auto& [k, c] : x) {
      if (k.a != 0 || k.i != k.j) continue;
      const Block& b = block(k);
      for (std::size_t p = 0; p < c.size(); ++p) t += c[p] * cat_->trace(b.basis[p]);
    }
    return t;
  }

  /// V in (i a, a j) maps to [i = j = unit] Tr_a(V).
  S counit(const Element& x) const {
    S t = S();
    for (const auto& [k, c] : x) {
      if (k.i != 0 || k.j != 0) continue;
      const Block& b = block(k);
      for (std::size_t p = 0; p < c.size(); ++p) t += c[p] * cat_->trace(b.basis[p]);
    }
    return t;
  }

  /// tau(x# x) = sum over blocks of Tr(V^* V) / d(a).
  S norm2(const Element& x) const {
    S t = S();
    for (const auto& [k, c] : x) {
      const Block& b = block(k);
      S blk = S();
      for (std::size_t p = 0; p < c.size(); ++p)
        for (std::size_t q = 0; q < c.size(); ++q) blk += Tr::conj(c[p]) * b.gram(p, q) * c[q];
      t += blk / cat_->dim(k.a);
    }
    return t;
  }
  /// L2 norm for float scalars; 0 or 1 in exact mode.
  double residual(const Element& x) const {
    if constexpr (Tr::exact) {
      return is_zero(x) ? 0.0 : 1.0;
    } else {
      return std::sqrt(std::max(0.0, std::real(norm2(x))));
    }
  }
  bool is_zero(const Element& x) const {
    for (const auto& [k, c] : x)
      for (const auto& v : c)
        if (!Tr::is_zero(v, tol())) return false;
    return true;
  }

  Element p(Label i) const { return embed(cat_->id(word({i})), i, {}, i); }
  Element unit() const {
    Element u;
    for (Label i = 0; i < rank(); ++i) u = add(u, p(i));
    return u;
  }
  /// The identity of (i i, i i).
  Element central_U(Label i) const {
    Word ii = word({i, i});
    return embed(cat_->id(ii), i, word({i}), i);
  }

  static Element add(const Element& x, const Element& y) {
    Element out = x;
    for (const auto& [k, c] : y) add_into(out, k, c, S(1));
    return out;
  }
  static Element scale(const Element& x, const S& f) {
    Element out = x;
    for (auto& [k, c] : out)
      for (auto& v : c) v *= f;
    return out;
  }
  static Element sub(const Element& x, const Element& y) { return add(x, scale(y, S(-1))); }
  Element power(const Element& x, unsigned k, Label i) const {
    Element r = p(i);
    for (unsigned n = 0; n < k; ++n) r = mul(r, x);
    return r;
  }

  /// Restriction of x to the blocks with the given key.
  static std::vector<S> component(const Element& x, const Key& k, std::size_t n) {
    auto it = x.find(k);
    if (it == x.end()) return std::vector<S>(n, S());
    return it->second;
  }

 private:
  struct Part {
    Label gamma;
    std::vector<Mor> w;  // basis of Hom(gamma, alpha)
    Matrix<S> coef;      // d(gamma) * inverse Gram
  };

  static void add_into(Element& out, const Key& k, const std::vector<S>& c, const S& f) {
    auto& dst = out[k];
    if (dst.empty()) dst.assign(c.size(), S());
    for (std::size_t x = 0; x < c.size(); ++x) dst[x] += f * c[x];
  }
  void prune(Element& x) const {
    for (auto it = x.begin(); it != x.end();) {
      bool zero = true;
      for (const auto& v : it->second) zero = zero && Tr::is_zero(v, 0.0);
      it = zero ? x.erase(it) : std::next(it);
    }
  }

  const std::vector<Part>& decomposition(const Word& alpha) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->dec.find(alpha);
      if (it != cache_->dec.end()) return it->second;
    }
    std::vector<Part> parts;
    Mor total = cat_->zero(alpha, alpha);
    for (Label g = 0; g < rank(); ++g) {
      Part part{g, cat_->hom_basis(alpha, word({g})), {}};
      const std::size_t n = part.w.size();
      if (n == 0) continue;
      Matrix<S> h(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) h(a, b) = cat_->trace(cat_->compose(cat_->adjoint(part.w[a]), part.w[b]));
      part.coef = inverse(h, tol()) * cat_->dim(g);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          total = cat_->add(total, cat_->scale(cat_->compose(part.w[a], cat_->adjoint(part.w[b])), part.coef(a, b)));
      parts.push_back(std::move(part));
    }
    // the isotypic projections must add up to the identity of alpha
    if (!cat_->is_zero(cat_->add(total, cat_->scale(cat_->id(alpha), S(-1)))))
      throw TruncationError("irreducible set does not exhaust the word of length " + std::to_string(alpha.size()));
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->dec.emplace(alpha, std::move(parts)).first->second;
  }

  const std::vector<Element>& products(const Key& k1, const Key& k2) const {
    auto key = std::make_pair(k1, k2);
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->prod.find(key);
      if (it != cache_->prod.end()) return it->second;
    }
    const Block& b1 = block(k1);
    const Block& b2 = block(k2);
    std::vector<Element> table;
    table.reserve(b1.basis.size() * b2.basis.size());
    const Word ab = word({k1.a, k2.a});
    for (const auto& v : b1.basis) {
      Mor left = cat_->tensor(v, cat_->id(word({k2.a})));
      for (const auto& w : b2.basis) {
        Mor right = cat_->tensor(cat_->id(word({k1.a})), w);
        table.push_back(embed(cat_->compose(left, right), k1.i, ab, k2.j));
      }
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->prod.emplace(key, std::move(table)).first->second;
  }

  const std::vector<std::vector<S>>& sharps(const Key& k) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->sharp.find(k);
      if (it != cache_->sharp.end()) return it->second;
    }
    const Block& b = block(k);
    const Label abar = cat_->dual(k.a);
    const Key target{k.j, abar, k.i};
    std::vector<std::vector<S>> images;
    for (const auto& v : b.basis) {
      // (t_a^* (x) 1 (x) 1)(1 (x) V^* (x) 1)(1 (x) 1 (x) s_a)
      Mor r = cat_->tensor(cat_->id(word({abar, k.i})), cat_->s(k.a));
      Mor m = cat_->tensor(cat_->tensor(cat_->id(word({abar})), cat_->adjoint(v)), cat_->id(word({abar})));
      Mor l = cat_->tensor(cat_->adjoint(cat_->t(k.a)), cat_->id(word({k.j, abar})));
      Mor vs = cat_->compose(l, cat_->compose(m, r));
      images.push_back(coords(target, vs));
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->sharp.emplace(k, std::move(images)).first->second;
  }

  struct Cache {
    std::mutex mu;
    std::map<Key, std::unique_ptr<Block>> blocks;
    std::map<Word, std::vector<Part>> dec;
    std::map<std::pair<Key, Key>, std::vector<Element>> prod;
    std::map<Key, std::vector<std::vector<S>>> sharp;
  };

  std::shared_ptr<const B> cat_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace qsym::tube
