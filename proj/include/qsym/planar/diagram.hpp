#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/scalar/poly.hpp"

namespace qsym::planar {

/// Non-crossing pair partition with `upper` points on top and `lower` on the bottom.
///
/// Numbering: upper points 1..n left to right, lower points n+1..n+m left to right.
/// The diagram is read top to bottom, so it is a morphism v^n -> v^m.
///
///      1   2   3          n = 3
///      |    \_/
///      |                  (1 4)(2 3)
///      |
///      4                  m = 1
///
/// Planarity is tested in the cyclic order 1..n, n+m..n+1 around the boundary.
struct PairDiagram {
  int upper = 0;
  int lower = 0;
  /// Sorted list of pairs (a, b) with a < b, 1-based.
  std::vector<std::pair<int, int>> pairs;

  PairDiagram() = default;
  /// Validates parity, coverage and planarity; canonicalizes pair order.
  PairDiagram(int upper, int lower, std::vector<std::pair<int, int>> pairs);

  int points() const { return upper + lower; }
  /// partner[x] for x in 1..points(); index 0 unused.
  std::vector<int> partner() const;
  /// Pairs with both ends on the same boundary (cups and caps).
  int turnbacks() const;

  friend auto operator<=>(const PairDiagram&, const PairDiagram&) = default;
  friend bool operator==(const PairDiagram&, const PairDiagram&) = default;

  /// "NC2(4): (1 4)(2 3)" when upper == 0, else "NC2(n,m): ...".
  std::string str() const;
  static PairDiagram parse(const std::string& text);
};

PairDiagram identity(int n);
/// Nested cups on 2n lower points: (1 2n)(2 2n-1)...
PairDiagram nested_cups(int n);
PairDiagram cup();
PairDiagram cap();

struct Composite {
  PairDiagram diagram;
  int loops = 0;
  /// Number of zigzags straightened, (T(p)+T(q)-2 loops-T(pq))/2 with T the turnback count.
  int zigzags = 0;
};

/// p after q: q sits on top, its lower points glued to the upper points of p.
Composite compose(const PairDiagram& p, const PairDiagram& q);
/// Horizontal juxtaposition, p on the left.
PairDiagram tensor(const PairDiagram& p, const PairDiagram& q);
/// Reflection in the horizontal axis.
PairDiagram involute(const PairDiagram& p);

/// All non-crossing perfect matchings on n points, as NC2(0, n); empty for odd n.
std::vector<PairDiagram> enumerate_nc2(int n);
/// All of NC2(n, m).
std::vector<PairDiagram> enumerate_nc2(int n, int m);
/// Shift x -> x+2 cyclically on a diagram with no upper points.
PairDiagram rotate2(const PairDiagram& p);
/// Inverse shift x -> x-2.
PairDiagram rotate2_inverse(const PairDiagram& p);
/// Diagrams in NC2(0,2k) with no pair {i, i+1} for odd i.
std::vector<PairDiagram> nc2_circ(int k);

std::int64_t catalan(int k);
std::int64_t binomial(int n, int k);
std::int64_t riordan(int k);

/// Polynomial in d: d^2-1 for k = 0, otherwise the constant number of
/// rotate2 fixed points in nc2_circ(k).
Poly tl_moment(int k);

struct ZetaResult {
  PairDiagram diagram;
  int loops = 0;
  int zigzags = 0;
};
/// Rotation map on (alpha^k, eps), alpha = v v, built from cups and caps.
ZetaResult zeta_on_basis(const PairDiagram& p);

/// (1/n) sum_{k<n} tl_moment(k) at d, using the moment values 0 for k=1 and 1 for k>=2.
Rational cesaro_tau_q(long n, const Rational& d);
/// Same average with every moment taken from diagram enumeration (small n only).
Rational cesaro_tau_q_enumerated(int n, const Rational& d);
/// k-th moment of delta_1 + (d^2 - 2 - 2 Re z) dz on the unit circle.
Rational spectral_moment(long k, const Rational& d);

/// Formal combination of diagrams in NC2(n, m) with coefficients in C.
template <class C>
struct TLVector {
  int upper = 0;
  int lower = 0;
  std::map<PairDiagram, C> terms;

  TLVector() = default;
  TLVector(int n, int m) : upper(n), lower(m) {}
  static TLVector basis(const PairDiagram& p, const C& c = C(1)) {
    TLVector v(p.upper, p.lower);
    v.add(p, c);
    return v;
  }

  void add(const PairDiagram& p, const C& c) {
    auto it = terms.find(p);
    if (it == terms.end()) {
      if (!is_zero_coef(c)) terms.emplace(p, c);
      return;
    }
    it->second += c;
    if (is_zero_coef(it->second)) terms.erase(it);
  }
  TLVector& operator+=(const TLVector& o) {
    for (const auto& [p, c] : o.terms) add(p, c);
    return *this;
  }
  TLVector& operator-=(const TLVector& o) {
    for (const auto& [p, c] : o.terms) add(p, -c);
    return *this;
  }
  TLVector& operator*=(const C& s) {
    if (is_zero_coef(s)) {
      terms.clear();
      return *this;
    }
    for (auto& [p, c] : terms) c *= s;
    return *this;
  }
  friend TLVector operator+(TLVector a, const TLVector& b) { return a += b; }
  friend TLVector operator-(TLVector a, const TLVector& b) { return a -= b; }
  friend TLVector operator*(TLVector a, const C& s) { return a *= s; }
  friend TLVector operator*(const C& s, TLVector a) { return a *= s; }
  friend bool operator==(const TLVector& a, const TLVector& b) {
    return a.upper == b.upper && a.lower == b.lower && a.terms == b.terms;
  }
  bool is_zero() const { return terms.empty(); }

 private:
  static bool is_zero_coef(const C& c) { return c == C(0); }
};

/// x after y with loop value `loop` and sign `kappa` per zigzag.
template <class C>
TLVector<C> compose(const TLVector<C>& x, const TLVector<C>& y, const C& loop, int kappa = 1) {
  if (x.upper != y.lower) throw InvalidInput("TL composition boundary mismatch");
  TLVector<C> r(y.upper, x.lower);
  for (const auto& [p, a] : x.terms)
    for (const auto& [q, b] : y.terms) {
      Composite comp = compose(p, q);
      C c = a * b;
      for (int l = 0; l < comp.loops; ++l) c *= loop;
      if (kappa < 0 && comp.zigzags % 2 != 0) c = -c;
      r.add(comp.diagram, c);
    }
  return r;
}

template <class C>
TLVector<C> tensor(const TLVector<C>& x, const TLVector<C>& y) {
  TLVector<C> r(x.upper + y.upper, x.lower + y.lower);
  for (const auto& [p, a] : x.terms)
    for (const auto& [q, b] : y.terms) r.add(tensor(p, q), a * b);
  return r;
}

/// Reflection with conjugate-linear coefficients supplied by `conj`.
template <class C, class Conj>
TLVector<C> involute(const TLVector<C>& x, Conj conj) {
  TLVector<C> r(x.lower, x.upper);
  for (const auto& [p, a] : x.terms) r.add(involute(p), conj(a));
  return r;
}

}  // namespace qsym::planar
