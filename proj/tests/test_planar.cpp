#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "qsym/planar/diagram.hpp"

using namespace qsym;
using namespace qsym::planar;

namespace {

// Brute force: every perfect matching of 1..n, kept if no two pairs interleave linearly.
std::size_t brute_nc_count(int n) {
  std::size_t count = 0;
  std::vector<int> part(n + 1, 0);
  std::function<void()> rec = [&] {
    int first = 0;
    for (int i = 1; i <= n; ++i)
      if (!part[i]) {
        first = i;
        break;
      }
    if (!first) {
      for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c) {
          int b = part[a], d = part[c];
          if (a < c && c < b && b < d) return;
        }
      ++count;
      return;
    }
    for (int j = first + 1; j <= n; ++j) {
      if (part[j]) continue;
      part[first] = j;
      part[j] = first;
      rec();
      part[first] = part[j] = 0;
    }
  };
  rec();
  return count;
}

PairDiagram random_diagram(std::mt19937& rng, int n, int m) {
  auto all = enumerate_nc2(n, m);
  std::uniform_int_distribution<std::size_t> u(0, all.size() - 1);
  return all[u(rng)];
}

}  // namespace

TEST_CASE("enumeration counts match brute force and Catalan") {
  CHECK(enumerate_nc2(2).size() == 1);
  CHECK(enumerate_nc2(4).size() == 2);
  CHECK(enumerate_nc2(8).size() == 14);
  CHECK(enumerate_nc2(5).empty());
  for (int k = 0; k <= 5; ++k) CHECK(enumerate_nc2(2 * k).size() == brute_nc_count(2 * k));
  for (int k = 0; k <= 8; ++k) CHECK(enumerate_nc2(2 * k).size() == static_cast<std::size_t>(catalan(k)));
}

TEST_CASE("enumerated diagrams are distinct and valid") {
  auto all = enumerate_nc2(3, 5);
  std::set<PairDiagram> seen(all.begin(), all.end());
  CHECK(seen.size() == all.size());
  CHECK(all.size() == static_cast<std::size_t>(catalan(4)));
  for (const auto& d : all) CHECK_NOTHROW(PairDiagram(d.upper, d.lower, d.pairs));
}

TEST_CASE("crossing matchings are rejected") {
  CHECK_THROWS_AS(PairDiagram(0, 4, {{1, 3}, {2, 4}}), InvalidInput);
  CHECK_THROWS_AS(PairDiagram(0, 3, {{1, 2}}), InvalidInput);
  // identity on two strands is planar in the rectangle
  CHECK_NOTHROW(PairDiagram(2, 2, {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(PairDiagram(2, 2, {{1, 4}, {2, 3}}), InvalidInput);
}

TEST_CASE("basic compositions") {
  auto c = compose(cap(), cup());
  CHECK(c.loops == 1);
  CHECK(c.diagram.points() == 0);
  CHECK(c.zigzags == 0);
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto p = random_diagram(rng, 3, 5);
    auto l = compose(p, identity(3));
    auto r = compose(identity(5), p);
    CHECK(l.diagram == p);
    CHECK(r.diagram == p);
    CHECK(l.loops + r.loops + l.zigzags + r.zigzags == 0);
  }
  // snake: (cap x 1)(1 x cup) straightens one zigzag
  auto snake = compose(tensor(cap(), identity(1)), tensor(identity(1), cup()));
  CHECK(snake.diagram == identity(1));
  CHECK(snake.zigzags == 1);
  CHECK_THROWS_AS(compose(cap(), identity(3)), InvalidInput);
}

TEST_CASE("tensor and involution") {
  std::mt19937 rng(2);
  PairDiagram empty(0, 0, {});
  for (int t = 0; t < 20; ++t) {
    auto p = random_diagram(rng, 2, 4);
    CHECK(involute(involute(p)) == p);
    CHECK(tensor(p, empty) == p);
    CHECK(tensor(empty, p) == p);
  }
  CHECK(involute(cup()) == cap());
}

TEST_CASE("composition is associative with loop and zigzag bookkeeping") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> sz(0, 3);
  for (int t = 0; t < 300; ++t) {
    int a = 2 * sz(rng), b = 2 * sz(rng), c = sz(rng) * 2, d = 2 * sz(rng);
    if (t % 2) ++a, ++b, ++c, ++d;
    auto r = random_diagram(rng, a, b);
    auto q = random_diagram(rng, b, c);
    auto p = random_diagram(rng, c, d);
    auto qr = compose(q, r);
    auto left = compose(p, qr.diagram);
    auto pq = compose(p, q);
    auto right = compose(pq.diagram, r);
    CHECK(left.diagram == right.diagram);
    CHECK(left.loops + qr.loops == right.loops + pq.loops);
    CHECK(left.zigzags + qr.zigzags == right.zigzags + pq.zigzags);
  }
}

TEST_CASE("rotate2 examples") {
  CHECK(rotate2(PairDiagram(0, 2, {{1, 2}})) == PairDiagram(0, 2, {{1, 2}}));
  PairDiagram nested(0, 4, {{1, 4}, {2, 3}});
  PairDiagram side(0, 4, {{1, 2}, {3, 4}});
  CHECK(rotate2(nested) == nested);
  CHECK(rotate2(side) == side);
  auto circ = nc2_circ(2);
  REQUIRE(circ.size() == 1);
  CHECK(circ[0] == nested);
}

TEST_CASE("rotate2 is a bijection preserving the circ filter") {
  for (int k = 1; k <= 8; ++k) {
    auto all = enumerate_nc2(2 * k);
    std::set<PairDiagram> img;
    for (const auto& p : all) {
      auto r = rotate2(p);
      CHECK_NOTHROW(PairDiagram(r.upper, r.lower, r.pairs));
      CHECK(rotate2_inverse(r) == p);
      img.insert(r);
    }
    CHECK(img.size() == all.size());
    auto circ = nc2_circ(k);
    std::set<PairDiagram> cs(circ.begin(), circ.end());
    for (const auto& p : circ) CHECK(cs.count(rotate2(p)) == 1);
  }
}

TEST_CASE("riordan numbers") {
  CHECK(riordan(0) == 1);
  CHECK(riordan(1) == 0);
  CHECK(riordan(3) == 1);
  CHECK(riordan(6) == 15);
  CHECK(nc2_circ(1).empty());
  CHECK(nc2_circ(4).size() == 3);
  for (int k = 0; k <= 10; ++k) CHECK(static_cast<std::int64_t>(nc2_circ(k).size()) == riordan(k));
}

TEST_CASE("tl moments") {
  CHECK(tl_moment(0) == Poly(std::vector<Rational>{-1, 0, 1}));
  CHECK(tl_moment(1) == Poly(0));
  CHECK(tl_moment(2) == Poly(1));
  CHECK(tl_moment(7) == Poly(1));
  // the fixed point at k=7 is the outer pair with adjacent pairs inside
  int hits = 0;
  for (const auto& p : nc2_circ(7))
    if (rotate2(p) == p) {
      ++hits;
      CHECK(std::find(p.pairs.begin(), p.pairs.end(), std::make_pair(1, 14)) != p.pairs.end());
    }
  CHECK(hits == 1);
}

TEST_CASE("zeta on basis equals rotate2 with trivial coefficient") {
  CHECK(zeta_on_basis(cup()).diagram == cup());
  for (int k = 1; k <= 6; ++k)
    for (const auto& p : enumerate_nc2(2 * k)) {
      auto z = zeta_on_basis(p);
      CHECK(z.diagram == rotate2(p));
      CHECK(z.loops == 0);
      CHECK(z.zigzags % 2 == 0);
    }
  PairDiagram nested3 = nested_cups(3);
  CHECK(zeta_on_basis(nested3).diagram == PairDiagram(0, 6, {{1, 4}, {2, 3}, {5, 6}}));
}

TEST_CASE("spectral moments agree with diagram moments and quadrature") {
  for (Rational d : {Rational(2), Rational(3), Rational(7, 2)}) {
    for (int k = 0; k <= 8; ++k) CHECK(spectral_moment(k, d) == tl_moment(k).eval(d));
    // trapezoid rule on the circle is exact for trigonometric polynomials of low degree
    const int N = 64;
    double dd = d.get_d();
    for (int k = -5; k <= 5; ++k) {
      std::complex<double> acc = 1.0;
      for (int j = 0; j < N; ++j) {
        double th = 2 * std::numbers::pi * j / N;
        acc += std::polar(1.0, k * th) * (dd * dd - 2 - 2 * std::cos(th)) / double(N);
      }
      CHECK(std::abs(acc - spectral_moment(k, d).get_d()) < 1e-12);
    }
  }
}

TEST_CASE("cesaro averages") {
  CHECK(cesaro_tau_q(1, 3) == 8);
  CHECK(cesaro_tau_q(100, 3) == Rational(53, 50));
  for (int n = 1; n <= 9; ++n) CHECK(cesaro_tau_q(n, 3) == cesaro_tau_q_enumerated(n, 3));
  for (long n = 1; n <= 10000; n += 37) CHECK(abs(cesaro_tau_q(n, 3) - 1) <= Rational(8) / Rational(n));
}

TEST_CASE("text format round trip") {
  PairDiagram p(0, 6, {{1, 6}, {2, 3}, {4, 5}});
  CHECK(p.str() == "NC2(6): (1 6)(2 3)(4 5)");
  CHECK(PairDiagram::parse(p.str()) == p);
  auto q = identity(2);
  CHECK(PairDiagram::parse(q.str()) == q);
  CHECK_THROWS_AS(PairDiagram::parse("NC2(4): (1 3)(2 4)"), InvalidInput);
}

TEST_CASE("TL vectors: Jones-Wenzl 2 is idempotent over Q[d]") {
  using V = TLVector<Poly>;
  // work with d * JW2 = d*1 - e to stay polynomial
  auto e = V::basis(compose(cup(), cap()).diagram);
  auto one = V::basis(identity(2));
  Poly d = Poly::x();
  auto dj = one * d - e;
  auto sq = compose(dj, dj, d);
  CHECK(sq == dj * d);
}
