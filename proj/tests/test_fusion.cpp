#include <random>

#include "doctest.h"
#include "qsym/error.hpp"
#include "qsym/fusion/ring.hpp"
#include "qsym/planar/diagram.hpp"

using namespace qsym;
using namespace qsym::fusion;

namespace {

Multiset ms(std::initializer_list<std::pair<Label, unsigned long>> xs) { return Multiset(xs); }

SubcategorySpec sub_of(const FusionRing& r, std::initializer_list<const char*> names) {
  SubcategorySpec s;
  for (auto n : names) s.members.insert(r.find(n));
  return s;
}

// Clebsch-Gordan oracle: multiplicity of spin 0 in 1^k by explicit weight counting.
unsigned long so3_trivial_mult(int k) {
  // character of spin 1 on weights -1,0,1; mult of spin 0 = m(0) - m(1)
  std::map<int, unsigned long> w{{0, 1}};
  for (int i = 0; i < k; ++i) {
    std::map<int, unsigned long> nw;
    for (auto [x, c] : w)
      for (int s = -1; s <= 1; ++s) nw[x + s] += c;
    w = nw;
  }
  return w[0] - w[1];
}

Multiset product(const FusionRing& r, const Multiset& x, Label b) {
  std::map<Label, unsigned long> acc;
  for (auto [a, n] : x)
    for (auto [c, m] : r.fuse(a, b)) acc[c] += n * m;
  return Multiset(acc.begin(), acc.end());
}

Multiset product(const FusionRing& r, Label a, const Multiset& y) {
  std::map<Label, unsigned long> acc;
  for (auto [b, n] : y)
    for (auto [c, m] : r.fuse(a, b)) acc[c] += n * m;
  return Multiset(acc.begin(), acc.end());
}

}  // namespace

TEST_CASE("pointed rings") {
  auto z2 = pointed_ring(grp::FiniteGroup::cyclic(2));
  CHECK(z2->size() == 2);
  CHECK(z2->fuse(1, 1) == ms({{0, 1}}));
  auto z4 = pointed_ring(grp::FiniteGroup::cyclic(4));
  CHECK(z4->conj(z4->find("g")) == z4->find("g^3"));
  auto s3g = grp::FiniteGroup::symmetric3();
  auto s3 = pointed_ring(s3g);
  for (Label a : s3->labels())
    if (s3g.element_order(a) == 2) CHECK(s3->N(a, a, 0) == 1);
  CHECK(check_axioms(*s3, s3->labels()).empty());
  CHECK_THROWS_AS(grp::FiniteGroup("bad", {{0, 1}, {1, 1}}), InvalidInput);
}

TEST_CASE("A4 representation ring") {
  auto a4 = rep_ring(builtin_char_table("a4"), "Rep(A4)");
  Label e = a4->find("eps"), w1 = a4->find("w1"), w2 = a4->find("w2"), pi = a4->find("pi");
  CHECK(e == 0);
  CHECK(a4->fuse(pi, pi) == ms({{e, 1}, {w1, 1}, {w2, 1}, {pi, 2}}));
  CHECK(a4->fuse(w1, w1) == ms({{w2, 1}}));
  CHECK(a4->conj(w1) == w2);
  CHECK(a4->dim(pi) == 3);
  for (Label a : a4->labels()) CHECK(a4->fuse(a, e) == ms({{a, 1}}));
  CHECK(check_axioms(*a4, a4->labels()).empty());
}

TEST_CASE("character tables: orthonormality is enforced") {
  auto t = builtin_char_table("s3");
  t.chars[2][2] = Cyclotomic(Rational(0));
  CHECK_THROWS_AS(rep_ring(t), InvalidInput);
  for (unsigned n : {2u, 5u, 8u}) {
    auto r = rep_ring(builtin_char_table("z" + std::to_string(n)));
    CHECK(r->size() == n);
    CHECK(check_axioms(*r, r->labels()).empty());
  }
  auto s3 = rep_ring(builtin_char_table("s3"));
  Label rho = s3->find("rho");
  CHECK(s3->fuse(rho, rho) == ms({{0, 1}, {s3->find("sgn"), 1}, {rho, 1}}));
}

TEST_CASE("ring JSON round trip") {
  auto a4 = rep_ring(builtin_char_table("a4"), "Rep(A4)");
  auto back = FiniteRing::from_json(a4->to_json());
  for (Label a : a4->labels())
    for (Label b : a4->labels()) CHECK(back.fuse(a, b) == a4->fuse(a, b));
  CHECK_THROWS_AS(FiniteRing::from_json("{\"labels\": 3}"), InvalidInput);
  // dimension axiom violated: 1 x 1 -> 0 with dim 2
  CHECK_THROWS_AS(FiniteRing::from_json(R"({"labels":[{"id":0,"dim":1},{"id":1,"dim":2}],"conj":{"0":0,"1":1},
    "fusion":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]})"),
                  InvalidInput);
}

TEST_CASE("SO(3) ring") {
  SO3Ring so3;
  CHECK(so3.fuse(1, 1) == ms({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(so3.fuse(0, 5) == ms({{5, 1}}));
  CHECK(so3.dim(1) == 3);
  CHECK(mult_in_word(so3, 0, {1, 1}) == 1);
  CHECK(mult_in_word(so3, 0, {1, 1, 1, 1}) == 3);
  CHECK(mult_in_word(so3, 0, {}) == 1);
  for (int k = 0; k <= 10; ++k) {
    std::vector<Label> w(k, 1);
    CHECK(mult_in_word(so3, 0, w) == so3_trivial_mult(k));
    CHECK(static_cast<std::int64_t>(mult_in_word(so3, 0, w)) == planar::riordan(k));
  }
  auto ls = so3.labels(8);
  CHECK(ls.size() == 8);
  CHECK(check_axioms(so3, ls).empty());
  auto idx = index(so3, sub_of(so3, {"0"}));
  CHECK(idx.kind == IndexResult::Kind::Undetermined);
  CHECK(index(so3, SubcategorySpec::all()).value == 1);
}

TEST_CASE("orbits and sub_dim") {
  auto a4 = rep_ring(builtin_char_table("a4"));
  auto sub = sub_of(*a4, {"eps", "w1", "w2"});
  auto o = orbits(*a4, sub);
  REQUIRE(o.blocks.size() == 2);
  CHECK(o.blocks[0] == std::vector<Label>{0, a4->find("w1"), a4->find("w2")});
  CHECK(o.blocks[1] == std::vector<Label>{a4->find("pi")});
  Label pi = a4->find("pi");
  CHECK(sub_dim(*a4, sub, {a4->conj(pi), pi}) == 3);
  CHECK(sub_dim(*a4, sub, {0}) == 1);
  CHECK(sub_dim(*a4, SubcategorySpec::all(), {a4->conj(pi), pi}) == 9);
  CHECK(orbits(*a4, SubcategorySpec::all()).blocks.size() == 1);
  auto z4 = pointed_ring(grp::FiniteGroup::cyclic(4));
  CHECK(orbits(*z4, sub_of(*z4, {"e", "g^2"})).blocks.size() == 2);
  CHECK_THROWS_AS(orbits(*a4, sub_of(*a4, {"eps", "w1"})), InvalidInput);
}

TEST_CASE("index") {
  auto a4 = rep_ring(builtin_char_table("a4"));
  auto sub = sub_of(*a4, {"eps", "w1", "w2"});
  auto r = index(*a4, sub);
  CHECK(r.kind == IndexResult::Kind::Finite);
  CHECK(r.value == 4);
  // global dimension ratio
  Rational dc = 0, d1 = 0;
  for (Label a : a4->labels()) {
    dc += a4->dim(a) * a4->dim(a);
    if (sub.contains(a)) d1 += a4->dim(a) * a4->dim(a);
  }
  CHECK(r.value == dc / d1);
  CHECK(index(*a4, SubcategorySpec::all()).value == 1);
  auto z8 = pointed_ring(grp::FiniteGroup::cyclic(8));
  CHECK(index(*z8, sub_of(*z8, {"e", "g^2", "g^4", "g^6"})).value == 2);
}

TEST_CASE("index multiplicativity") {
  auto z8g = grp::FiniteGroup::cyclic(8);
  auto z8 = pointed_ring(z8g);
  auto c1 = sub_of(*z8, {"e", "g^2", "g^4", "g^6"});
  auto c2 = sub_of(*z8, {"e", "g^4"});
  // C1 as a ring in its own right: Vec(Z/4) with C2 = Vec(Z/2)
  auto z4 = pointed_ring(grp::FiniteGroup::cyclic(4));
  auto c2in1 = sub_of(*z4, {"e", "g^2"});
  CHECK(index(*z8, c2).value == index(*z8, c1).value * index(*z4, c2in1).value);
  CHECK(index(*z8, c2).value == 4);

  auto a4 = rep_ring(builtin_char_table("a4"));
  auto z3sub = sub_of(*a4, {"eps", "w1", "w2"});
  SubcategorySpec triv{{0}, false};
  auto z3 = rep_ring(builtin_char_table("z3"));
  SubcategorySpec triv3{{0}, false};
  CHECK(index(*a4, triv).value == index(*a4, z3sub).value * index(*z3, triv3).value);
  CHECK(index(*a4, triv).value == 12);
}

TEST_CASE("orbit weight is constant on orbits") {
  std::vector<std::pair<std::shared_ptr<FiniteRing>, SubcategorySpec>> cases;
  auto a4 = rep_ring(builtin_char_table("a4"));
  cases.emplace_back(a4, sub_of(*a4, {"eps", "w1", "w2"}));
  cases.emplace_back(a4, SubcategorySpec{{0}, false});
  auto s3 = rep_ring(builtin_char_table("s3"));
  cases.emplace_back(s3, sub_of(*s3, {"eps", "sgn"}));
  auto z8 = pointed_ring(grp::FiniteGroup::cyclic(8));
  cases.emplace_back(z8, sub_of(*z8, {"e", "g^4"}));
  for (auto& [ring, sub] : cases)
    for (const auto& block : orbits(*ring, sub).blocks)
      for (Label b : block) CHECK(orbit_weight(*ring, sub, b) == orbit_weight(*ring, sub, block.front()));
}

TEST_CASE("gradings") {
  auto z4 = pointed_ring(grp::FiniteGroup::cyclic(4));
  Grading parity{grp::FiniteGroup::cyclic(2), [](Label a) { return a % 2; }};
  auto ker = grading_kernel(*z4, parity);
  CHECK(ker.members == std::set<Label>{0, z4->find("g^2")});
  CHECK(index(*z4, ker).value == 2);
  Grading trivial{grp::FiniteGroup::cyclic(1), [](Label) { return std::size_t(0); }};
  auto all = grading_kernel(*z4, trivial);
  CHECK(all.members.size() == 4);
  CHECK(index(*z4, all).value == 1);
  Grading broken{grp::FiniteGroup::cyclic(2), [](Label a) { return std::size_t(a == 1); }};
  CHECK_THROWS_AS(validate_grading(*z4, broken), InvalidInput);

  // A4 over Z/3 by the centre character
  auto a4 = rep_ring(builtin_char_table("a4"));
  Grading z3{grp::FiniteGroup::cyclic(3), [&](Label a) -> std::size_t {
               auto n = a4->name(a);
               return n == "w1" ? 1 : n == "w2" ? 2 : 0;
             }};
  // pi x w1 contains pi, so Xi(pi) would need to equal Xi(pi) + 1
  CHECK_THROWS_AS(validate_grading(*a4, z3), InvalidInput);
}

TEST_CASE("unit radical") {
  auto a4 = rep_ring(builtin_char_table("a4"));
  for (int b = 1; b <= 3; ++b) CHECK(unit_radical(*a4, b).members.size() == 4);
  auto z6 = pointed_ring(grp::FiniteGroup::cyclic(6));
  CHECK(unit_radical(*z6, 4).members == std::set<Label>{0});
  // g g^-1 = e for every element, abelian or not
  auto s3 = pointed_ring(grp::FiniteGroup::symmetric3());
  CHECK(unit_radical(*s3, 4).members == std::set<Label>{0});
  auto rs3 = rep_ring(builtin_char_table("s3"));
  auto n1 = unit_radical(*rs3, 1).members;
  CHECK(n1 == std::set<Label>{0, rs3->find("sgn"), rs3->find("rho")});
  // monotone in the bound
  auto s = rep_ring(builtin_char_table("z5"));
  CHECK(unit_radical(*s, 1).members == unit_radical(*s, 3).members);
}

TEST_CASE("wreath ring: displayed rules") {
  WreathRing w(grp::FiniteGroup::cyclic(2));
  Label g = w.v(1, {1}, 1);
  CHECK(w.fuse(1, g) == ms({{w.v(-1, {1}, 1), 1}}));
  CHECK(w.fuse(g, 1) == ms({{w.v(1, {1}, -1), 1}}));
  auto gg = w.fuse(g, g);
  Label gvg = w.v(1, {1, 1}, 1);
  CHECK(gg == ms({{0, 1}, {1, 1}, {gvg, 1}}));
  Rational total = 0;
  for (auto [c, n] : gg) total += w.dim(c) * Rational(static_cast<long>(n));
  CHECK(total == w.dim(g) * w.dim(g));
  CHECK(w.name(gvg) == "v(+,g v1 g,+)");
  CHECK(w.find("v(+,g v1 g,+)") == gvg);
  CHECK_THROWS_AS(WreathRing(grp::FiniteGroup::cyclic(1)), InvalidInput);

  WreathRing w3(grp::FiniteGroup::cyclic(3));
  Label a = w3.v(1, {1}, -1), b = w3.v(-1, {1}, 1);
  // g.g = g^2 != e
  CHECK(w3.fuse(a, b) == ms({{w3.v(1, {2}, 1), 1}, {w3.v(1, {1, 1}, 1), 1}}));
}

TEST_CASE("wreath ring: associativity and dimensions on random triples") {
  for (std::size_t n : {2u, 3u}) {
    WreathRing w(grp::FiniteGroup::cyclic(n));
    auto ls = w.labels(60);
    std::mt19937 rng(11 + n);
    std::uniform_int_distribution<std::size_t> u(0, ls.size() - 1);
    for (int t = 0; t < 200; ++t) {
      Label a = ls[u(rng)], b = ls[u(rng)], c = ls[u(rng)];
      CHECK(product(w, w.fuse(a, b), c) == product(w, a, w.fuse(b, c)));
      Rational total = 0;
      for (auto [x, m] : w.fuse(a, b)) total += w.dim(x) * Rational(static_cast<long>(m));
      CHECK(total == w.dim(a) * w.dim(b));
    }
  }
}

TEST_CASE("wreath ring: rigidity axioms fail as written") {
  // The displayed rules put v1 + v0 in v(e,g,d) x v(e',g^-1,d') for every sign choice,
  // so the unit appears in products with several partners of the same label.
  WreathRing w(grp::FiniteGroup::cyclic(2));
  Label a = w.v(1, {1}, 1);
  int partners = 0;
  for (int e : {1, -1})
    for (int d : {1, -1}) partners += w.N(a, w.v(e, {1}, d), 0) > 0;
  CHECK(partners == 4);
  CHECK_FALSE(check_axioms(w, w.labels(20)).empty());
}

TEST_CASE("wreath grading by v1-count parity is rejected") {
  WreathRing w(grp::FiniteGroup::cyclic(2));
  Grading g{grp::FiniteGroup::cyclic(2), [&](Label a) -> std::size_t {
              if (a <= 1) return a;
              auto k = w.key(a);
              std::size_t ones = k.word.size() - 1 + (k.eps < 0) + (k.delta < 0);
              return ones % 2;
            }};
  bool rejected = false;
  try {
    validate_grading(w, g, 40);
  } catch (const InvalidInput& e) {
    rejected = std::string(e.what()).find("triple") != std::string::npos;
  }
  CHECK(rejected);
}
