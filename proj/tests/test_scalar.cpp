#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qsym/scalar/cyclotomic.hpp"
#include "qsym/scalar/poly.hpp"
#include "qsym/scalar/ratfunc.hpp"

using namespace qsym;

namespace {

Poly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) {
    c.emplace_back(d(rng), 1 + (d(rng) + 5) % 3);
    c.back().canonicalize();
  }
  return Poly(c);
}

std::complex<double> root(unsigned n, long k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
}

}  // namespace

TEST_CASE("poly divmod reconstructs the dividend") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Poly a = random_poly(rng, 6), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("xgcd gives a Bezout identity") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    Poly c = random_poly(rng, 2);
    Poly a = random_poly(rng, 3) * c, b = random_poly(rng, 2) * c;
    Poly g, u, v;
    Poly::xgcd(a, b, g, u, v);
    CHECK(u * a + v * b == g);
    CHECK(Poly::divmod(a, g).second.is_zero());
    CHECK(Poly::divmod(b, g).second.is_zero());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == Poly(std::vector<Rational>{-1, 1}));
  CHECK(cyclotomic_poly(3) == Poly(std::vector<Rational>{1, 1, 1}));
  CHECK(cyclotomic_poly(4) == Poly(std::vector<Rational>{1, 0, 1}));
  CHECK(cyclotomic_poly(12) == Poly(std::vector<Rational>{1, 0, -1, 0, 1}));
  // degree equals Euler phi
  for (unsigned n = 1; n <= 30; ++n) {
    int phi = 0;
    for (unsigned k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    CHECK(cyclotomic_poly(n).degree() == phi);
  }
}

TEST_CASE("cyclotomic arithmetic agrees with complex evaluation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 11);
  for (int t = 0; t < 200; ++t) {
    unsigned n1 = (t % 2) ? 3 : 4, n2 = (t % 3) ? 6 : 4;
    Cyclotomic a = Cyclotomic(coef(rng)) * Cyclotomic::zeta(n1, ex(rng)) + Cyclotomic(coef(rng));
    Cyclotomic b = Cyclotomic(coef(rng)) * Cyclotomic::zeta(n2, ex(rng)) + Cyclotomic(1 + (t % 5));
    auto za = a.to_complex(), zb = b.to_complex();
    CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-12);
    CHECK(std::abs((a * b).to_complex() - (za * zb)) < 1e-12);
    CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-12);
    if (!b.is_zero()) {
      CHECK(std::abs((a / b).to_complex() - (za / zb)) < 1e-10);
      CHECK(b * b.inverse() == Cyclotomic(1));
    }
  }
}

TEST_CASE("roots of unity relations") {
  Cyclotomic w = Cyclotomic::zeta(3);
  CHECK(w * w + w + Cyclotomic(1) == Cyclotomic(0));
  CHECK(w * w * w == Cyclotomic(1));
  CHECK(w.conj() == w * w);
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  // zeta_6 = -zeta_3^2
  CHECK(Cyclotomic::zeta(6) == -(w * w));
  CHECK(std::abs(Cyclotomic::zeta(12, 5).to_complex() - root(12, 5)) < 1e-14);
}

TEST_CASE("cyclotomic parser") {
  Cyclotomic w = Cyclotomic::zeta(3);
  CHECK(Cyclotomic::parse("1", 3) == Cyclotomic(1));
  CHECK(Cyclotomic::parse("w", 3) == w);
  CHECK(Cyclotomic::parse("-1-w", 3) == w * w);
  CHECK(Cyclotomic::parse("w^2", 3) == w * w);
  CHECK(Cyclotomic::parse("1/2 + 3/2*w", 3) == Cyclotomic(Rational(1, 2)) + Cyclotomic(Rational(3, 2)) * w);
  CHECK(Cyclotomic::parse("w^-1", 3) == w * w);
}

TEST_CASE("rational functions normalize") {
  RatFunc r = RatFunc::r();
  RatFunc d = RatFunc::delta();
  CHECK(d == r * r);
  CHECK((d / r) == r);
  RatFunc x = (d - RatFunc(1)) / (r - RatFunc(1));
  CHECK(x == r + RatFunc(1));
  CHECK(x.den() == Poly(1));
  CHECK((RatFunc(1) / r) * r == RatFunc(1));
  CHECK(std::abs((RatFunc(1) / r).eval_delta(4.0) - 0.5) < 1e-15);
  CHECK((d - d).is_zero());
}
