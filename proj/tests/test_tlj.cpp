#include <cmath>

#include "doctest.h"
#include "qsym/error.hpp"
#include "qsym/tlj/resolution.hpp"

using namespace qsym;
using namespace qsym::tlj;

namespace {

TLVec e_at(int n, int k, const TLParams& p) {
  TLVec left = TLVec::basis(planar::identity(k - 1));
  TLVec e = planar::compose(TLVec::basis(planar::cup()), TLVec::basis(planar::cap()), RatFunc::delta(), p.kappa());
  TLVec right = TLVec::basis(planar::identity(n - k - 1));
  return planar::tensor(planar::tensor(left, e), right);
}

}  // namespace

TEST_CASE("quantum dimensions follow the Chebyshev recursion") {
  const RatFunc d = RatFunc::delta();
  CHECK(qdim(0) == RatFunc(1));
  CHECK(qdim(1) == d);
  CHECK(qdim(2) == d * d - RatFunc(1));
  CHECK(qdim(3) == d * d * d - RatFunc(2) * d);
  for (int n = 1; n < 8; ++n) CHECK(qdim(n + 1) == d * qdim(n) - qdim(n - 1));
  CHECK(qdim(2).eval_delta(3.0) == doctest::Approx(8.0));
}

TEST_CASE("Jones-Wenzl projections are idempotent and kill caps") {
  for (int sgn : {1, -1}) {
    TLParams p{sgn, {}};
    const RatFunc d = RatFunc::delta();
    CHECK(jones_wenzl(1, p) == TLVec::basis(planar::identity(1)));
    TLVec jw2 = TLVec::basis(planar::identity(2)) - e_at(2, 1, p) * (RatFunc(1) / d);
    CHECK(jones_wenzl(2, p) == jw2);
    for (int n = 2; n <= 6; ++n) {
      TLVec jw = jones_wenzl(n, p);
      CHECK(planar::compose(jw, jw, d, p.kappa()) == jw);
      for (int k = 1; k < n; ++k) {
        CHECK(planar::compose(e_at(n, k, p), jw, d, p.kappa()).is_zero());
        CHECK(planar::compose(jw, e_at(n, k, p), d, p.kappa()).is_zero());
      }
    }
  }
}

TEST_CASE("the category has the expected traces and Hom dimensions") {
  for (int sgn : {1, -1}) {
    TLCategory cat(TLParams{sgn, {}});
    for (Label a = 0; a <= 2; ++a) CHECK(cat.trace(cat.id({a})) == qdim(static_cast<int>(a)));
    CHECK(cat.hom_basis({1, 1}, {}).size() == 1);
    CHECK(cat.hom_basis({1, 1}, {2}).size() == 1);
    CHECK(cat.hom_basis({1, 1}, {1, 1}).size() == 2);
    CHECK(cat.hom_basis({2, 1}, {1, 2}).size() == 2);
    CHECK(cat.hom_basis({2}, {1}).empty());
    // conjugate equations
    for (Label a = 1; a <= 2; ++a) {
      auto zig = cat.compose(cat.tensor(cat.adjoint(cat.t(a)), cat.id({a})), cat.tensor(cat.id({a}), cat.s(a)));
      CHECK(zig.v == cat.id({a}).v);
    }
    CHECK_THROWS_AS(cat.jw(3), TruncationError);
  }
}

TEST_CASE("every piece of V is nonzero") {
  TLCategory cat(TLParams{-1, {}});
  for (Label i : {0, 2})
    for (Label j : {0, 2}) CHECK_FALSE(cat.is_zero(build_V_piece(cat, i, j)));
}

TEST_CASE("the resolution checks pass for both signs") {
  for (int sgn : {1, -1}) {
    CAPTURE(sgn);
    auto rep = check_resolution(TLParams{sgn, {}});
    CHECK(rep.unitary);
    CHECK(rep.p0vv);
    CHECK(rep.counit_v == RatFunc(-sgn));
    CHECK(rep.d1d2_zero);
    CHECK(rep.d2d3_zero);
    CHECK(rep.augmentation_ok);
    CHECK(rep.homology == std::array<int, 4>{1, 0, 0, 1});
    CHECK(rep.ok());
  }
}

TEST_CASE("numeric delta is evaluated and out-of-range parameters are rejected") {
  auto rep = check_resolution(TLParams{-1, Rational(3)});
  CHECK(rep.ok());
  CHECK(rep.counit_numeric == doctest::Approx(1.0));
  CHECK_THROWS_AS(check_resolution(TLParams{-1, Rational(3) / Rational(2)}), InvalidInput);
  CHECK_THROWS_AS(check_resolution(TLParams{0, {}}), InvalidInput);
  CHECK_NOTHROW(TLParams{1, Rational(2)}.validate());
}
