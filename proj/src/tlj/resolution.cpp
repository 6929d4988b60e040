#include "qsym/tlj/resolution.hpp"

#include <cmath>

namespace qsym::tlj {

namespace {

using Element = TLTube::Element;

TLCategory::Mor w(const TLCategory& cat, Label i) {
  if (i == 0) return cat.scale(cat.adjoint(cat.cup()), RatFunc(1) / RatFunc::r());
  if (i == 2) return cat.project({2}, {1, 1}, cat.jw(2));
  throw InvalidInput("w_i is defined for i in {0, 2}");
}

Element shifted(const TLTube& t, const Element& v, int sign) {
  const Element p = TLTube::add(t.p(0), t.p(2));
  return TLTube::add(v, TLTube::scale(p, RatFunc(sign)));
}

}  // namespace

TLCategory::Mor build_V_piece(const TLCategory& cat, Label i, Label j) {
  auto left = cat.tensor(w(cat, i), cat.id({1}));
  auto right = cat.tensor(cat.id({1}), cat.adjoint(w(cat, j)));
  return cat.compose(left, right);
}

Element build_V(const TLTube& t) {
  Element v;
  for (Label i : {0, 2})
    for (Label j : {0, 2}) v = TLTube::add(v, t.embed(build_V_piece(t.category(), i, j), i, {1}, j));
  return v;
}

std::array<int, 4> trivial_homology(const TLTube& t, const Element& v, int sgn) {
  const Element p0 = t.p(0);
  const Element plus = shifted(t, v, sgn), minus = shifted(t, v, -sgn);
  // all four terms are one-dimensional after the counit
  const RatFunc d1 = t.counit(t.mul(p0, plus));
  const RatFunc d2 = t.counit(minus);
  const RatFunc d3 = t.counit(t.mul(plus, p0));
  const int r1 = d1.is_zero() ? 0 : 1, r2 = d2.is_zero() ? 0 : 1, r3 = d3.is_zero() ? 0 : 1;
  return {1 - r1, 1 - r1 - r2, 1 - r2 - r3, 1 - r3};
}

bool ResolutionReport::ok() const {
  return unitary && p0vv && counit_ok && d1d2_zero && d2d3_zero && augmentation_ok &&
         homology == std::array<int, 4>{1, 0, 0, 1};
}

ResolutionReport check_resolution(const TLParams& params) {
  params.validate();
  ResolutionReport rep;
  rep.params = params;
  auto cat = std::make_shared<const TLCategory>(params, 2);
  TLTube t(cat);
  const Element v = build_V(t);
  const Element vs = t.sharp(v);
  const Element p0 = t.p(0);
  const Element p02 = TLTube::add(p0, t.p(2));
  rep.unitary = t.is_zero(TLTube::sub(t.mul(v, vs), p02)) && t.is_zero(TLTube::sub(t.mul(vs, v), p02));
  rep.p0vv = t.is_zero(TLTube::sub(t.mul(p0, t.mul(v, v)), p0));
  rep.counit_v = t.counit(v);
  rep.counit_ok = rep.counit_v == RatFunc(-params.sgn);
  const Element plus = shifted(t, v, params.sgn), minus = shifted(t, v, -params.sgn);
  rep.d1d2_zero = t.is_zero(t.mul(p0, t.mul(plus, minus)));
  rep.d2d3_zero = t.is_zero(t.mul(minus, t.mul(plus, p0)));
  rep.augmentation_ok = t.counit(t.mul(p0, t.mul(plus, p0))).is_zero();
  rep.homology = trivial_homology(t, v, params.sgn);
  if (params.delta) rep.counit_numeric = rep.counit_v.eval_r(std::sqrt(params.delta->get_d()));
  return rep;
}

}  // namespace qsym::tlj

template class qsym::tube::Tube<qsym::tlj::TLCategory>;
