#include "qsym/tlj/tl.hpp"

#include <cmath>

#include "qsym/error.hpp"
#include "qsym/linalg/span.hpp"

namespace qsym::tlj {

namespace {

TLVec empty_vec() { return TLVec::basis(planar::PairDiagram(0, 0, {})); }

TLVec identity_vec(int n) { return TLVec::basis(planar::identity(n)); }

}  // namespace

void TLParams::validate() const {
  if (sgn != 1 && sgn != -1) throw InvalidInput("sgn must be +1 or -1");
  if (delta && *delta < 2) throw InvalidInput("delta must be at least 2 (got " + delta->get_str() + ")");
}

RatFunc qdim(int n) {
  RatFunc a(1), b = RatFunc::delta();
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    RatFunc c = RatFunc::delta() * b - a;
    a = b;
    b = c;
  }
  return b;
}

TLVec jones_wenzl(int n, const TLParams& params) {
  params.validate();
  if (n < 0) throw InvalidInput("negative strand count");
  if (n == 0) return empty_vec();
  const RatFunc d = RatFunc::delta();
  TLVec jw = identity_vec(1);
  for (int k = 1; k < n; ++k) {
    // JW_{k+1} = X - qdim(k-1)/qdim(k) X e_k X,  X = JW_k (x) 1
    const RatFunc denom = qdim(k);
    if (params.delta) {
      const double r0 = std::sqrt(params.delta->get_d());
      if (std::abs(denom.eval_r(r0)) < 1e-12) throw InvalidInput("quantum integer vanishes at this delta");
    }
    TLVec x = planar::tensor(jw, identity_vec(1));
    TLVec e = planar::tensor(identity_vec(k - 1),
                             planar::compose(TLVec::basis(planar::cup()), TLVec::basis(planar::cap()), d, params.kappa()));
    TLVec xex = planar::compose(x, planar::compose(e, x, d, params.kappa()), d, params.kappa());
    jw = x - xex * (qdim(k - 1) / denom);
  }
  return jw;
}

TLCategory::TLCategory(TLParams params, Label max_label)
    : params_(std::move(params)), max_(max_label), cache_(std::make_unique<Cache>()) {
  params_.validate();
  for (Label a = 0; a <= max_; ++a) jw_.push_back(jones_wenzl(static_cast<int>(a), params_));
}

int TLCategory::strands(const Word& w) {
  int n = 0;
  for (auto a : w) n += static_cast<int>(a);
  return n;
}

Word TLCategory::norm(const Word& w) {
  Word out;
  for (auto a : w)
    if (a != 0) out.push_back(a);
  return out;
}

const TLVec& TLCategory::jw(Label a) const {
  if (a > max_) throw TruncationError("label v" + std::to_string(a) + " beyond the truncation v" + std::to_string(max_));
  return jw_[a];
}

TLCategory::Mor TLCategory::id(const Word& w0) const {
  Word w = norm(w0);
  TLVec v = empty_vec();
  for (auto a : w) v = planar::tensor(v, jw(a));
  return {w, w, std::move(v)};
}

TLCategory::Mor TLCategory::zero(const Word& cod, const Word& dom) const {
  return {norm(cod), norm(dom), TLVec(strands(dom), strands(cod))};
}

TLCategory::Mor TLCategory::compose(const Mor& f, const Mor& g) const {
  if (f.dom != g.cod) throw InvalidInput("compose: domain/codomain mismatch");
  return {f.cod, g.dom, planar::compose(f.v, g.v, RatFunc::delta(), params_.kappa())};
}

TLCategory::Mor TLCategory::tensor(const Mor& f, const Mor& g) const {
  Word cod = f.cod, dom = f.dom;
  cod.insert(cod.end(), g.cod.begin(), g.cod.end());
  dom.insert(dom.end(), g.dom.begin(), g.dom.end());
  return {cod, dom, planar::tensor(f.v, g.v)};
}

TLCategory::Mor TLCategory::adjoint(const Mor& f) const {
  return {f.dom, f.cod, planar::involute(f.v, [](const RatFunc& c) { return c; })};
}

TLCategory::Mor TLCategory::add(const Mor& f, const Mor& g) const {
  if (f.cod != g.cod || f.dom != g.dom) throw InvalidInput("add: shape mismatch");
  return {f.cod, f.dom, f.v + g.v};
}

TLCategory::Mor TLCategory::scale(const Mor& f, const RatFunc& c) const { return {f.cod, f.dom, f.v * c}; }

TLCategory::Mor TLCategory::project(const Word& cod, const Word& dom, const TLVec& v) const {
  Mor raw{norm(cod), norm(dom), v};
  return compose(id(cod), compose(raw, id(dom)));
}

TLCategory::Mor TLCategory::cup() const { return project({1, 1}, {}, TLVec::basis(planar::cup())); }

TLCategory::Mor TLCategory::s(Label a) const {
  return project({a, a}, {}, TLVec::basis(planar::nested_cups(static_cast<int>(a))));
}

TLCategory::Mor TLCategory::t(Label a) const {
  Mor m = s(a);
  if (a % 2 == 1 && params_.kappa() < 0) m.v *= RatFunc(-1);
  return m;
}

TLCategory::Mor TLCategory::s_word(const Word& w) const {
  // s_{xy} = (1_x (x) s_y (x) 1_xbar) s_x
  Word cod = w;
  cod.insert(cod.end(), w.rbegin(), w.rend());
  return project(cod, {}, TLVec::basis(planar::nested_cups(strands(w))));
}

RatFunc TLCategory::trace(const Mor& f) const {
  if (f.cod != f.dom) throw InvalidInput("trace of a non-endomorphism");
  Word bar(f.cod.rbegin(), f.cod.rend());
  Mor sw = s_word(f.cod);
  Mor closed = compose(adjoint(sw), compose(tensor(f, id(bar)), sw));
  auto it = closed.v.terms.find(planar::PairDiagram(0, 0, {}));
  return it == closed.v.terms.end() ? RatFunc(0) : it->second;
}

std::vector<TLCategory::Mor> TLCategory::hom_basis(const Word& cod0, const Word& dom0) const {
  const Word cod = norm(cod0), dom = norm(dom0);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->hom.find({cod, dom});
    if (it != cache_->hom.end()) return it->second;
  }
  const auto diagrams = planar::enumerate_nc2(strands(dom), strands(cod));
  std::vector<Mor> basis;
  SpanBuilder<RatFunc> span(0.0);
  for (const auto& p : diagrams) {
    Mor m = project(cod, dom, TLVec::basis(p));
    std::vector<RatFunc> coords;
    coords.reserve(diagrams.size());
    for (const auto& q : diagrams) {
      auto it = m.v.terms.find(q);
      coords.push_back(it == m.v.terms.end() ? RatFunc(0) : it->second);
    }
    if (span.add(coords)) basis.push_back(std::move(m));
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->hom.emplace(std::make_pair(cod, dom), basis);
  return basis;
}

}  // namespace qsym::tlj
