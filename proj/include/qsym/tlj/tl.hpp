#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qsym/planar/diagram.hpp"
#include "qsym/scalar/ratfunc.hpp"

namespace qsym::tlj {

using Label = std::size_t;
using Word = std::vector<Label>;
using TLVec = planar::TLVector<RatFunc>;

/// sgn is the sign of q; delta, when set, is the numeric value used in reports.
struct TLParams {
  int sgn = -1;
  std::optional<Rational> delta;

  /// Throws InvalidInput unless sgn = +-1 and delta >= 2.
  void validate() const;
  /// Sign picked up by each straightened zigzag.
  int kappa() const { return -sgn; }
  std::string delta_str() const { return delta ? delta->get_str() : "symbolic"; }
};

/// Quantum dimensions [n+1] as polynomials in r, with d = r^2: qdim(0) = 1, qdim(1) = d.
RatFunc qdim(int n);

/// Jones-Wenzl projection on n strands by the Wenzl recursion.
TLVec jones_wenzl(int n, const TLParams& params);

/// Temperley-Lieb-Jones category on the simple objects v_0..v_max.
///
/// v_n is the image of the Jones-Wenzl projection on n strands. Coefficients live in Q(r) with
/// loop value d = r^2; every straightened zigzag contributes kappa = -sgn. s_n is the nested cup
/// and t_n = kappa^n s_n.
class TLCategory {
 public:
  using Scalar = RatFunc;
  struct Mor {
    Word cod, dom;
    TLVec v;
  };

  TLCategory(TLParams params, Label max_label = 2);

  const TLParams& params() const { return params_; }
  double tol() const { return 0.0; }
  std::size_t rank() const { return max_ + 1; }
  Label dual(Label a) const { return a; }
  RatFunc dim(Label a) const { return qdim(static_cast<int>(a)); }
  std::string name(Label a) const { return "v" + std::to_string(a); }
  static int strands(const Word& w);

  const TLVec& jw(Label a) const;
  Mor id(const Word& w) const;
  Mor zero(const Word& cod, const Word& dom) const;
  /// f after g
  Mor compose(const Mor& f, const Mor& g) const;
  Mor tensor(const Mor& f, const Mor& g) const;
  Mor adjoint(const Mor& f) const;
  Mor add(const Mor& f, const Mor& g) const;
  Mor scale(const Mor& f, const RatFunc& c) const;
  bool is_zero(const Mor& f) const { return f.v.is_zero(); }
  /// s_w^* (T (x) 1) s_w
  RatFunc trace(const Mor& f) const;
  /// Basis of (cod, dom) = Hom(dom, cod): projected diagrams, independent ones in enumeration order.
  std::vector<Mor> hom_basis(const Word& cod, const Word& dom) const;
  Mor s(Label a) const;
  Mor t(Label a) const;
  /// Sandwiches a raw diagram combination between the projections of cod and dom.
  Mor project(const Word& cod, const Word& dom, const TLVec& v) const;
  Mor cup() const;

 private:
  static Word norm(const Word& w);
  Mor s_word(const Word& w) const;

  TLParams params_;
  Label max_;
  std::vector<TLVec> jw_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<Word, Word>, std::vector<Mor>> hom;
  };
  std::unique_ptr<Cache> cache_;
};

}  // namespace qsym::tlj
