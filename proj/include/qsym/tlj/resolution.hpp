#pragma once

#include <array>
#include <string>

#include "qsym/tlj/tl.hpp"
#include "qsym/tube/tube.hpp"

namespace qsym::tlj {

using TLTube = tube::Tube<TLCategory>;

/// V = sum over i, j in {0, 2} of the tube element of (w_i (x) 1)(1 (x) w_j^*) in (v_i v_1, v_1 v_j),
/// with w_0 = cap / r and w_2 = JW_2 as maps v_1 v_1 -> v_i.
TLTube::Element build_V(const TLTube& t);
/// Pieces of V before embedding, for inspection.
TLCategory::Mor build_V_piece(const TLCategory& cat, Label i, Label j);

struct ResolutionReport {
  TLParams params;
  bool unitary = false;         // V V# = V# V = p0 + p2
  bool p0vv = false;            // p0 V V = p0
  RatFunc counit_v;             // expected -sgn
  bool counit_ok = false;
  bool d1d2_zero = false;       // p0 (V + sgn)(V - sgn) = 0
  bool d2d3_zero = false;       // (V - sgn)(V + sgn) p0 = 0
  bool augmentation_ok = false; // counit(p0 (V + sgn) p0) = 0
  std::array<int, 4> homology{};
  /// counit(V) evaluated at the numeric delta, when one is set
  double counit_numeric = 0.0;

  bool ok() const;
};

/// Builds V for the given parameters and verifies the complex
/// 0 -> A p0 -> A(p0+p2) -> A(p0+p2) -> A p0 -> C with right multiplications
/// by p0(V+sgn), V-sgn, (V+sgn)p0 and the counit.
ResolutionReport check_resolution(const TLParams& params);

/// Homology of the complex after applying the counit: dims of H_0..H_3.
std::array<int, 4> trivial_homology(const TLTube& t, const TLTube::Element& v, int sgn);

}  // namespace qsym::tlj
