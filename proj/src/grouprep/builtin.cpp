#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "qsym/grouprep/rep.hpp"

namespace qsym::grp {

namespace {

using CMat = Matrix<Cyclotomic>;

UnitaryIrrep<Cyclotomic> one_dim(std::string label, const std::vector<Cyclotomic>& values) {
  UnitaryIrrep<Cyclotomic> r{std::move(label), 1, {}};
  for (const auto& v : values) r.rho.push_back(CMat(1, 1, {v}));
  return r;
}

int parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

BuiltinReps cyclic_reps(unsigned n) {
  BuiltinReps b{FiniteGroup::cyclic(n), {}};
  for (unsigned m = 0; m < n; ++m) {
    std::vector<Cyclotomic> vals;
    for (unsigned k = 0; k < n; ++k) vals.push_back(Cyclotomic::zeta(n, static_cast<long>(m * k)));
    b.irreps.push_back(one_dim(m == 0 ? "eps" : "chi" + std::to_string(m), vals));
  }
  return b;
}

BuiltinReps s3_reps() {
  std::vector<std::vector<int>> elems;
  BuiltinReps b{FiniteGroup::from_permutations("S3", {{1, 2, 0}, {1, 0, 2}}, &elems), {}};
  std::vector<Cyclotomic> triv, sgn;
  for (const auto& p : elems) {
    triv.emplace_back(1);
    sgn.emplace_back(parity(p));
  }
  b.irreps.push_back(one_dim("eps", triv));
  b.irreps.push_back(one_dim("sgn", sgn));
  // permutation action on the plane x+y+z=0 with orthonormal basis f1=(1,-1,0)/sqrt2, f2=(1,1,-2)/sqrt6
  const std::array<std::array<int, 3>, 2> f{{{1, -1, 0}, {1, 1, -2}}};
  const std::array<long, 2> nsq{2, 6};
  const Cyclotomic sqrt3 = Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, -1);
  UnitaryIrrep<Cyclotomic> rho{"rho", 2, {}};
  for (const auto& p : elems) {
    CMat m(2, 2);
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        // <f_a, P f_c> with (P v)[p[i]] = v[i]
        std::array<int, 3> pv{};
        for (int i = 0; i < 3; ++i) pv[p[i]] = f[c][i];
        long dot = 0;
        for (int i = 0; i < 3; ++i) dot += f[a][i] * pv[i];
        if (a == c) m(a, c) = Cyclotomic(Rational(dot) / Rational(nsq[a]));
        else m(a, c) = Cyclotomic(Rational(dot) / Rational(6)) * sqrt3;  // dot / sqrt(12)
      }
    rho.rho.push_back(std::move(m));
  }
  b.irreps.push_back(std::move(rho));
  return b;
}

BuiltinReps a4_reps() {
  std::vector<std::vector<int>> elems;
  BuiltinReps b{FiniteGroup::from_permutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}, &elems), {}};
  auto compose = [](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) r[x] = g[h[x]];
    return r;
  };
  auto in_v4 = [](const std::vector<int>& p) {
    int fixed = 0;
    for (int i = 0; i < 4; ++i) fixed += p[i] == i;
    return fixed == 4 || fixed == 0;
  };
  const std::vector<int> c{1, 2, 0, 3}, cinv{2, 0, 1, 3};
  std::vector<Cyclotomic> triv, w1, w2;
  for (const auto& p : elems) {
    // p lies in c^k V4
    long k = 0;
    std::vector<int> q = p;
    while (!in_v4(q)) {
      q = compose(cinv, q);
      ++k;
    }
    triv.emplace_back(1);
    w1.push_back(Cyclotomic::zeta(3, k));
    w2.push_back(Cyclotomic::zeta(3, -k));
  }
  b.irreps.push_back(one_dim("eps", triv));
  b.irreps.push_back(one_dim("w1", w1));
  b.irreps.push_back(one_dim("w2", w2));
  // rotations of the tetrahedron with vertices v0..v3: R v_i = v_p(i)
  const std::array<std::array<long, 3>, 4> v{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  Matrix<Rational> base(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r) base(r, i) = Rational(v[i][r]);
  Matrix<Rational> base_inv = inverse(base, 0.0);
  UnitaryIrrep<Cyclotomic> pi{"pi", 3, {}};
  for (const auto& p : elems) {
    Matrix<Rational> img(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < 3; ++r) img(r, i) = Rational(v[p[i]][r]);
    Matrix<Rational> rot = img * base_inv;
    CMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Cyclotomic(rot(i, j));
    pi.rho.push_back(std::move(m));
  }
  b.irreps.push_back(std::move(pi));
  return b;
}

}  // namespace

BuiltinReps builtin_reps(const std::string& name) {
  if (name == "s3" || name == "S3") return s3_reps();
  if (name == "a4" || name == "A4") return a4_reps();
  if (name.size() > 1 && (name[0] == 'z' || name[0] == 'Z')) {
    std::string digits = name.substr(name[1] == '/' ? 2 : 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      unsigned n = static_cast<unsigned>(std::stoul(digits));
      if (n >= 1) return cyclic_reps(n);
    }
  }
  throw InvalidInput("unknown built-in group '" + name + "' (expected z<n>, s3 or a4)");
}

}  // namespace qsym::grp
