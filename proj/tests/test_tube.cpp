#include <Eigen/Dense>

#include <random>

#include "doctest.h"
#include "qsym/fusion/ring.hpp"
#include "qsym/grouprep/rep.hpp"
#include "qsym/tube/checks.hpp"
#include "qsym/tube/double.hpp"

using namespace qsym;
using tube::Key;

namespace {

using FRep = grp::RepCategory<Complex>;
using XRep = grp::RepCategory<Cyclotomic>;
using FVec = grp::VecCategory<Complex>;
using XVec = grp::VecCategory<Cyclotomic>;

template <class T>
typename T::Element random_element(const T& t, const std::vector<Key>& keys, std::mt19937& rng) {
  tube::Layout<T> lay(t, keys);
  std::vector<typename T::S> v(lay.dim());
  std::uniform_int_distribution<int> small(-3, 3);
  std::normal_distribution<double> gauss;
  for (auto& x : v) {
    if constexpr (ScalarTraits<typename T::S>::exact) x = typename T::S(Rational(small(rng)));
    else x = Complex(gauss(rng), gauss(rng));
  }
  return lay.unflatten(v);
}

template <class T>
double dist(const T& t, const typename T::Element& a, const typename T::Element& b) {
  return t.residual(T::sub(a, b));
}

// isotypic projection of the representation w, from the characters
Matrix<Complex> isotypic(const FRep& cat, const grp::Word& w, std::size_t u) {
  const auto& rho = cat.rho(w);
  const auto& irr = cat.irreps()[u];
  Matrix<Complex> p(rho[0].rows(), rho[0].cols());
  for (std::size_t g = 0; g < rho.size(); ++g) p += rho[g] * std::conj(irr.rho[g].trace());
  return p * Complex(static_cast<double>(irr.degree) / static_cast<double>(rho.size()));
}

Matrix<Complex> to_complex(const Matrix<Cyclotomic>& m) {
  Matrix<Complex> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_complex();
  return r;
}

template <class T>
void check_q_pi(const T& t, const FRep& fcat) {
  const std::size_t pi = fcat.find("pi"), w1 = fcat.find("w1"), w2 = fcat.find("w2");
  auto res = tube::spectral(t, pi);
  auto block = [&](std::size_t a) {
    Key k{pi, a, pi};
    auto m = t.morphism(k, T::component(res.q, k, t.block_dim(k))).m;
    if constexpr (std::is_same_v<typename T::S, Cyclotomic>) return to_complex(m);
    else return m;
  };
  const Matrix<Complex> id3 = Matrix<Complex>::identity(3);
  CHECK((block(0) - id3 * Complex(7.0 / 18)).max_abs() < 1e-9);
  CHECK((block(w1) - id3 * Complex(1.0 / 18)).max_abs() < 1e-9);
  CHECK((block(w2) - id3 * Complex(1.0 / 18)).max_abs() < 1e-9);
  Matrix<Complex> expect = isotypic(fcat, {pi, pi}, 0) * Complex(7.0 / 6) +
                           (isotypic(fcat, {pi, pi}, w1) + isotypic(fcat, {pi, pi}, w2)) * Complex(1.0 / 6) +
                           isotypic(fcat, {pi, pi}, pi) * Complex(1.0 / 3);
  CHECK((block(pi) - expect).max_abs() < 1e-9);
}

}  // namespace

TEST_CASE("A4 corner of pi and its fixed projection, float") {
  auto cat = FRep::builtin("a4");
  tube::Tube<FRep> t(cat);
  const auto pi = cat->find("pi");
  CHECK(tube::Layout<tube::Tube<FRep>>(t, t.corner_keys(pi)).dim() == 10);
  auto res = tube::spectral(t, pi);
  CHECK(std::abs(res.tau_q - Complex(7.0 / 6)) < 1e-9);
  check_q_pi(t, *cat);
  // q is a self-adjoint idempotent fixed by U
  CHECK(dist(t, t.mul(res.q, res.q), res.q) < 1e-9);
  CHECK(dist(t, t.sharp(res.q), res.q) < 1e-9);
  CHECK(dist(t, t.mul(t.central_U(pi), res.q), res.q) < 1e-9);
  Complex total = 0;
  for (const auto& p : res.pieces) total += p.weight;
  CHECK(std::abs(total - Complex(3)) < 1e-9);
}

TEST_CASE("A4 fixed projection, exact") {
  auto cat = XRep::builtin("a4");
  tube::Tube<XRep> t(cat);
  auto res = tube::spectral(t, cat->find("pi"));
  CHECK(res.tau_q == Cyclotomic(Rational(7) / Rational(6)));
  CHECK(res.period == 6);
  check_q_pi(t, *FRep::builtin("a4"));
  CHECK(t.is_zero(tube::Tube<XRep>::sub(t.mul(res.q, res.q), res.q)));
  CHECK(t.is_zero(tube::Tube<XRep>::sub(t.sharp(res.q), res.q)));
}

TEST_CASE("pointed categories: closed forms") {
  for (std::size_t n : {3u, 4u, 6u}) {
    auto g = grp::FiniteGroup::cyclic(n);
    auto cat = std::make_shared<XVec>(g);
    tube::Tube<XVec> t(cat);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          auto prod = t.mul(t.basis_element({i, a, i}, 0), t.basis_element({i, b, i}, 0));
          CHECK(t.is_zero(tube::Tube<XVec>::sub(prod, t.basis_element({i, g.mul(a, b), i}, 0))));
        }
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(t.is_zero(tube::Tube<XVec>::sub(t.central_U(i), t.basis_element({i, i, i}, 0))));
      std::size_t gk = 0;
      for (unsigned k = 0; k <= 8; ++k) {
        Cyclotomic expect(gk == 0 ? 1 : 0);
        CHECK(tube::moment_algebra(t, i, k) == expect);
        CHECK(tube::moment_rotation(t, i, k) == expect);
        gk = g.mul(gk, i);
      }
      auto res = tube::spectral(t, i);
      CHECK(res.tau_q == Cyclotomic(Rational(1) / Rational(static_cast<long>(g.element_order(i)))));
    }
  }
  auto fcat = std::make_shared<FVec>(grp::FiniteGroup::cyclic(5));
  tube::Tube<FVec> ft(fcat);
  CHECK(std::abs(tube::spectral(ft, 2).tau_q - Complex(0.2)) < 1e-9);
}

TEST_CASE("star-algebra axioms and trace on random elements") {
  std::mt19937 rng(7);
  for (const char* name : {"s3", "a4"}) {
    auto cat = FRep::builtin(name);
    tube::Tube<FRep> t(cat);
    const auto keys = t.keys();
    for (int rep = 0; rep < 5; ++rep) {
      auto x = random_element(t, keys, rng), y = random_element(t, keys, rng), z = random_element(t, keys, rng);
      CHECK(dist(t, t.mul(t.mul(x, y), z), t.mul(x, t.mul(y, z))) < 1e-9);
      CHECK(dist(t, t.sharp(t.mul(x, y)), t.mul(t.sharp(y), t.sharp(x))) < 1e-9);
      CHECK(dist(t, t.sharp(t.sharp(x)), x) < 1e-9);
      CHECK(dist(t, t.mul(x, tube::Tube<FRep>::add(y, z)), tube::Tube<FRep>::add(t.mul(x, y), t.mul(x, z))) < 1e-9);
      CHECK(std::abs(t.tau(t.mul(x, y)) - t.tau(t.mul(y, x))) < 1e-9);
      CHECK(dist(t, t.mul(t.unit(), x), x) < 1e-9);
      CHECK(dist(t, t.mul(x, t.unit()), x) < 1e-9);
      CHECK(std::real(t.tau(t.mul(t.sharp(x), x))) > 0);
    }
  }
  auto xcat = XRep::builtin("s3");
  tube::Tube<XRep> xt(xcat);
  const auto keys = xt.keys();
  for (int rep = 0; rep < 2; ++rep) {
    auto x = random_element(xt, keys, rng), y = random_element(xt, keys, rng), z = random_element(xt, keys, rng);
    CHECK(xt.is_zero(tube::Tube<XRep>::sub(xt.mul(xt.mul(x, y), z), xt.mul(x, xt.mul(y, z)))));
    CHECK(xt.is_zero(tube::Tube<XRep>::sub(xt.sharp(xt.mul(x, y)), xt.mul(xt.sharp(y), xt.sharp(x)))));
    CHECK(xt.tau(xt.mul(x, y)) == xt.tau(xt.mul(y, x)));
  }
}

TEST_CASE("trace is faithful and matches the block inner product") {
  auto cat = FRep::builtin("a4");
  tube::Tube<FRep> t(cat);
  tube::Layout<tube::Tube<FRep>> lay(t, t.keys());
  Eigen::MatrixXcd g(static_cast<long>(lay.dim()), static_cast<long>(lay.dim()));
  for (std::size_t p = 0; p < lay.dim(); ++p)
    for (std::size_t q = 0; q < lay.dim(); ++q) {
      auto [kp, ip] = lay.locate(p);
      auto [kq, iq] = lay.locate(q);
      g(static_cast<long>(p), static_cast<long>(q)) = t.tau(t.mul(t.sharp(t.basis_element(kp, ip)), t.basis_element(kq, iq)));
      if (kp == kq) {
        Complex expect = t.block(kp).gram(ip, iq);
        CHECK(std::abs(cat->dim(kp.a) * g(static_cast<long>(p), static_cast<long>(q)) - expect) < 1e-9);
      }
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  CHECK(es.eigenvalues().minCoeff() > 1e-6);
}

TEST_CASE("unit, counit and local units") {
  auto cat = XRep::builtin("a4");
  tube::Tube<XRep> t(cat);
  using T = tube::Tube<XRep>;
  for (std::size_t i = 0; i < cat->rank(); ++i) {
    CHECK(t.tau(t.p(i)) == cat->dim(i));
    CHECK(t.counit(t.p(i)) == Cyclotomic(i == 0 ? 1 : 0));
    CHECK(t.is_zero(T::sub(t.mul(t.p(i), t.p(i)), t.p(i))));
    CHECK(t.is_zero(T::sub(t.sharp(t.p(i)), t.p(i))));
  }
  CHECK(t.is_zero(T::sub(t.central_U(0), t.p(0))));
  // identity of (i eps, eps i) embeds as p_i; an irreducible word embeds as itself
  const auto pi = cat->find("pi");
  auto v = t.block({pi, pi, pi}).basis[3];
  auto e = t.embed(v, pi, {pi}, pi);
  CHECK(e.size() == 1);
  CHECK(t.is_zero(T::sub(e, t.basis_element({pi, pi, pi}, 3))));
  // counit is multiplicative on the unit corner
  std::mt19937 rng(3);
  auto ks = t.corner_keys(0);
  for (int rep = 0; rep < 3; ++rep) {
    auto x = random_element(t, ks, rng), y = random_element(t, ks, rng);
    CHECK(t.counit(t.mul(x, y)) == t.counit(x) * t.counit(y));
  }
}

TEST_CASE("central unitaries") {
  std::mt19937 rng(11);
  for (const char* name : {"s3", "a4"}) {
    auto cat = FRep::builtin(name);
    tube::Tube<FRep> t(cat);
    using T = tube::Tube<FRep>;
    for (std::size_t i = 0; i < cat->rank(); ++i) {
      auto u = t.central_U(i);
      CHECK(dist(t, t.mul(u, t.sharp(u)), t.p(i)) < 1e-9);
      CHECK(dist(t, t.mul(t.sharp(u), u), t.p(i)) < 1e-9);
      // U_i^# is the element s_i t_i^*
      auto st = cat->compose(cat->s(i), cat->adjoint(cat->t(i)));
      CHECK(dist(t, t.sharp(u), t.embed(st, i, T::word({cat->dual(i)}), i)) < 1e-9);
      for (std::size_t j = 0; j < cat->rank(); ++j) {
        std::vector<Key> ks;
        for (std::size_t a = 0; a < cat->rank(); ++a)
          if (t.block_dim({i, a, j})) ks.push_back({i, a, j});
        if (ks.empty()) continue;
        auto v = random_element(t, ks, rng);
        CHECK(dist(t, t.mul(u, v), t.mul(v, t.central_U(j))) < 1e-9);
        if (j == 0) CHECK(dist(t, t.mul(u, v), v) < 1e-9);
        if (i == 0) CHECK(dist(t, t.mul(u, v), t.mul(v, t.central_U(j))) < 1e-9);
      }
      for (unsigned k = 0; k <= 6; ++k)
        CHECK(std::abs(tube::moment_algebra(t, i, k) - tube::moment_rotation(t, i, k)) < 1e-9);
    }
  }
}

TEST_CASE("commutation agrees with the orthonormal-basis expansion") {
  auto cat = FRep::builtin("s3");
  tube::Tube<FRep> t(cat);
  using T = tube::Tube<FRep>;
  const std::size_t n = cat->rank();
  for (const auto& k : t.keys()) {
    for (std::size_t p = 0; p < t.block_dim(k); ++p) {
      const auto& v = t.block(k).basis[p];
      T::Element expect;
      for (std::size_t g = 0; g < n; ++g) {
        auto wl = cat->onb(T::word({k.i, k.a}), T::word({g}));
        auto wr = cat->onb(T::word({k.a, k.j}), T::word({g}));
        for (const auto& w : wl)
          for (const auto& w2 : wr) {
            Complex ip = cat->trace(cat->compose(cat->adjoint(cat->compose(w, cat->adjoint(w2))), v));
            auto m = cat->compose(cat->tensor(cat->id(T::word({k.i})), cat->adjoint(w2)),
                                  cat->tensor(w, cat->id(T::word({k.j}))));
            expect = T::add(expect, T::scale(t.embed(m, k.i, T::word({g}), k.j), ip * cat->dim(g)));
          }
      }
      auto b = t.basis_element(k, p);
      CHECK(dist(t, t.mul(t.central_U(k.i), b), expect) < 1e-9);
      CHECK(dist(t, t.mul(b, t.central_U(k.j)), expect) < 1e-9);
    }
  }
}

TEST_CASE("A4 moments") {
  auto cat = XRep::builtin("a4");
  tube::Tube<XRep> t(cat);
  const auto pi = cat->find("pi");
  CHECK(tube::moment_algebra(t, pi, 0) == Cyclotomic(3));
  CHECK(tube::moment_algebra(t, pi, 1) == Cyclotomic(0));
  CHECK(tube::moment_rotation(t, pi, 1) == Cyclotomic(0));
  for (unsigned k = 0; k <= 6; ++k) CHECK(tube::moment_algebra(t, pi, k) == tube::moment_rotation(t, pi, k));
}

TEST_CASE("averaging identity and Markov sums for all full subcategories") {
  for (const char* name : {"s3", "a4", "z4"}) {
    auto cat = FRep::builtin(name);
    tube::Tube<FRep> t(cat);
    auto ring = tube::ring_of(*cat, name);
    // every subset closed under fusion and conjugation containing the unit
    std::vector<fusion::SubcategorySpec> subs;
    const std::size_t n = cat->rank();
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {
      fusion::SubcategorySpec s;
      for (std::size_t a = 0; a < n; ++a)
        if (mask >> a & 1) s.members.insert(a);
      bool closed = true;
      for (auto a : s.members) {
        closed = closed && s.members.count(ring->conj(a));
        for (auto b : s.members)
          for (const auto& [c, m] : ring->fuse(a, b)) closed = closed && s.members.count(c);
      }
      if (closed) subs.push_back(s);
    }
    CHECK(subs.size() >= 2);
    for (const auto& s : subs) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) CHECK(tube::lemma39_check(t, *ring, i, a, s).residual < 1e-9);
      auto m = tube::markov_sum_check(t, *ring, s);
      CHECK(m.residual.residual < 1e-9);
      CHECK(m.lambda_inv == fusion::index(*ring, s).value);
      // the sum is not some other multiple of the unit
      CHECK(dist(t, m.sum, tube::Tube<FRep>::scale(t.unit(), Complex(m.lambda_inv.get_d() + 1))) > 1e-3);
    }
  }
}

TEST_CASE("Markov sums: named cases, exact") {
  auto cat = XRep::builtin("a4");
  tube::Tube<XRep> t(cat);
  auto ring = tube::ring_of(*cat, "a4");
  auto m = tube::markov_sum_check(t, *ring, {{0, 1, 2}, false});
  CHECK(m.lambda_inv == 4);
  CHECK(m.residual.residual == 0.0);
  CHECK(tube::markov_sum_check(t, *ring, fusion::SubcategorySpec::all()).lambda_inv == 1);
  auto vcat = std::make_shared<XVec>(grp::FiniteGroup::cyclic(4));
  tube::Tube<XVec> vt(vcat);
  auto vring = tube::ring_of(*vcat, "Vec(Z/4)");
  auto vm = tube::markov_sum_check(vt, *vring, {{0, 2}, false});
  CHECK(vm.lambda_inv == 2);
  CHECK(vm.residual.residual == 0.0);
  CHECK(tube::lemma39_check(t, *ring, 3, 3, {{0, 1, 2}, false}).residual == 0.0);
}

TEST_CASE("subcategory projections") {
  auto cat = FRep::builtin("a4");
  tube::Tube<FRep> t(cat);
  auto ring = tube::ring_of(*cat, "a4");
  tube::Layout<tube::Tube<FRep>> lay(t, t.keys());
  CHECK((tube::subcat_projection(t, *ring, fusion::SubcategorySpec::all()) - Matrix<Complex>::identity(lay.dim())).max_abs() == 0);
  std::size_t rank_eps = 0, rank_w = 0;
  for (const auto& k : t.keys()) {
    if (k.a == 0) rank_eps += t.block_dim(k);
    if (k.a <= 2) rank_w += t.block_dim(k);
  }
  CHECK(std::abs(tube::subcat_projection(t, *ring, {{0}, false}).trace() - Complex(double(rank_eps))) < 1e-12);
  CHECK(std::abs(tube::subcat_projection(t, *ring, {{0, 1, 2}, false}).trace() - Complex(double(rank_w))) < 1e-12);
}

TEST_CASE("quantum double of a finite group") {
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  for (const char* name : {"z2", "s3", "a4"}) {
    auto d = tube::QuantumDouble::builtin(name);
    const auto& g = d.group();
    const std::size_t n = g.order();
    CHECK(d.dim() == n * n);
    // exchange is conjugation of the argument
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t conj = g.mul(g.mul(g.inv(h), y), h);
        for (std::size_t x = 0; x < n; ++x) CHECK(std::abs(d.exchange(h)(x, y) - Complex(x == conj ? 1 : 0)) < 1e-9);
      }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t h = 0; h < n; ++h) CHECK(std::abs(d.tau(d.basis(x, h)) - Complex(h == 0 ? 1 : 0)) < 1e-9);
    auto rnd = [&] {
      auto a = d.zero();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
      return a;
    };
    const int pairs = std::string(name) == "a4" ? 100 : 20;
    double worst = 0;
    for (int rep = 0; rep < pairs; ++rep) {
      auto a = rnd(), b = rnd();
      worst = std::max(worst, std::abs(d.tau(d.mul(a, b)) - d.tau(d.mul(b, a))));
    }
    CHECK(worst < 1e-9);
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK((d.mul(d.mul(a, b), c) - d.mul(a, d.mul(b, c))).max_abs() < 1e-9);
    CHECK((d.star(d.mul(a, b)) - d.mul(d.star(b), d.star(a))).max_abs() < 1e-9);
    CHECK((d.mul(d.one(), a) - a).max_abs() < 1e-9);
    CHECK(d.markov_residual() < 1e-9);
  }
}
