#include "qsym/cli/commands.hpp"

#include <fstream>
#include <future>
#include <functional>
#include <random>
#include <sstream>

#include "qsym/error.hpp"
#include "qsym/fusion/ring.hpp"
#include "qsym/grouprep/rep.hpp"
#include "qsym/planar/diagram.hpp"
#include "qsym/tlj/resolution.hpp"
#include "qsym/tube/checks.hpp"
#include "qsym/tube/double.hpp"

namespace qsym::cli {

namespace {

using Label = std::size_t;
constexpr int kEnumerationGuard = 12;

std::string rat_str(const Rational& q) { return q.get_str(); }

/// Compares a category scalar with a rational: exact equality or |err| <= tol.
template <class S>
void expect_scalar(Report& rep, const std::string& check, const S& v, const Rational& expected,
                   const std::string& origin) {
  if constexpr (ScalarTraits<S>::exact) {
    rep.expect_equal(check, v.str(), Cyclotomic(expected).str(), origin);
  } else {
    rep.expect_small(check, std::abs(v - Complex(expected.get_d())), origin, fmt_double(v.real()),
                     rat_str(expected));
  }
}

template <class S>
std::string scalar_str(const S& v) {
  if constexpr (ScalarTraits<S>::exact) return v.str();
  else return fmt_double(v.real()) + (std::abs(v.imag()) > 0 ? (v.imag() < 0 ? "-" : "+") + fmt_double(std::abs(v.imag())) + "i" : "");
}

nlohmann::ordered_json json_rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

fusion::SubcategorySpec parse_sub(const fusion::FusionRing& ring, const std::string& text) {
  if (text == "all") return fusion::SubcategorySpec::all();
  fusion::SubcategorySpec s;
  s.members.insert(ring.unit());
  for (const auto& name : split(text, ',')) s.members.insert(ring.find(name));
  fusion::validate_sub(ring, s);
  return s;
}

std::string sub_str(const fusion::FusionRing& ring, const fusion::SubcategorySpec& s) {
  if (s.whole) return "all";
  std::string out = "{";
  for (auto a : s.members) out += (out.size() > 1 ? "," : "") + ring.name(a);
  return out + "}";
}

/// Unit-containing subsets closed under conjugation and fusion.
std::vector<fusion::SubcategorySpec> full_subcategories(const fusion::FiniteRing& ring) {
  const std::size_t n = ring.size();
  if (n > 16) throw InvalidInput("too many labels to enumerate subcategories; pass --sub");
  std::vector<fusion::SubcategorySpec> subs;
  for (unsigned long mask = 1; mask < (1ul << n); mask += 2) {
    fusion::SubcategorySpec s;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) s.members.insert(a);
    bool closed = true;
    for (auto a : s.members) {
      closed = closed && s.members.count(ring.conj(a));
      for (auto b : s.members)
        for (const auto& [c, m] : ring.fuse(a, b)) closed = closed && s.members.count(c);
    }
    if (closed) subs.push_back(std::move(s));
  }
  return subs;
}

Rational global_dim(const fusion::FiniteRing& ring, const fusion::SubcategorySpec& s) {
  Rational d = 0;
  for (auto a : ring.labels())
    if (s.contains(a)) d += ring.dim(a) * ring.dim(a);
  return d;
}

grp::FiniteGroup pointed_group(const Config& c) {
  if (!c.group_file.empty()) return grp::FiniteGroup::from_json(read_file(c.group_file));
  return grp::builtin_reps(c.group).group;
}

bool is_pointed(const Config& c) { return c.pointed || !c.group_file.empty(); }

std::string category_name(const Config& c) {
  if (!c.group_file.empty()) return "Vec(" + pointed_group(c).name() + ")";
  return (c.pointed ? "Vec(" : "Rep(") + c.group + ")";
}

/// Calls f(category) for the backend selected by the config.
template <class F>
Report with_category(const Config& c, F&& f) {
  if (c.group.empty() && c.group_file.empty()) throw InvalidInput("pass --group or --group-file");
  if (is_pointed(c)) {
    auto g = pointed_group(c);
    if (c.exact) return f(std::make_shared<grp::VecCategory<Cyclotomic>>(g));
    return f(std::make_shared<grp::VecCategory<Complex>>(g, c.tol * 1e-2));
  }
  if (c.exact) return f(grp::RepCategory<Cyclotomic>::builtin(c.group));
  return f(grp::RepCategory<Complex>::builtin(c.group, c.tol * 1e-2));
}

Report base(const Config& c, const std::string& command, const std::string& category = "") {
  Report r;
  r.command = command;
  r.category = category;
  r.tol = c.tol;
  r.exact = c.exact;
  return r;
}

Label find_label(const fusion::FusionRing& ring, const std::string& name) {
  if (name.empty()) throw InvalidInput("pass --label");
  return ring.find(name);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void validate(const Config& c, bool enumerates) {
  if (!(c.tol > 0)) throw InvalidInput("tolerance must be positive");
  if (c.kmax < 0) throw InvalidInput("k range must be non-negative");
  if (enumerates && c.kmax > kEnumerationGuard && !c.force)
    throw InvalidInput("k = " + std::to_string(c.kmax) + " exceeds the enumeration guard " +
                       std::to_string(kEnumerationGuard) + " (Catalan(12) = 208012 diagrams); pass --force");
  if (c.sgn && *c.sgn != 1 && *c.sgn != -1) throw InvalidInput("sgn must be +1 or -1");
}

Report run_moments(const Config& c) {
  validate(c, true);
  Report rep = base(c, "moments", "TL");
  rep.exact = true;
  const Poly d = Poly::x();
  rep.data["delta"] = c.delta ? json_rational(*c.delta) : nlohmann::ordered_json("symbolic");
  auto& table = rep.data["moments"] = nlohmann::ordered_json::array();
  for (int k = 0; k <= c.kmax; ++k) {
    const Poly m = planar::tl_moment(k);
    const Poly expected = k == 0 ? d * d - Poly(1) : Poly(k == 1 ? 0 : 1);
    const std::string name = "tl_moment(" + std::to_string(k) + ")";
    if (c.delta) {
      const Rational v = m.eval(*c.delta);
      table.push_back({{"k", k}, {"moment", json_rational(v)}});
      rep.expect_equal(name, rat_str(v), rat_str(expected.eval(*c.delta)), "reference");
      rep.expect_equal("spectral_moment(" + std::to_string(k) + ")", rat_str(planar::spectral_moment(k, *c.delta)),
                       rat_str(v), "identity");
    } else {
      table.push_back({{"k", k}, {"moment", m.str("d")}});
      rep.expect_equal(name, m.str("d"), expected.str("d"), "reference");
      for (const Rational& d0 : std::vector<Rational>{Rational(2), Rational(3), Rational(7) / Rational(2)})
        rep.expect_equal("spectral_moment(" + std::to_string(k) + ", d=" + rat_str(d0) + ")",
                         rat_str(planar::spectral_moment(k, d0)), rat_str(m.eval(d0)), "identity");
    }
  }
  return rep;
}

Report run_riordan(const Config& c) {
  validate(c, true);
  Report rep = base(c, "riordan", "NC2");
  rep.exact = true;
  fusion::SO3Ring so3;
  auto& table = rep.data["counts"] = nlohmann::ordered_json::array();
  for (int k = 0; k <= c.kmax; ++k) {
    const auto enumerated = static_cast<std::int64_t>(planar::nc2_circ(k).size());
    const std::int64_t formula = planar::riordan(k);
    const auto so3_mult = static_cast<std::int64_t>(fusion::mult_in_word(so3, 0, std::vector<fusion::Label>(k, 1)));
    table.push_back({{"k", k}, {"enumerated", enumerated}, {"formula", formula}, {"so3", so3_mult}});
    rep.expect_equal("nc2_circ(" + std::to_string(k) + ") vs alternating Catalan sum", std::to_string(enumerated),
                     std::to_string(formula), "derived");
    rep.expect_equal("SO(3) invariants in [1]^" + std::to_string(k), std::to_string(so3_mult),
                     std::to_string(formula), "derived");
  }
  return rep;
}

Report run_index(const Config& c) {
  validate(c, false);
  std::shared_ptr<fusion::FiniteRing> ring;
  std::string cat;
  if (!c.ring_file.empty()) {
    ring = std::make_shared<fusion::FiniteRing>(fusion::FiniteRing::from_json(read_file(c.ring_file)));
    cat = ring->describe();
  } else if (is_pointed(c)) {
    ring = fusion::pointed_ring(pointed_group(c));
    cat = category_name(c);
  } else if (!c.group.empty()) {
    ring = fusion::rep_ring(fusion::builtin_char_table(c.group), "Rep(" + c.group + ")");
    cat = category_name(c);
  } else {
    throw InvalidInput("pass --group, --group-file or --ring");
  }
  Report rep = base(c, "index", cat);
  rep.exact = true;
  const auto subs = c.sub.empty() ? full_subcategories(*ring) : std::vector{parse_sub(*ring, c.sub)};
  auto& arr = rep.data["indices"] = nlohmann::ordered_json::array();
  for (const auto& s : subs) {
    const auto idx = fusion::index(*ring, s);
    const std::string name = "index " + sub_str(*ring, s);
    arr.push_back({{"sub", sub_str(*ring, s)}, {"index", idx.str()}});
    if (idx.kind != fusion::IndexResult::Kind::Finite) {
      rep.expect_equal(name, idx.str(), "finite", "derived");
      continue;
    }
    rep.expect_equal(name, rat_str(idx.value), rat_str(global_dim(*ring, fusion::SubcategorySpec::all()) / global_dim(*ring, s)),
                     "derived");
  }
  if (subs.size() == 1) rep.data["index"] = json_rational(fusion::index(*ring, subs[0]).value);
  return rep;
}

Report run_tube_spectrum(const Config& c) {
  validate(c, false);
  return with_category(c, [&](auto cat) {
    using Cat = typename decltype(cat)::element_type;
    using T = tube::Tube<Cat>;
    using S = typename T::S;
    Report rep = base(c, "tube-spectrum", category_name(c));
    T t(cat);
    auto ring = tube::ring_of(*cat, rep.category);
    const Label i = find_label(*ring, c.label);
    const auto res = tube::spectral(t, i);
    tube::Layout<T> lay(t, t.corner_keys(i));
    rep.data["category"] = rep.category;
    rep.data["corner"] = cat->name(i);
    rep.data["dim"] = lay.dim();
    auto& spec = rep.data["spectrum"] = nlohmann::ordered_json::array();
    S total = S();
    for (const auto& p : res.pieces) {
      spec.push_back(nlohmann::ordered_json{{"eigenvalue", p.lambda_str}, {"multiplicity_weight", scalar_str(p.weight)}});
      total += p.weight;
    }
    rep.data["tau_q"] = scalar_str(res.tau_q);
    if (res.period) rep.data["period"] = res.period;
    expect_scalar(rep, "sum of spectral weights = d(i)", total, cat->rational_dim(i), "identity");
    const auto u = t.central_U(i);
    rep.expect_small("U_i U_i# = p_i", t.residual(T::sub(t.mul(u, t.sharp(u)), t.p(i))), "identity");
    rep.expect_small("q_i is a projection", t.residual(T::sub(t.mul(res.q, res.q), res.q)), "identity");
    if constexpr (std::is_same_v<Cat, grp::VecCategory<S>>) {
      expect_scalar(rep, "tau(q_i) = 1/ord", res.tau_q,
                    Rational(1) / Rational(static_cast<long>(cat->group().element_order(i))), "derived");
    } else {
      if ((c.group == "a4" || c.group == "A4") && cat->name(i) == "pi")
        expect_scalar(rep, "tau(q_pi)", res.tau_q, Rational(7) / Rational(6), "reference");
    }
    return rep;
  });
}

Report run_lemma39(const Config& c) {
  validate(c, false);
  return with_category(c, [&](auto cat) {
    using T = tube::Tube<typename decltype(cat)::element_type>;
    Report rep = base(c, "lemma39", category_name(c));
    T t(cat);
    auto ring = tube::ring_of(*cat, rep.category);
    const auto subs = c.sub.empty() ? full_subcategories(*ring) : std::vector{parse_sub(*ring, c.sub)};
    for (const auto& s : subs)
      for (Label i = 0; i < cat->rank(); ++i)
        for (Label a = 0; a < cat->rank(); ++a) {
          auto r = tube::lemma39_check(t, *ring, i, a, s);
          rep.expect_small(sub_str(*ring, s) + " " + r.check, r.residual, "identity");
        }
    return rep;
  });
}

Report run_markov(const Config& c) {
  validate(c, false);
  return with_category(c, [&](auto cat) {
    using T = tube::Tube<typename decltype(cat)::element_type>;
    Report rep = base(c, "markov", category_name(c));
    T t(cat);
    auto ring = tube::ring_of(*cat, rep.category);
    const auto subs = c.sub.empty() ? full_subcategories(*ring) : std::vector{parse_sub(*ring, c.sub)};
    auto& arr = rep.data["lambda_inv"] = nlohmann::ordered_json::array();
    for (const auto& s : subs) {
      auto m = tube::markov_sum_check(t, *ring, s);
      arr.push_back({{"sub", sub_str(*ring, s)}, {"index", json_rational(m.lambda_inv)}});
      rep.expect_small("markov sum " + sub_str(*ring, s) + " = " + rat_str(m.lambda_inv) + " 1", m.residual.residual,
                       "identity");
    }
    return rep;
  });
}

Report run_double(const Config& c) {
  validate(c, false);
  if (c.group.empty()) throw InvalidInput("pass --group");
  if (c.exact) throw InvalidInput("the quantum double runs in float mode only");
  auto qd = tube::QuantumDouble::builtin(c.group);
  Report rep = base(c, "double", "D(" + c.group + ")");
  std::mt19937 rng(c.seed);
  std::normal_distribution<double> gauss;
  auto random = [&] {
    auto a = qd.zero();
    for (std::size_t g = 0; g < qd.order(); ++g)
      for (std::size_t x = 0; x < qd.order(); ++x) a(g, x) = Complex(gauss(rng), gauss(rng));
    return a;
  };
  double trace_res = 0, assoc_res = 0, star_res = 0;
  for (int s = 0; s < c.samples; ++s) {
    auto a = random(), b = random();
    trace_res = std::max(trace_res, std::abs(qd.tau(qd.mul(a, b)) - qd.tau(qd.mul(b, a))));
    if (s < 5) {
      auto x = random();
      assoc_res = std::max(assoc_res, (qd.mul(qd.mul(a, b), x) - qd.mul(a, qd.mul(b, x))).max_abs());
      star_res = std::max(star_res, (qd.star(qd.mul(a, b)) - qd.mul(qd.star(b), qd.star(a))).max_abs());
    }
  }
  rep.data["order"] = qd.order();
  rep.data["dim"] = qd.dim();
  rep.data["samples"] = c.samples;
  rep.expect_small("tau(ab) = tau(ba) on random pairs", trace_res, "identity");
  rep.expect_small("associativity", assoc_res, "identity");
  rep.expect_small("(ab)* = b* a*", star_res, "identity");
  rep.expect_small("sum d(U)^-1 E E* = 1", qd.markov_residual(), "identity");
  return rep;
}

Report run_tlj(const Config& c) {
  validate(c, false);
  Report rep = base(c, "tlj", "TLJ");
  rep.exact = true;
  const std::vector<int> signs = c.sgn ? std::vector<int>{*c.sgn} : std::vector<int>{-1, 1};
  auto& arr = rep.data["runs"] = nlohmann::ordered_json::array();
  for (int sgn : signs) {
    tlj::TLParams p{sgn, c.delta};
    auto r = tlj::check_resolution(p);
    nlohmann::ordered_json j;
    j["delta"] = c.delta ? json_rational(*c.delta) : nlohmann::ordered_json("symbolic");
    j["sgn"] = sgn;
    j["unitary_ok"] = r.unitary;
    j["p0VV_ok"] = r.p0vv;
    j["counit_V"] = c.delta ? nlohmann::ordered_json(r.counit_numeric) : nlohmann::ordered_json(r.counit_v.str());
    j["ddzero_ok"] = r.d1d2_zero && r.d2d3_zero && r.augmentation_ok;
    j["homology"] = r.homology;
    arr.push_back(std::move(j));
    const std::string tag = " (sgn=" + std::to_string(sgn) + ")";
    rep.expect_true("V V# = V# V = p0 + p2" + tag, r.unitary, "reference");
    rep.expect_true("p0 V V = p0" + tag, r.p0vv, "reference");
    rep.expect_equal("counit(V)" + tag, r.counit_v.str(), RatFunc(-sgn).str(), "reference");
    rep.expect_true("p0 (V+sgn)(V-sgn) = 0" + tag, r.d1d2_zero, "reference");
    rep.expect_true("(V-sgn)(V+sgn) p0 = 0" + tag, r.d2d3_zero, "reference");
    rep.expect_true("counit(p0 (V+sgn) p0) = 0" + tag, r.augmentation_ok, "reference");
    std::string h;
    for (int x : r.homology) h += (h.empty() ? "" : ",") + std::to_string(x);
    rep.expect_equal("trivial homology" + tag, "[" + h + "]", "[1,0,0,1]", "reference");
  }
  return rep;
}

std::vector<Report> run_suite(const Config& c) {
  validate(c, false);
  std::vector<std::function<Report()>> tasks;
  auto with = [&](auto fn, auto tweak) {
    tasks.emplace_back([c, fn, tweak] {
      Config x = c;
      x.sub.clear();
      x.label.clear();
      tweak(x);
      return fn(x);
    });
  };
  with(run_moments, [](Config& x) { x.kmax = 8; x.delta.reset(); });
  with(run_moments, [](Config& x) { x.kmax = 8; x.delta = Rational(3); });
  with(run_riordan, [](Config& x) { x.kmax = 10; });
  with(run_index, [](Config& x) { x.group = "a4"; x.sub = "eps,w1,w2"; x.pointed = false; });
  with(run_index, [](Config& x) { x.group = "z8"; x.pointed = true; });
  for (bool exact : {false, true})
    with(run_tube_spectrum, [exact](Config& x) { x.group = "a4"; x.label = "pi"; x.exact = exact; x.pointed = false; });
  for (const char* g : {"s3", "a4"}) {
    with(run_lemma39, [g](Config& x) { x.group = g; x.pointed = false; x.exact = false; });
    with(run_markov, [g](Config& x) { x.group = g; x.pointed = false; x.exact = false; });
  }
  for (const char* g : {"z2", "s3", "a4"}) with(run_double, [g](Config& x) { x.group = g; x.exact = false; x.samples = 100; });
  with(run_tlj, [](Config& x) { x.sgn.reset(); x.delta.reset(); });
  // launch everything, then collect in the order the tasks were listed
  std::vector<std::future<Report>> futures;
  for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
  std::vector<Report> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace qsym::cli
