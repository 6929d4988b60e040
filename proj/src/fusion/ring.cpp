#include "qsym/fusion/ring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "qsym/error.hpp"

namespace qsym::fusion {

namespace {

void add_mult(Multiset& m, Label c, unsigned long n) {
  if (n == 0) return;
  auto it = std::lower_bound(m.begin(), m.end(), c, [](const auto& p, Label x) { return p.first < x; });
  if (it != m.end() && it->first == c) it->second += n;
  else m.insert(it, {c, n});
}

Rational parse_rational_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad rational " + j.dump());
    q.canonicalize();
    return q;
  }
  throw InvalidInput("expected an integer or rational string, got " + j.dump());
}

}  // namespace

std::vector<Label> FusionRing::labels(std::size_t bound) const {
  std::vector<Label> out{unit()};
  std::set<Label> seen{unit()};
  std::deque<Label> queue{unit()};
  const auto gens = generators();
  while (!queue.empty() && out.size() < bound) {
    Label a = queue.front();
    queue.pop_front();
    for (Label g : gens)
      for (const auto& [c, n] : fuse(a, g)) {
        (void)n;
        if (seen.insert(c).second) {
          out.push_back(c);
          queue.push_back(c);
          if (out.size() >= bound) return out;
        }
      }
  }
  return out;
}

unsigned long FusionRing::N(Label a, Label b, Label c) const {
  for (const auto& [x, n] : fuse(a, b))
    if (x == c) return n;
  return 0;
}

// ---------------------------------------------------------------- finite

FiniteRing::FiniteRing(std::string description, std::vector<std::string> names, std::vector<Rational> dims,
                       std::vector<Label> conj, std::vector<unsigned long> table)
    : names_(std::move(names)), dims_(std::move(dims)), conj_(std::move(conj)), table_(std::move(table)) {
  description_ = std::move(description);
  const std::size_t n = names_.size();
  if (n == 0) throw InvalidInput("fusion ring needs at least the unit");
  if (dims_.size() != n || conj_.size() != n || table_.size() != n * n * n)
    throw InvalidInput("fusion ring data sizes do not match the label count");
  for (Label a = 0; a < n; ++a) {
    if (conj_[a] >= n) throw InvalidInput("conj out of range for " + names_[a]);
    if (dims_[a] <= 0) throw InvalidInput("non-positive dimension for " + names_[a]);
  }
  auto problems = check_axioms(*this, labels());
  if (!problems.empty()) throw InvalidInput("fusion ring axioms fail: " + problems.front());
}

std::vector<Label> FiniteRing::labels(std::size_t bound) const {
  std::vector<Label> out(std::min(bound, size()));
  std::iota(out.begin(), out.end(), Label(0));
  return out;
}

std::string FiniteRing::name(Label a) const {
  if (!contains(a)) throw InvalidInput("unknown label " + std::to_string(a));
  return names_[a];
}

Label FiniteRing::find(const std::string& name) const {
  for (Label a = 0; a < size(); ++a)
    if (names_[a] == name) return a;
  throw InvalidInput("unknown label '" + name + "' in " + describe());
}

Rational FiniteRing::dim(Label a) const {
  if (!contains(a)) throw InvalidInput("unknown label " + std::to_string(a));
  return dims_[a];
}

Label FiniteRing::conj(Label a) const {
  if (!contains(a)) throw InvalidInput("unknown label " + std::to_string(a));
  return conj_[a];
}

Multiset FiniteRing::fuse(Label a, Label b) const {
  if (!contains(a) || !contains(b)) throw InvalidInput("unknown label in fuse");
  Multiset m;
  for (Label c = 0; c < size(); ++c)
    if (auto n = table_[idx(a, b, c)]) m.emplace_back(c, n);
  return m;
}

std::string FiniteRing::to_json() const {
  nlohmann::json j;
  j["description"] = describe();
  j["labels"] = nlohmann::json::array();
  for (Label a = 0; a < size(); ++a) j["labels"].push_back({{"id", a}, {"name", names_[a]}, {"dim", dims_[a].get_str()}});
  j["conj"] = nlohmann::json::object();
  for (Label a = 0; a < size(); ++a) j["conj"][std::to_string(a)] = conj_[a];
  j["fusion"] = nlohmann::json::array();
  for (Label a = 0; a < size(); ++a)
    for (Label b = 0; b < size(); ++b)
      for (Label c = 0; c < size(); ++c)
        if (auto n = table_[idx(a, b, c)]) j["fusion"].push_back({a, b, c, n});
  return j.dump(2);
}

FiniteRing FiniteRing::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("ring JSON: ") + e.what());
  }
  try {
    const auto& ls = j.at("labels");
    const std::size_t n = ls.size();
    std::vector<std::string> names(n);
    std::vector<Rational> dims(n);
    std::vector<bool> got(n, false);
    for (const auto& l : ls) {
      auto id = l.at("id").get<std::size_t>();
      if (id >= n || got[id]) throw InvalidInput("ring JSON: label ids must be 0..n-1 without repeats");
      got[id] = true;
      names[id] = l.value("name", std::to_string(id));
      dims[id] = parse_rational_json(l.at("dim"));
    }
    std::vector<Label> conj(n, n);
    for (auto it = j.at("conj").begin(); it != j.at("conj").end(); ++it) {
      auto a = std::stoul(it.key());
      if (a >= n) throw InvalidInput("ring JSON: conj key out of range");
      conj[a] = it.value().is_string() ? std::stoul(it.value().get<std::string>()) : it.value().get<std::size_t>();
    }
    std::vector<unsigned long> table(n * n * n, 0);
    for (const auto& e : j.at("fusion")) {
      auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>(), c = e.at(2).get<std::size_t>();
      if (a >= n || b >= n || c >= n) throw InvalidInput("ring JSON: fusion entry out of range");
      table[(a * n + b) * n + c] = e.at(3).get<unsigned long>();
    }
    return FiniteRing(j.value("description", std::string("ring")), std::move(names), std::move(dims),
                      std::move(conj), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("ring JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- SO(3)

SO3Ring::SO3Ring() { description_ = "Rep(SO(3))"; }

Label SO3Ring::find(const std::string& name) const {
  try {
    std::size_t pos = 0;
    long l = std::stol(name, &pos);
    if (pos != name.size() || l < 0) throw InvalidInput("");
    return static_cast<Label>(l);
  } catch (const std::exception&) {
    throw InvalidInput("SO(3) labels are non-negative integers, got '" + name + "'");
  }
}

Multiset SO3Ring::fuse(Label a, Label b) const {
  Multiset m;
  Label lo = a > b ? a - b : b - a;
  for (Label c = lo; c <= a + b; ++c) m.emplace_back(c, 1);
  return m;
}

// ---------------------------------------------------------------- wreath

namespace {
constexpr std::size_t kV1 = std::numeric_limits<std::size_t>::max();
}

WreathRing::WreathRing(grp::FiniteGroup gamma) : gamma_(std::move(gamma)) {
  if (gamma_.order() < 2) throw InvalidInput("wreath ring needs a nontrivial group");
  description_ = "free wreath " + gamma_.name() + " by Z/2";
  keys_.resize(2);  // 0: v0, 1: v1
}

Label WreathRing::intern(const Key& k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = ids_.emplace(k, keys_.size());
  if (fresh) keys_.push_back(k);
  return it->second;
}

Label WreathRing::v(int eps, const std::vector<std::size_t>& word, int delta) const {
  if (word.empty()) throw InvalidInput("wreath word must be nonempty");
  for (auto g : word)
    if (g == 0 || g >= gamma_.order()) throw InvalidInput("wreath letters must be non-identity group elements");
  if ((eps != 1 && eps != -1) || (delta != 1 && delta != -1)) throw InvalidInput("wreath signs must be +-1");
  return intern(Key{eps, word, delta});
}

WreathRing::Key WreathRing::key(Label a) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (a <= 1 || a >= keys_.size()) throw InvalidInput("not a two-dimensional wreath label");
  return keys_[a];
}

bool WreathRing::contains(Label a) const {
  std::lock_guard<std::mutex> lock(mu_);
  return a < keys_.size();
}

std::string WreathRing::name(Label a) const {
  if (a == 0) return "v0";
  if (a == 1) return "v1";
  Key k = key(a);
  std::string s = std::string("v(") + (k.eps > 0 ? "+" : "-") + ",";
  for (std::size_t i = 0; i < k.word.size(); ++i) {
    if (i) s += " v1 ";
    s += gamma_.element_name(k.word[i]);
  }
  return s + "," + (k.delta > 0 ? "+" : "-") + ")";
}

Label WreathRing::find(const std::string& name) const {
  if (name == "v0") return 0;
  if (name == "v1") return 1;
  if (name.size() < 7 || name.rfind("v(", 0) != 0 || name.back() != ')')
    throw InvalidInput("bad wreath label '" + name + "'");
  std::string body = name.substr(2, name.size() - 3);
  auto c1 = body.find(','), c2 = body.rfind(',');
  if (c1 == std::string::npos || c1 == c2) throw InvalidInput("bad wreath label '" + name + "'");
  std::string e = body.substr(0, c1), w = body.substr(c1 + 1, c2 - c1 - 1), d = body.substr(c2 + 1);
  std::vector<std::size_t> word;
  std::istringstream is(w);
  std::string tok;
  bool expect_letter = true;
  while (is >> tok) {
    if (!expect_letter) {
      if (tok != "v1") throw InvalidInput("wreath word letters must alternate with v1: '" + w + "'");
      expect_letter = true;
      continue;
    }
    std::size_t g = gamma_.order();
    for (std::size_t x = 1; x < gamma_.order(); ++x)
      if (gamma_.element_name(x) == tok) g = x;
    if (g == gamma_.order()) throw InvalidInput("unknown group letter '" + tok + "'");
    word.push_back(g);
    expect_letter = false;
  }
  if (expect_letter) throw InvalidInput("wreath word must end with a group letter: '" + w + "'");
  auto sign = [&](const std::string& s) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw InvalidInput("wreath sign must be + or -");
  };
  return v(sign(e), word, sign(d));
}

Label WreathRing::conj(Label a) const {
  if (a <= 1) return a;
  Key k = key(a);
  std::vector<std::size_t> w;
  for (auto it = k.word.rbegin(); it != k.word.rend(); ++it) w.push_back(gamma_.inv(*it));
  return v(k.delta, w, k.eps);
}

std::vector<Label> WreathRing::generators() const {
  std::vector<Label> g{1};
  for (std::size_t x = 1; x < gamma_.order(); ++x) g.push_back(v(1, {x}, 1));
  return g;
}

Multiset WreathRing::fuse(Label a, Label b) const {
  if (!contains(a) || !contains(b)) throw InvalidInput("unknown wreath label");
  if (a == 0) return {{b, 1}};
  if (b == 0) return {{a, 1}};
  if (a == 1 && b == 1) return {{0, 1}};
  if (a == 1) {
    Key k = key(b);
    return {{v(-k.eps, k.word, k.delta), 1}};
  }
  if (b == 1) {
    Key k = key(a);
    return {{v(k.eps, k.word, -k.delta), 1}};
  }
  Key g = key(a), h = key(b);
  Multiset m;
  std::vector<std::size_t> joined = g.word;
  joined.insert(joined.end(), h.word.begin(), h.word.end());
  // g v1 h is already reduced
  add_mult(m, v(g.eps, joined, h.delta), 1);
  // gh: free-product reduction of the letter stream g0 v1 ... gn h0 v1 ... hm
  std::vector<std::size_t> stream;
  for (std::size_t i = 0; i < g.word.size(); ++i) {
    if (i) stream.push_back(kV1);
    stream.push_back(g.word[i]);
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < h.word.size(); ++i) {
    if (i) rest.push_back(kV1);
    rest.push_back(h.word[i]);
  }
  for (auto x : rest) {
    if (stream.empty()) {
      stream.push_back(x);
      continue;
    }
    auto top = stream.back();
    if (x == kV1 && top == kV1) {
      stream.pop_back();
    } else if (x != kV1 && top != kV1) {
      auto p = gamma_.mul(top, x);
      stream.pop_back();
      if (p != 0) stream.push_back(p);
    } else {
      stream.push_back(x);
    }
  }
  if (stream.empty()) {
    add_mult(m, 1, 1);
    add_mult(m, 0, 1);
    return m;
  }
  // leading or trailing v1 is absorbed into the signs
  int eps = g.eps, delta = h.delta;
  if (stream.front() == kV1) {
    eps = -eps;
    stream.erase(stream.begin());
  }
  if (!stream.empty() && stream.back() == kV1) {
    delta = -delta;
    stream.pop_back();
  }
  if (stream.empty()) throw ConsistencyError("wreath reduction left a bare v1");
  std::vector<std::size_t> letters;
  for (auto x : stream)
    if (x != kV1) letters.push_back(x);
  add_mult(m, v(eps, letters, delta), 1);
  return m;
}

// ---------------------------------------------------------------- constructors

std::shared_ptr<FiniteRing> pointed_ring(const grp::FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::string> names;
  std::vector<Rational> dims(n, Rational(1));
  std::vector<Label> conj(n);
  std::vector<unsigned long> table(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(g.element_name(a));
    conj[a] = g.inv(a);
    for (std::size_t b = 0; b < n; ++b) table[(a * n + b) * n + g.mul(a, b)] = 1;
  }
  return std::make_shared<FiniteRing>("Vec(" + g.name() + ")", std::move(names), std::move(dims), std::move(conj),
                                      std::move(table));
}

std::size_t CharTable::group_order() const {
  return std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t(0));
}

CharTable CharTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    CharTable t;
    t.root = j.value("root", 1u);
    for (const auto& c : j.at("classes")) {
      t.class_sizes.push_back(c.at("size").get<std::size_t>());
      t.class_orders.push_back(c.value("order", std::size_t(0)));
    }
    for (const auto& row : j.at("chars")) {
      std::vector<Cyclotomic> r;
      for (const auto& e : row) {
        if (e.is_number_integer()) r.emplace_back(Rational(e.get<long>()));
        else r.push_back(Cyclotomic::parse(e.get<std::string>(), t.root));
      }
      if (r.size() != t.class_sizes.size()) throw InvalidInput("character row length mismatch");
      t.chars.push_back(std::move(r));
    }
    if (j.contains("names")) t.names = j.at("names").get<std::vector<std::string>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("character table JSON: ") + e.what());
  }
}

CharTable builtin_char_table(const std::string& name) {
  if (name == "s3") {
    return CharTable::from_json(R"({"root":1,
      "classes":[{"size":1,"order":1},{"size":3,"order":2},{"size":2,"order":3}],
      "chars":[["1","1","1"],["1","-1","1"],["2","0","-1"]],
      "names":["eps","sgn","rho"]})");
  }
  if (name == "a4") {
    return CharTable::from_json(R"({"root":3,
      "classes":[{"size":1,"order":1},{"size":3,"order":2},{"size":4,"order":3},{"size":4,"order":3}],
      "chars":[["1","1","1","1"],["1","1","w","w^2"],["1","1","w^2","w"],["3","-1","0","0"]],
      "names":["eps","w1","w2","pi"]})");
  }
  if (name.size() > 1 && (name[0] == 'z' || name[0] == 'Z')) {
    unsigned n = static_cast<unsigned>(std::stoul(name.substr(name[1] == '/' ? 2 : 1)));
    CharTable t;
    t.root = n;
    for (unsigned k = 0; k < n; ++k) {
      t.class_sizes.push_back(1);
      t.class_orders.push_back(n / std::gcd(k, n));
    }
    for (unsigned m = 0; m < n; ++m) {
      std::vector<Cyclotomic> row;
      for (unsigned k = 0; k < n; ++k) row.push_back(Cyclotomic::zeta(n, static_cast<long>(m * k)));
      t.chars.push_back(std::move(row));
      t.names.push_back(m == 0 ? "eps" : "chi" + std::to_string(m));
    }
    return t;
  }
  throw InvalidInput("no built-in character table '" + name + "'");
}

std::shared_ptr<FiniteRing> rep_ring(const CharTable& t, const std::string& description) {
  const std::size_t r = t.chars.size();
  if (r == 0 || r != t.class_sizes.size()) throw InvalidInput("character table must be square");
  if (t.class_sizes[0] != 1) throw InvalidInput("class 0 must be the identity class");
  const Rational order(static_cast<long>(t.group_order()));
  auto inner = [&](const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
    Cyclotomic s(0);
    for (std::size_t c = 0; c < r; ++c) s += Cyclotomic(Rational(static_cast<long>(t.class_sizes[c]))) * x[c] * y[c].conj();
    return s / Cyclotomic(order);
  };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (inner(t.chars[a], t.chars[b]) != Cyclotomic(a == b ? 1 : 0))
        throw InvalidInput("characters " + std::to_string(a) + "," + std::to_string(b) + " are not orthonormal");
  // the trivial character goes first
  std::vector<std::size_t> order_idx(r);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::size_t triv = r;
  for (std::size_t a = 0; a < r && triv == r; ++a) {
    bool all_one = true;
    for (const auto& x : t.chars[a]) all_one = all_one && x == Cyclotomic(1);
    if (all_one) triv = a;
  }
  if (triv == r) throw InvalidInput("character table lacks the trivial character");
  std::swap(order_idx[0], order_idx[triv]);
  std::vector<std::string> names;
  std::vector<Rational> dims;
  for (auto a : order_idx) {
    names.push_back(a < t.names.size() ? t.names[a] : "chi" + std::to_string(a));
    if (!t.chars[a][0].is_rational()) throw InvalidInput("character degree must be rational");
    dims.push_back(t.chars[a][0].rational_part());
  }
  std::vector<Label> conj(r, r);
  std::vector<unsigned long> table(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& ca = t.chars[order_idx[i]];
    std::vector<Cyclotomic> cc;
    for (const auto& x : ca) cc.push_back(x.conj());
    for (std::size_t j = 0; j < r; ++j)
      if (t.chars[order_idx[j]] == cc) conj[i] = j;
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Cyclotomic> prod;
      for (std::size_t c = 0; c < r; ++c) prod.push_back(ca[c] * t.chars[order_idx[j]][c]);
      for (std::size_t k = 0; k < r; ++k) {
        Cyclotomic n = inner(prod, t.chars[order_idx[k]]);
        if (!n.is_rational() || n.rational_part() < 0 || n.rational_part().get_den() != 1)
          throw InvalidInput("character products do not decompose with natural multiplicities");
        table[(i * r + j) * r + k] = n.rational_part().get_num().get_ui();
      }
    }
  }
  return std::make_shared<FiniteRing>(description, std::move(names), std::move(dims), std::move(conj), std::move(table));
}

// ---------------------------------------------------------------- operations

Multiset fuse(const FusionRing& ring, Label a, Label b) {
  if (!ring.contains(a) || !ring.contains(b)) throw InvalidInput("fuse: unknown label");
  return ring.fuse(a, b);
}

Multiset decompose_word(const FusionRing& ring, const std::vector<Label>& word) {
  Multiset cur{{ring.unit(), 1}};
  for (Label x : word) {
    if (!ring.contains(x)) throw InvalidInput("word contains an unknown label");
    Multiset next;
    for (const auto& [a, n] : cur)
      for (const auto& [c, m] : ring.fuse(a, x)) add_mult(next, c, n * m);
    cur = std::move(next);
  }
  return cur;
}

unsigned long mult_in_word(const FusionRing& ring, Label gamma, const std::vector<Label>& word) {
  if (!ring.contains(gamma)) throw InvalidInput("mult_in_word: unknown label");
  for (const auto& [c, n] : decompose_word(ring, word))
    if (c == gamma) return n;
  return 0;
}

std::vector<Label> sub_members(const FusionRing& ring, const SubcategorySpec& sub) {
  if (!sub.whole) return {sub.members.begin(), sub.members.end()};
  if (!ring.finite()) throw InvalidInput("cannot list the whole of a lazy ring");
  return ring.labels();
}

void validate_sub(const FusionRing& ring, const SubcategorySpec& sub) {
  if (sub.whole) return;
  if (!sub.contains(ring.unit())) throw InvalidInput("subcategory must contain the unit");
  for (Label a : sub.members) {
    if (!ring.contains(a)) throw InvalidInput("subcategory member " + std::to_string(a) + " is not a label");
    if (!sub.contains(ring.conj(a))) throw InvalidInput("subcategory not closed under conj at " + ring.name(a));
    for (Label b : sub.members)
      for (const auto& [c, n] : ring.fuse(a, b)) {
        (void)n;
        if (!sub.contains(c))
          throw InvalidInput("subcategory not closed: " + ring.name(c) + " < " + ring.name(a) + " x " + ring.name(b));
      }
  }
}

Orbits orbits(const FusionRing& ring, const SubcategorySpec& sub, std::size_t bound) {
  validate_sub(ring, sub);
  Orbits out;
  std::vector<Label> ls = ring.labels(ring.finite() ? kUnbounded : bound);
  if (!ring.finite()) out.complete = false;
  if (sub.whole) {
    out.blocks.push_back(ls);
    out.complete = ring.finite();
    return out;
  }
  std::map<Label, std::size_t> pos;
  for (std::size_t i = 0; i < ls.size(); ++i) pos[ls[i]] = i;
  std::vector<std::size_t> parent(ls.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (Label g : sub.members)
      for (const auto& [b, n] : ring.fuse(ls[i], g)) {
        (void)n;
        auto it = pos.find(b);
        if (it == pos.end()) continue;
        auto r1 = root(i), r2 = root(it->second);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
      }
  std::map<std::size_t, std::vector<Label>> groups;
  for (std::size_t i = 0; i < ls.size(); ++i) groups[root(i)].push_back(ls[i]);
  for (auto& [r, g] : groups) out.blocks.push_back(std::move(g));
  return out;
}

Rational sub_dim(const FusionRing& ring, const SubcategorySpec& sub, const std::vector<Label>& word) {
  Rational s = 0;
  for (const auto& [c, n] : decompose_word(ring, word))
    if (sub.contains(c)) s += ring.dim(c) * Rational(static_cast<long>(n));
  return s;
}

Rational orbit_weight(const FusionRing& ring, const SubcategorySpec& sub, Label a) {
  Rational d = ring.dim(a);
  return sub_dim(ring, sub, {ring.conj(a), a}) / (d * d);
}

std::string IndexResult::str() const {
  switch (kind) {
    case Kind::Finite: return value.get_str();
    case Kind::Infinite: return "inf";
    default: return "undetermined (" + reason + ")";
  }
}

IndexResult index(const FusionRing& ring, const SubcategorySpec& sub, std::size_t bound) {
  IndexResult r;
  if (sub.whole) {
    validate_sub(ring, sub);
    r.kind = IndexResult::Kind::Finite;
    r.value = 1;
    return r;
  }
  if (!ring.finite()) {
    validate_sub(ring, sub);
    r.kind = IndexResult::Kind::Undetermined;
    r.reason = "bound exceeded: lazy ring explored to " + std::to_string(bound) + " labels without closing the orbit set";
    return r;
  }
  Orbits o = orbits(ring, sub, bound);
  Rational s = 0;
  for (const auto& block : o.blocks) {
    Label a = block.front();
    Rational d = ring.dim(a);
    s += d * d / sub_dim(ring, sub, {ring.conj(a), a});
  }
  r.kind = IndexResult::Kind::Finite;
  r.value = s;
  return r;
}

void validate_grading(const FusionRing& ring, const Grading& gr, std::size_t bound) {
  const auto& G = gr.target;
  auto ls = ring.labels(ring.finite() ? kUnbounded : bound);
  auto xi = [&](Label a) {
    std::size_t x = gr.xi(a);
    if (x >= G.order()) throw InvalidInput("grading value out of range at " + ring.name(a));
    return x;
  };
  if (xi(ring.unit()) != G.identity()) throw InvalidInput("grading must send the unit to e");
  for (Label a : ls) {
    if (xi(ring.conj(a)) != G.inv(xi(a))) throw InvalidInput("grading violates Xi(conj a) = Xi(a)^-1 at " + ring.name(a));
    for (Label b : ls)
      for (const auto& [c, n] : ring.fuse(a, b)) {
        (void)n;
        if (xi(c) != G.mul(xi(a), xi(b)))
          throw InvalidInput("grading violated by triple (" + ring.name(a) + ", " + ring.name(b) + ", " +
                             ring.name(c) + ")");
      }
  }
}

SubcategorySpec grading_kernel(const FusionRing& ring, const Grading& gr) {
  if (!ring.finite()) throw InvalidInput("grading kernel is only listed for finite rings");
  validate_grading(ring, gr);
  SubcategorySpec s;
  for (Label a : ring.labels())
    if (gr.xi(a) == gr.target.identity()) s.members.insert(a);
  return s;
}

SubcategorySpec unit_radical(const FusionRing& ring, int bound) {
  if (!ring.finite()) throw InvalidInput("unit radical needs a finite ring");
  const auto ls = ring.labels();
  SubcategorySpec out;
  out.members.insert(ring.unit());
  // supports of a1...ak, propagated as sets
  std::set<std::set<Label>> level{{ring.unit()}};
  for (int k = 1; k <= bound; ++k) {
    std::set<std::set<Label>> next;
    for (const auto& S : level)
      for (Label a : ls) {
        std::set<Label> T;
        for (Label b : S)
          for (const auto& [c, n] : ring.fuse(b, a)) {
            (void)n;
            T.insert(c);
          }
        next.insert(std::move(T));
      }
    for (const auto& S : next)
      for (Label b : S)
        for (Label b2 : S)
          for (const auto& [c, n] : ring.fuse(b, ring.conj(b2))) {
            (void)n;
            out.members.insert(c);
          }
    level = std::move(next);
  }
  // fusion closure
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Label> cur(out.members.begin(), out.members.end());
    for (Label a : cur)
      for (Label b : cur)
        for (const auto& [c, n] : ring.fuse(a, b)) {
          (void)n;
          grew = out.members.insert(c).second || grew;
        }
  }
  return out;
}

std::vector<std::string> check_axioms(const FusionRing& ring, const std::vector<Label>& ls) {
  std::vector<std::string> bad;
  const Label e = ring.unit();
  std::set<Label> in(ls.begin(), ls.end());
  for (Label a : ls) {
    const std::string an = ring.name(a);
    if (ring.conj(ring.conj(a)) != a) bad.push_back("conj(conj(" + an + ")) != " + an);
    if (ring.dim(ring.conj(a)) != ring.dim(a)) bad.push_back("dim(conj(" + an + ")) != dim(" + an + ")");
    if (ring.fuse(a, e) != Multiset{{a, 1}} || ring.fuse(e, a) != Multiset{{a, 1}}) bad.push_back("unit fails on " + an);
    for (Label b : ls) {
      const Multiset ab = ring.fuse(a, b);
      Rational total = 0;
      unsigned long to_unit = 0;
      for (const auto& [c, n] : ab) {
        total += ring.dim(c) * Rational(static_cast<long>(n));
        if (c == e) to_unit = n;
        if (!in.count(c)) continue;
        if (ring.N(ring.conj(a), c, b) != n || ring.N(c, ring.conj(b), a) != n)
          bad.push_back("Frobenius symmetry fails at (" + an + ", " + ring.name(b) + ", " + ring.name(c) + ")");
      }
      if (total != ring.dim(a) * ring.dim(b)) bad.push_back("dimension fails at " + an + " x " + ring.name(b));
      if (to_unit != (b == ring.conj(a) ? 1u : 0u))
        bad.push_back("N(" + an + ", " + ring.name(b) + ", unit) != [b = conj a]");
    }
  }
  return bad;
}

}  // namespace qsym::fusion
