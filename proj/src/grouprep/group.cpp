#include "qsym/grouprep/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "qsym/error.hpp"

namespace qsym::grp {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> mul,
                         std::vector<std::string> element_names)
    : name_(std::move(name)), mul_(std::move(mul)), names_(std::move(element_names)) {
  const std::size_t n = mul_.size();
  if (n == 0) throw InvalidInput("group must be nonempty");
  for (const auto& row : mul_) {
    if (row.size() != n) throw InvalidInput("multiplication table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidInput("multiplication table entry out of range");
  }
  for (std::size_t g = 0; g < n; ++g)
    if (mul_[0][g] != g || mul_[g][0] != g) throw InvalidInput("element 0 is not the identity");
  inv_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (mul_[g][h] == 0 && mul_[h][g] == 0) inv_[g] = h;
  for (std::size_t g = 0; g < n; ++g)
    if (inv_[g] == n) throw InvalidInput("element " + std::to_string(g) + " has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw InvalidInput("multiplication is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  if (names_.empty())
    for (std::size_t g = 0; g < n; ++g) names_.push_back(g == 0 ? "e" : "g" + std::to_string(g));
  if (names_.size() != n) throw InvalidInput("element name count mismatch");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "g" + (a == 1 ? std::string() : "^" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup("Z/" + std::to_string(n), std::move(mul), std::move(names));
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<int>>& gens,
                                           std::vector<std::vector<int>>* elements_out) {
  if (gens.empty()) throw InvalidInput("need at least one generator");
  const std::size_t m = gens[0].size();
  std::vector<int> id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i);
  auto compose = [&](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(m);
    for (std::size_t x = 0; x < m; ++x) r[x] = g[h[x]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, std::size_t> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      auto e = compose(g, elems[k]);
      if (index.emplace(e, elems.size()).second) elems.push_back(e);
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    for (std::size_t x = 0; x < m; ++x) s += std::to_string(elems[a][x] + 1);
    names.push_back(s + ")");
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(compose(elems[a], elems[b]));
  }
  if (elements_out) *elements_out = elems;
  return FiniteGroup(std::move(name), std::move(mul), std::move(names));
}

FiniteGroup FiniteGroup::symmetric3() {
  return from_permutations("S3", {{1, 2, 0}, {1, 0, 2}});
}

FiniteGroup FiniteGroup::alternating4() {
  return from_permutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

FiniteGroup FiniteGroup::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("group JSON: ") + e.what());
  }
  if (!j.contains("mul")) throw InvalidInput("group JSON needs a 'mul' table");
  auto mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != mul.size())
    throw InvalidInput("group JSON order does not match the table");
  std::string name = j.value("name", std::string("G"));
  return FiniteGroup(name, std::move(mul));
}

std::size_t FiniteGroup::element_order(std::size_t g) const {
  std::size_t k = 1, x = g;
  while (x != 0) {
    x = mul_[x][g];
    ++k;
  }
  return k;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  const std::size_t n = order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < n; ++g) {
    if (done[g]) continue;
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) cls.insert(mul_[mul_[h][g]][inv_[h]]);
    for (auto x : cls) done[x] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

}  // namespace qsym::grp
