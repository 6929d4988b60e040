#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qsym::grp {

/// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates closure, identity at index 0, inverses and associativity.
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> mul,
              std::vector<std::string> element_names = {});

  static FiniteGroup cyclic(std::size_t n);
  /// Closure of permutations of {0..m-1}; mul(g,h) applies h first.
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& gens,
                                       std::vector<std::vector<int>>* elements_out = nullptr);
  static FiniteGroup symmetric3();
  static FiniteGroup alternating4();
  /// {"order": n, "mul": [[...], ...]}
  static FiniteGroup from_json(const std::string& text);

  const std::string& name() const { return name_; }
  std::size_t order() const { return mul_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return mul_[g][h]; }
  std::size_t inv(std::size_t g) const { return inv_[g]; }
  std::size_t identity() const { return 0; }
  std::size_t element_order(std::size_t g) const;
  const std::string& element_name(std::size_t g) const { return names_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }
  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::string> names_;
};

}  // namespace qsym::grp
