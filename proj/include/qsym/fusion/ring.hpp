#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsym/grouprep/group.hpp"
#include "qsym/scalar/cyclotomic.hpp"
#include "qsym/scalar/poly.hpp"

namespace qsym::fusion {

/// Opaque label of an irreducible; 0 is always the unit.
using Label = std::size_t;
/// (label, multiplicity) pairs sorted by label, multiplicities positive.
using Multiset = std::vector<std::pair<Label, unsigned long>>;

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

class FusionRing {
 public:
  virtual ~FusionRing() = default;

  Label unit() const { return 0; }
  virtual bool finite() const = 0;
  /// Finite rings: every label. Lazy rings: breadth-first from the generators, at most `bound`.
  virtual std::vector<Label> labels(std::size_t bound = kUnbounded) const;
  virtual std::string name(Label a) const = 0;
  /// Inverse of name(); throws InvalidInput for unknown names.
  virtual Label find(const std::string& name) const = 0;
  virtual bool contains(Label a) const = 0;
  virtual Rational dim(Label a) const = 0;
  virtual Label conj(Label a) const = 0;
  virtual Multiset fuse(Label a, Label b) const = 0;
  /// Labels whose tensor powers reach everything (used by lazy enumeration).
  virtual std::vector<Label> generators() const = 0;

  unsigned long N(Label a, Label b, Label c) const;
  std::string describe() const { return description_; }

 protected:
  std::string description_;
};

/// Explicit finite ring with a dense fusion table.
class FiniteRing : public FusionRing {
 public:
  /// Validates the unit, conjugation and dimension axioms; throws InvalidInput.
  FiniteRing(std::string description, std::vector<std::string> names, std::vector<Rational> dims,
             std::vector<Label> conj, std::vector<unsigned long> table);

  bool finite() const override { return true; }
  std::size_t size() const { return names_.size(); }
  std::vector<Label> labels(std::size_t bound = kUnbounded) const override;
  std::string name(Label a) const override;
  Label find(const std::string& name) const override;
  bool contains(Label a) const override { return a < names_.size(); }
  Rational dim(Label a) const override;
  Label conj(Label a) const override;
  Multiset fuse(Label a, Label b) const override;
  std::vector<Label> generators() const override { return labels(); }

  /// {labels:[{id,name,dim}], conj:{id:id}, fusion:[[a,b,c,n],...]}
  std::string to_json() const;
  static FiniteRing from_json(const std::string& text);

 private:
  std::size_t idx(Label a, Label b, Label c) const { return (a * size() + b) * size() + c; }
  std::vector<std::string> names_;
  std::vector<Rational> dims_;
  std::vector<Label> conj_;
  std::vector<unsigned long> table_;
};

/// Irreducible representations of SO(3): label l has dimension 2l+1.
class SO3Ring : public FusionRing {
 public:
  SO3Ring();
  bool finite() const override { return false; }
  std::string name(Label a) const override { return std::to_string(a); }
  Label find(const std::string& name) const override;
  bool contains(Label) const override { return true; }
  Rational dim(Label a) const override { return Rational(2 * static_cast<long>(a) + 1); }
  Label conj(Label a) const override { return a; }
  Multiset fuse(Label a, Label b) const override;
  std::vector<Label> generators() const override { return {1}; }
};

/// Labels of the free wreath product of a finite group Gamma by Z/2, with the
/// fusion rules applied to greedily reduced words. Label 0 is v0, 1 is v1.
class WreathRing : public FusionRing {
 public:
  explicit WreathRing(grp::FiniteGroup gamma);

  /// Interned label v(eps, g0 v1 g1 ... v1 gn, delta); letters must be non-identity.
  Label v(int eps, const std::vector<std::size_t>& word, int delta) const;

  bool finite() const override { return false; }
  std::string name(Label a) const override;
  Label find(const std::string& name) const override;
  bool contains(Label a) const override;
  Rational dim(Label a) const override { return a <= 1 ? Rational(1) : Rational(2); }
  Label conj(Label a) const override;
  Multiset fuse(Label a, Label b) const override;
  std::vector<Label> generators() const override;

  struct Key {
    int eps = 1;
    std::vector<std::size_t> word;
    int delta = 1;
    auto operator<=>(const Key&) const = default;
  };
  Key key(Label a) const;
  const grp::FiniteGroup& gamma() const { return gamma_; }

 private:
  Label intern(const Key& k) const;
  grp::FiniteGroup gamma_;
  mutable std::mutex mu_;
  mutable std::map<Key, Label> ids_;
  mutable std::vector<Key> keys_;
};

std::shared_ptr<FiniteRing> pointed_ring(const grp::FiniteGroup& g);

/// Character table over Q(zeta_root); class 0 must be the identity class.
struct CharTable {
  unsigned root = 1;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_orders;
  std::vector<std::vector<Cyclotomic>> chars;
  std::vector<std::string> names;

  /// {root, classes:[{size,order}], chars:[["a+b*w",...],...], names:[...]}
  static CharTable from_json(const std::string& text);
  std::size_t group_order() const;
};

/// Built-in tables: "z<n>", "s3", "a4".
CharTable builtin_char_table(const std::string& name);
std::shared_ptr<FiniteRing> rep_ring(const CharTable& table, const std::string& description = "Rep(G)");

/// Validated fusion product.
Multiset fuse(const FusionRing& ring, Label a, Label b);
/// Multiplicity of gamma in the left-to-right tensor product of `word`.
unsigned long mult_in_word(const FusionRing& ring, Label gamma, const std::vector<Label>& word);
/// Full decomposition of the left-to-right product of `word`.
Multiset decompose_word(const FusionRing& ring, const std::vector<Label>& word);

struct SubcategorySpec {
  std::set<Label> members;
  /// Stands for every label of the ring (also for lazy rings).
  bool whole = false;

  static SubcategorySpec all() { return {{}, true}; }
  bool contains(Label a) const { return whole || members.count(a) > 0; }
};

/// Throws InvalidInput unless sub contains the unit and is closed under conj and fusion.
void validate_sub(const FusionRing& ring, const SubcategorySpec& sub);
/// Members of a finite ring's subcategory, sorted.
std::vector<Label> sub_members(const FusionRing& ring, const SubcategorySpec& sub);

struct Orbits {
  std::vector<std::vector<Label>> blocks;
  /// False when a lazy ring was only explored up to the bound.
  bool complete = true;
};
/// Right-tensoring orbits alpha . C1 (finite rings; lazy rings explored up to bound labels).
Orbits orbits(const FusionRing& ring, const SubcategorySpec& sub, std::size_t bound = 256);

/// d of the largest subobject of the word lying in sub.
Rational sub_dim(const FusionRing& ring, const SubcategorySpec& sub, const std::vector<Label>& word);

struct IndexResult {
  enum class Kind { Finite, Infinite, Undetermined } kind = Kind::Undetermined;
  Rational value;
  std::string reason;
  std::string str() const;
};
IndexResult index(const FusionRing& ring, const SubcategorySpec& sub, std::size_t bound = 256);

/// d([conj(a) a]_sub) / d(a)^2; constant on orbits.
Rational orbit_weight(const FusionRing& ring, const SubcategorySpec& sub, Label a);

struct Grading {
  grp::FiniteGroup target;
  std::function<std::size_t(Label)> xi;
};
/// Checks the grading on all labels (lazy: the first `bound`); throws InvalidInput naming the triple.
void validate_grading(const FusionRing& ring, const Grading& grading, std::size_t bound = 64);
/// Kernel of a validated grading on a finite ring.
SubcategorySpec grading_kernel(const FusionRing& ring, const Grading& grading);

/// Labels below a1...ak conj(ak)...conj(a1) for k <= bound, closed under fusion.
SubcategorySpec unit_radical(const FusionRing& ring, int bound);

/// Axiom violations among the given labels (unit, conj, Frobenius symmetry, dimension).
std::vector<std::string> check_axioms(const FusionRing& ring, const std::vector<Label>& labels);

}  // namespace qsym::fusion
