#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbicat {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group given by its Cayley table. Elements are indices
/// 0..order()-1; `table()[a][b]` is the product a*b.
class AbstractGroup {
 public:
  /// Validates closure, identity, inverses and associativity. Throws
  /// GroupError naming the first failing axiom.
  AbstractGroup(std::string name, std::vector<std::string> elements, std::vector<std::vector<int>> table);

  static AbstractGroup trivial();

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(names_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int h, int g) const { return mul(mul(h, g), inverse(h)); }
  int elementOrder(int a) const { return orders_[a]; }
  bool isAbelian() const;

  const std::string& elementName(int a) const { return names_[a]; }
  const std::vector<std::string>& elementNames() const { return names_; }
  /// Throws GroupError for unknown names.
  int indexOf(std::string_view element) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  void rename(std::string name) { name_ = std::move(name); }

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  int identity_ = 0;
};

/// Element-wise mapping between groups, indexed by domain element.
using GroupMap = std::vector<int>;

// Standard groups. Cyclic and dihedral elements are named as words in
// r (rotation) and s (reflection): 1, r, r2, ..., s, sr, sr2, ...
AbstractGroup cyclicGroup(int n);
/// Dihedral group of the given order (2m), i.e. symmetries of an m-gon.
AbstractGroup dihedralGroup(int order);
AbstractGroup directProduct(const AbstractGroup& a, const AbstractGroup& b);
/// Closure of the given permutations of {0..n-1}; elements are named by
/// shortest words in `generatorNames`, the identity by "1".
AbstractGroup groupFromPermutations(std::string name, const std::vector<std::vector<int>>& generators,
                                    const std::vector<std::string>& generatorNames);
AbstractGroup symmetricGroup(int n);
AbstractGroup quaternionGroup();
AbstractGroup alternatingGroup4();
AbstractGroup dicyclicGroup12();

/// Builtin names: Z<n>, D<2m>, S<n>, V4, Q8, A4, Dic12 and products joined
/// by 'x' (e.g. Z2xZ2). Throws GroupError for anything else.
AbstractGroup namedGroup(std::string_view name);

// Subgroups are sorted element lists of an ambient group.
using Subgroup = std::vector<int>;

bool isSubgroup(const AbstractGroup& g, std::span<const int> elements);
Subgroup generatedSubgroup(const AbstractGroup& g, std::span<const int> generators);
Subgroup centralizer(const AbstractGroup& g, int element);
Subgroup fullSubgroup(const AbstractGroup& g);
Subgroup trivialSubgroup(const AbstractGroup& g);
/// The subgroup as a group in its own right; element names are inherited.
AbstractGroup subgroupAsGroup(const AbstractGroup& g, const Subgroup& elements, std::string name = {});

std::vector<std::vector<int>> conjugacyClasses(const AbstractGroup& g);
int classNumber(const AbstractGroup& g);
/// Sorted multiset of element orders.
std::vector<int> orderProfile(const AbstractGroup& g);
int commutatorSubgroupOrder(const AbstractGroup& g);

bool isHomomorphism(const AbstractGroup& from, const AbstractGroup& to, const GroupMap& map);
bool isInjective(const GroupMap& map, int codomainOrder);

/// Injective homomorphism from `a` into `b`, if any. Deterministic: returns
/// the lexicographically least image assignment on a fixed generating set.
std::optional<GroupMap> findEmbedding(const AbstractGroup& a, const AbstractGroup& b);
/// Isomorphism a -> b, if any. Screens by order, element-order profile,
/// class number and abelianization before backtracking.
std::optional<GroupMap> findIsomorphism(const AbstractGroup& a, const AbstractGroup& b);

}  // namespace orbicat
