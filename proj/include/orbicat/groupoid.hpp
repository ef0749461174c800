#pragma once

#include "orbicat/group.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbicat {

class GroupoidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unvalidated groupoid description keyed by opaque string ids.
struct RawGroupoid {
  struct Arrow {
    std::string id, source, target;
  };
  struct Composition {
    std::string left, right, result;  // left ∘ right = result
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> units;     // object -> arrow
  std::vector<std::pair<std::string, std::string>> inverses;  // arrow -> arrow
  std::vector<Composition> compositions;
};

struct ArrowRecord {
  std::string id;
  int source = 0;
  int target = 0;
};

class GroupoidBuilder;

/// A finite groupoid with explicit composition table. Immutable once built;
/// objects and arrows are addressed by index.
class FiniteGroupoid {
 public:
  int objectCount() const { return static_cast<int>(objects_.size()); }
  int arrowCount() const { return static_cast<int>(arrows_.size()); }

  const std::string& objectId(int x) const { return objects_[x]; }
  const std::string& arrowId(int a) const { return arrows_[a].id; }
  const std::vector<std::string>& objectIds() const { return objects_; }
  const ArrowRecord& arrow(int a) const { return arrows_[a]; }
  int source(int a) const { return arrows_[a].source; }
  int target(int a) const { return arrows_[a].target; }
  int unit(int x) const { return unit_[x]; }
  int inverse(int a) const { return inverse_[a]; }
  bool isUnit(int a) const { return unit_[source(a)] == a; }

  /// a ∘ b; requires target(b) == source(a). Throws GroupoidError otherwise.
  int compose(int a, int b) const;
  std::optional<int> tryCompose(int a, int b) const;

  /// Throws GroupoidError for unknown ids.
  int objectIndex(const std::string& id) const;
  int arrowIndex(const std::string& id) const;
  std::optional<int> findObject(const std::string& id) const;

  const std::vector<int>& arrowsFrom(int x) const { return outgoing_[x]; }
  std::vector<int> arrowsBetween(int x, int y) const;

 private:
  friend class GroupoidBuilder;
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  std::vector<std::string> objects_;
  std::vector<ArrowRecord> arrows_;
  std::vector<int> unit_;
  std::vector<int> inverse_;
  std::unordered_map<std::uint64_t, int> compose_;
  std::vector<std::vector<int>> outgoing_;
  std::unordered_map<std::string, int> objectIndex_;
  std::unordered_map<std::string, int> arrowIndex_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Index-based assembly used by constructions whose structure is correct by
/// construction. `build` checks ids, endpoints and table coverage but not
/// associativity; use `checkGroupoidAxioms` for the exhaustive audit.
class GroupoidBuilder {
 public:
  int addObject(std::string id);
  int addArrow(std::string id, int source, int target);
  void setUnit(int object, int arrow);
  void setInverse(int arrow, int inverse);
  void setCompose(int left, int right, int result);
  /// Capacity hint for the composition table.
  void reserveCompositions(std::size_t n);
  int objectCount() const { return static_cast<int>(g_.objects_.size()); }
  int arrowCount() const { return static_cast<int>(g_.arrows_.size()); }
  GroupoidPtr build();

 private:
  FiniteGroupoid g_;
};

/// Exhaustive check of unit, inverse, endpoint and associativity laws.
/// Throws GroupoidError naming the offending arrows.
void checkGroupoidAxioms(const FiniteGroupoid& g);

/// Builds and fully validates a groupoid from a raw description.
GroupoidPtr validateGroupoid(const RawGroupoid& raw);

/// Orbit blocks, each sorted by object index, ordered by least member.
std::vector<std::vector<int>> orbits(const FiniteGroupoid& g);
/// orbitOf[x] = index of x's block in `orbits(g)`.
std::vector<int> orbitIndex(const FiniteGroupoid& g);

/// Isotropy group at x; elements are the loops at x (named by arrow id).
AbstractGroup isotropy(const FiniteGroupoid& g, int x);
/// Loop arrows at x in arrow index order, matching `isotropy` element order.
std::vector<int> loopsAt(const FiniteGroupoid& g, int x);

struct SkeletonRecord {
  int orbit = 0;
  int representative = 0;
  AbstractGroup isotropy = AbstractGroup::trivial();
};
using Skeleton = std::vector<SkeletonRecord>;

Skeleton skeleton(const FiniteGroupoid& g);

struct Functor {
  GroupoidPtr domain;
  GroupoidPtr codomain;
  std::vector<int> objectMap;
  std::vector<int> arrowMap;
};

/// Returns the functor unchanged when it preserves sources, targets, units
/// and composition; otherwise throws GroupoidError describing the violation.
Functor checkFunctor(Functor f);
Functor identityFunctor(const GroupoidPtr& g);
/// g ∘ f
Functor composeFunctors(const Functor& g, const Functor& f);

struct NaturalTransformation {
  Functor from;
  Functor to;
  std::vector<int> component;  // object of domain -> arrow of codomain
};

NaturalTransformation checkNatural(NaturalTransformation t);

}  // namespace orbicat
