#pragma once

#include "orbicat/groupoid.hpp"

#include <string>
#include <vector>

namespace orbicat {

/// Left action of a finite group on a finite carrier; `act[g][x]` is g·x.
struct GroupAction {
  AbstractGroup group;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> act;
};

/// Checks the identity and compatibility laws; throws GroupoidError.
GroupAction makeGroupAction(AbstractGroup group, std::vector<std::string> carrier, std::vector<std::vector<int>> act);

GroupoidPtr unitGroupoid(const std::vector<std::string>& objects);
GroupoidPtr pairGroupoid(const std::vector<std::string>& objects);
GroupoidPtr pointGroupoid(const AbstractGroup& k, const std::string& object = "*");
GroupoidPtr translationGroupoid(const GroupAction& action);
GroupoidPtr productGroupoid(const FiniteGroupoid& g, const FiniteGroupoid& h);
/// Object and arrow ids are prefixed with "L:" and "R:".
GroupoidPtr disjointUnion(const FiniteGroupoid& g, const FiniteGroupoid& h);
/// Requires `objects` to be invariant; throws GroupoidError with a violating
/// arrow otherwise.
GroupoidPtr fullSubgroupoid(const FiniteGroupoid& g, const std::vector<int>& objects);

/// One orbit of an inflated groupoid: the pair groupoid on `objects` times
/// the point groupoid of `group`.
struct InflationOrbit {
  std::vector<std::string> objects;
  AbstractGroup group;
};
/// Groupoid with the given orbits and isotropy groups; arrows are named
/// "x>y:k". Units are named "id_<object>".
GroupoidPtr inflatedGroupoid(const std::vector<InflationOrbit>& orbits);

/// Disjoint union of point groupoids, one per skeleton record.
GroupoidPtr groupoidFromSkeleton(const Skeleton& skeleton);

struct FiberedProduct {
  GroupoidPtr groupoid;
  Functor first;   // to the domain of φ
  Functor second;  // to the domain of ψ
};

/// Weak fibered product over a common codomain: objects (x, g, y) with
/// g: φ(x) → ψ(y), arrows pairs (j, j') acting on the connecting arrow.
FiberedProduct fiberedProduct(const Functor& phi, const Functor& psi);

}  // namespace orbicat
