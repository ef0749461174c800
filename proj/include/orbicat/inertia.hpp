#pragma once

#include "orbicat/groupoid.hpp"
#include "orbicat/rational.hpp"

#include <vector>

namespace orbicat {

/// Objects are the loops of G (named by arrow id); an arrow "(g|h)" goes
/// from g to h∘g∘h⁻¹.
GroupoidPtr inertiaGroupoid(const FiniteGroupoid& g);

struct DiscreteSector {
  int id = 0;
  std::vector<int> objects;  // objects of the inertia groupoid
  bool twisted = true;
  GroupoidPtr groupoid;
};
using SectorDecomposition = std::vector<DiscreteSector>;

/// Orbit components of the inertia groupoid; components containing a unit
/// loop are untwisted.
SectorDecomposition sectorsDiscrete(const FiniteGroupoid& g);

ExactRational baezDolanCardinality(const FiniteGroupoid& g);
long long stringEulerCardinality(const FiniteGroupoid& g);

}  // namespace orbicat
