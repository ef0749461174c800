#pragma once

#include "orbicat/io.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace orbicat {

/// One group per isomorphism class, orders 1 to 12.
const std::vector<AbstractGroup>& smallGroups();

struct RandomGroupoidOptions {
  int maxObjects = 12;
  int maxIsotropy = 12;
};

/// Random disjoint union of inflated orbits.
GroupoidPtr randomGroupoid(std::mt19937_64& rng, const RandomGroupoidOptions& o = {});

struct MoritaPair {
  GroupoidPtr a;
  GroupoidPtr b;
  bool equivalent = false;
};
/// Two inflations of one random skeleton.
MoritaPair randomMoritaPair(std::mt19937_64& rng, const RandomGroupoidOptions& o = {});
/// Two inflations whose isotropy profiles differ in one orbit.
MoritaPair randomNonMoritaPair(std::mt19937_64& rng, const RandomGroupoidOptions& o = {});

/// Distinct values 0..n-1 in random order.
InvariantFunction randomFunction(std::mt19937_64& rng, const SimplicialComplex& k);

}  // namespace orbicat
