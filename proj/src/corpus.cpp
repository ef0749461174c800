#include "orbicat/corpus.hpp"

#include "orbicat/constructions.hpp"
#include "orbicat/equivalence.hpp"

#include <algorithm>
#include <numeric>

namespace orbicat {

const std::vector<AbstractGroup>& smallGroups() {
  static const std::vector<AbstractGroup> groups = [] {
    std::vector<AbstractGroup> out;
    for (const char* name : {"1",  "Z2",  "Z3",    "Z4",    "V4",       "Z5",  "Z6",    "D6", "Z7",
                             "Z8", "Z2xZ4", "Z2xZ2xZ2", "D8", "Q8",     "Z9",  "Z3xZ3", "Z10", "D10",
                             "Z11", "Z12", "Z2xZ6", "D12", "A4", "Dic12"})
      out.push_back(namedGroup(name));
    return out;
  }();
  return groups;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const AbstractGroup& randomGroup(std::mt19937_64& rng, int maxOrder) {
  std::vector<int> ok;
  const auto& gs = smallGroups();
  for (int i = 0; i < static_cast<int>(gs.size()); ++i)
    if (gs[i].order() <= maxOrder) ok.push_back(i);
  return gs[ok[uniform(rng, 0, static_cast<int>(ok.size()) - 1)]];
}

/// Splits `total` objects into `orbits` nonempty parts.
std::vector<int> randomSizes(std::mt19937_64& rng, int orbits, int total) {
  std::vector<int> sizes(orbits, 1);
  for (int i = orbits; i < total; ++i) ++sizes[uniform(rng, 0, orbits - 1)];
  return sizes;
}

GroupoidPtr inflate(const std::vector<AbstractGroup>& groups, const std::vector<int>& sizes, const std::string& prefix) {
  std::vector<InflationOrbit> orbits;
  int next = 0;
  for (std::size_t o = 0; o < groups.size(); ++o) {
    InflationOrbit orbit{{}, groups[o]};
    for (int i = 0; i < sizes[o]; ++i) orbit.objects.push_back(prefix + std::to_string(next++));
    orbits.push_back(std::move(orbit));
  }
  return inflatedGroupoid(orbits);
}

struct Shape {
  std::vector<AbstractGroup> groups;
  int maxObjects;
};

Shape randomShape(std::mt19937_64& rng, const RandomGroupoidOptions& o) {
  const int orbits = uniform(rng, 1, std::max(1, std::min(4, o.maxObjects)));
  Shape s{{}, o.maxObjects};
  for (int i = 0; i < orbits; ++i) s.groups.push_back(randomGroup(rng, o.maxIsotropy));
  return s;
}

std::vector<int> randomInflation(std::mt19937_64& rng, const Shape& s) {
  const int orbits = static_cast<int>(s.groups.size());
  return randomSizes(rng, orbits, uniform(rng, orbits, std::max(orbits, s.maxObjects)));
}

}  // namespace

GroupoidPtr randomGroupoid(std::mt19937_64& rng, const RandomGroupoidOptions& o) {
  auto s = randomShape(rng, o);
  return inflate(s.groups, randomInflation(rng, s), "x");
}

MoritaPair randomMoritaPair(std::mt19937_64& rng, const RandomGroupoidOptions& o) {
  auto s = randomShape(rng, o);
  auto a = inflate(s.groups, randomInflation(rng, s), "x");
  auto sizes = randomInflation(rng, s);
  // reorder the orbits of the second groupoid
  std::vector<int> order(s.groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<AbstractGroup> groups;
  for (int i : order) groups.push_back(s.groups[i]);
  return {a, inflate(groups, sizes, "y"), true};
}

MoritaPair randomNonMoritaPair(std::mt19937_64& rng, const RandomGroupoidOptions& o) {
  auto s = randomShape(rng, o);
  auto a = inflate(s.groups, randomInflation(rng, s), "x");
  auto groups = s.groups;
  const int victim = uniform(rng, 0, static_cast<int>(groups.size()) - 1);
  // prefer a non-isomorphic replacement of the same order
  std::vector<const AbstractGroup*> same, other;
  for (const auto& g : smallGroups()) {
    if (g.order() > o.maxIsotropy || groupIsomorphic(g, groups[victim])) continue;
    (g.order() == groups[victim].order() ? same : other).push_back(&g);
  }
  const auto& pool = same.empty() ? other : same;
  groups[victim] = *pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
  return {a, inflate(groups, randomInflation(rng, Shape{groups, s.maxObjects}), "y"), false};
}

InvariantFunction randomFunction(std::mt19937_64& rng, const SimplicialComplex& k) {
  std::vector<int> values(k.vertexCount());
  std::iota(values.begin(), values.end(), 0);
  std::shuffle(values.begin(), values.end(), rng);
  return InvariantFunction(values.begin(), values.end());
}

}  // namespace orbicat
