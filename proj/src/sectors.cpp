#include "orbicat/sectors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace orbicat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool contains(const Subgroup& s, int g) { return std::binary_search(s.begin(), s.end(), g); }

/// Least conjugate of g under the elements of h.
int classRep(const AbstractGroup& a, const Subgroup& h, int g) {
  int best = g;
  for (int x : h) best = std::min(best, a.conjugate(x, g));
  return best;
}

Subgroup centralizerIn(const AbstractGroup& a, const Subgroup& h, int g) {
  Subgroup out;
  for (int x : h)
    if (a.mul(x, g) == a.mul(g, x)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<SectorModel> sectorsSimplicial(const OrbifoldComplex& m) {
  const auto& k = m.complex();
  const auto& a = m.ambient();
  std::vector<SectorModel> out;
  out.push_back({0, false, a.elementName(a.identity()), m});

  // enumerate pairs
  std::map<std::pair<int, int>, int> pairIndex;  // (simplex, g)
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < k.simplexCount(); ++s)
    for (int g : m.label(s))
      if (g != a.identity()) {
        pairIndex[{s, g}] = static_cast<int>(pairs.size());
        pairs.push_back({s, g});
      }
  if (pairs.empty()) return out;
  UnionFind uf(static_cast<int>(pairs.size()));
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    auto [s, g] = pairs[p];
    for (int h : m.label(s)) uf.unite(p, pairIndex.at({s, a.conjugate(h, g)}));
    for (int c : k.cofaces(s))
      if (contains(m.label(c), g)) uf.unite(p, pairIndex.at({c, g}));
  }
  std::map<int, std::vector<int>> components;
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) components[uf.find(p)].push_back(p);

  for (const auto& [root, members] : components) {
    // sector simplices keyed by (base simplex, class representative)
    std::map<std::pair<int, int>, int> keyIndex;
    std::vector<std::pair<int, int>> keys;
    for (int p : members) {
      auto [s, g] = pairs[p];
      std::pair<int, int> key{s, classRep(a, m.label(s), g)};
      if (keyIndex.emplace(key, static_cast<int>(keys.size())).second) keys.push_back(key);
    }
    // sector vertices
    std::map<std::pair<int, int>, int> vertexIndex;
    std::vector<std::string> names;
    for (const auto& key : keys)
      if (k.dim(key.first) == 0) {
        vertexIndex[key] = static_cast<int>(names.size());
        std::string name = k.vertexName(key.first);
        names.push_back(name + "[" + a.elementName(key.second) + "]");
      }
    std::vector<std::vector<int>> simplexVerts(keys.size());
    std::map<std::vector<int>, int> seen;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto [s, g] = keys[i];
      for (int v : k.simplex(s)) simplexVerts[i].push_back(vertexIndex.at({v, classRep(a, m.label(v), g)}));
      std::sort(simplexVerts[i].begin(), simplexVerts[i].end());
      if (!seen.emplace(simplexVerts[i], static_cast<int>(i)).second)
        throw ModelError("sector over " + k.simplexName(s) + " does not form a simplicial complex");
    }
    std::vector<std::vector<int>> higher;
    for (const auto& sv : simplexVerts)
      if (sv.size() > 1) higher.push_back(sv);
    auto complex = SimplicialComplex::fromSimplices(names, higher);

    // choose an element per sector simplex, propagated along faces
    std::vector<int> chosen(keys.size(), -1);
    std::vector<int> localOf(complex.simplexCount(), -1);
    for (std::size_t i = 0; i < keys.size(); ++i) localOf[complex.indexOf(simplexVerts[i])] = static_cast<int>(i);
    for (std::size_t start = 0; start < keys.size(); ++start) {
      if (chosen[start] >= 0) continue;
      chosen[start] = keys[start].second;
      std::deque<int> queue{static_cast<int>(start)};
      while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        int cs = complex.indexOf(simplexVerts[i]);
        std::vector<int> nbrs(complex.faces(cs));
        nbrs.insert(nbrs.end(), complex.cofaces(cs).begin(), complex.cofaces(cs).end());
        for (int n : nbrs) {
          int j = localOf[n];
          if (chosen[j] >= 0) continue;
          const int g = chosen[i];
          const auto& lj = m.label(keys[j].first);
          if (contains(lj, g) && classRep(a, lj, g) == keys[j].second) {
            chosen[j] = g;
          } else {
            // pick a conjugate of g lying in the class of the neighbour
            chosen[j] = keys[j].second;
            for (int h : m.label(keys[i].first)) {
              int c = a.conjugate(h, g);
              if (contains(lj, c) && classRep(a, lj, c) == keys[j].second) {
                chosen[j] = c;
                break;
              }
            }
          }
          queue.push_back(j);
        }
      }
    }
    std::vector<Subgroup> labels(complex.simplexCount());
    for (int cs = 0; cs < complex.simplexCount(); ++cs) {
      int i = localOf[cs];
      labels[cs] = centralizerIn(a, m.label(keys[i].first), chosen[i]);
    }
    SectorModel sm{static_cast<int>(out.size()), true, a.elementName(keys.front().second),
                   OrbifoldComplex(std::move(complex), a, std::move(labels))};
    out.push_back(std::move(sm));
  }
  return out;
}

std::vector<SectorModel> sectorsSimplicial(const SimplicialGComplex& x) {
  const auto& k = x.complex();
  const auto& grp = x.group();
  std::vector<SectorModel> out;
  out.push_back({0, false, grp.elementName(grp.identity()), quotientOrbifoldComplex(makeQuotientReady(x))});

  std::vector<SimplexSet> fixed;
  for (int g = 0; g < grp.order(); ++g) fixed.push_back(fixedSubcomplex(x, g));
  std::map<std::pair<int, int>, int> pairIndex;  // (g, simplex)
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < grp.order(); ++g) {
    if (g == grp.identity()) continue;
    for (int s : fixed[g].members()) {
      pairIndex[{g, s}] = static_cast<int>(pairs.size());
      pairs.push_back({g, s});
    }
  }
  UnionFind uf(static_cast<int>(pairs.size()));
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    auto [g, s] = pairs[p];
    for (int h = 0; h < grp.order(); ++h) uf.unite(p, pairIndex.at({grp.conjugate(h, g), x.actSimplex(h, s)}));
    for (int c : k.cofaces(s))
      if (fixed[g].test(c)) uf.unite(p, pairIndex.at({g, c}));
  }
  std::map<int, std::vector<int>> components;
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) components[uf.find(p)].push_back(p);
  for (const auto& [root, members] : components) {
    const int g0 = pairs[members.front()].first;
    SimplexSet part = k.none();
    for (int p : members)
      if (pairs[p].first == g0) part.set(pairs[p].second);
    std::vector<int> vmap;
    auto sub = extractSubcomplex(k, part, &vmap);
    Subgroup c = centralizer(grp, g0);
    auto cgroup = subgroupAsGroup(grp, c, "C(" + grp.elementName(g0) + ")");
    std::vector<int> localOf(k.vertexCount(), -1);
    for (std::size_t i = 0; i < vmap.size(); ++i) localOf[vmap[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> perm(c.size(), std::vector<int>(vmap.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t v = 0; v < vmap.size(); ++v) perm[i][v] = localOf[x.actVertex(c[i], vmap[v])];
    SimplicialGComplex piece(std::move(sub), cgroup, std::move(perm));
    out.push_back({static_cast<int>(out.size()), true, grp.elementName(g0),
                   quotientOrbifoldComplex(makeQuotientReady(piece))});
  }
  return out;
}

ModelCardinalities modelCardinalities(const OrbifoldComplex& m) {
  ModelCardinalities c;
  const auto& k = m.complex();
  for (int s = 0; s < k.simplexCount(); ++s) {
    const int sign = k.dim(s) % 2 == 0 ? 1 : -1;
    c.orbifoldEuler += ExactRational(sign, m.labelOrder(s));
    c.stringEuler += sign * m.labelClassNumber(s);
  }
  return c;
}

}  // namespace orbicat
