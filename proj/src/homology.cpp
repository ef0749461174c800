#include "orbicat/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace orbicat {

long BitVector::lowest() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<long>(i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i])));
  return -1;
}

BitVector Gf2Basis::reduce(BitVector v) const {
  // rows_ are kept with distinct pivots, each row's pivot absent from later rows
  bool changed = true;
  while (changed) {
    changed = false;
    long p = v.lowest();
    if (p < 0) break;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (pivots_[i] == p) {
        v ^= rows_[i];
        changed = true;
        break;
      }
  }
  return v;
}

bool Gf2Basis::insert(BitVector v) {
  v = reduce(std::move(v));
  long p = v.lowest();
  if (p < 0) return false;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

namespace {

/// Simplices of s grouped by dimension, plus global -> local index.
struct Graded {
  std::vector<std::vector<int>> byDim;
  std::vector<int> local;
};

Graded grade(const SimplicialComplex& k, const SimplexSet& s) {
  Graded g;
  g.local.assign(k.simplexCount(), -1);
  for (int i : s.members()) {
    int d = k.dim(i);
    if (static_cast<int>(g.byDim.size()) <= d) g.byDim.resize(d + 1);
    g.local[i] = static_cast<int>(g.byDim[d].size());
    g.byDim[d].push_back(i);
  }
  return g;
}

/// Boundary rows of the d-simplices, as vectors over the (d-1)-simplices.
std::vector<BitVector> boundaryRows(const SimplicialComplex& k, const Graded& g, int d) {
  std::vector<BitVector> rows;
  if (d <= 0 || d >= static_cast<int>(g.byDim.size())) return rows;
  for (int i : g.byDim[d]) {
    BitVector r(g.byDim[d - 1].size());
    for (int f : k.faces(i)) r.set(static_cast<std::size_t>(g.local[f]));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Coboundary rows of the d-cochains, as vectors over (d+1)-simplices.
std::vector<BitVector> coboundaryRows(const SimplicialComplex& k, const Graded& g, int d) {
  std::vector<BitVector> rows;
  if (d < 0 || d >= static_cast<int>(g.byDim.size())) return rows;
  const std::size_t width = d + 1 < static_cast<int>(g.byDim.size()) ? g.byDim[d + 1].size() : 0;
  for (int i : g.byDim[d]) {
    BitVector r(width);
    for (int c : k.cofaces(i))
      if (g.local[c] >= 0 && k.dim(c) == d + 1) r.set(static_cast<std::size_t>(g.local[c]));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t rankOf(const std::vector<BitVector>& rows) {
  Gf2Basis b;
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

/// Basis of {c : Σ c_i rows_i = 0}.
std::vector<BitVector> kernelOfRows(const std::vector<BitVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<BitVector> reduced;
  std::vector<BitVector> history;
  std::vector<long> pivots;
  std::vector<BitVector> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    BitVector v = rows[i];
    BitVector h(n);
    h.set(i);
    bool changed = true;
    while (changed) {
      changed = false;
      long p = v.lowest();
      if (p < 0) break;
      for (std::size_t j = 0; j < reduced.size(); ++j)
        if (pivots[j] == p) {
          v ^= reduced[j];
          h ^= history[j];
          changed = true;
          break;
        }
    }
    long p = v.lowest();
    if (p < 0) {
      kernel.push_back(std::move(h));
    } else {
      reduced.push_back(std::move(v));
      history.push_back(std::move(h));
      pivots.push_back(p);
    }
  }
  return kernel;
}

}  // namespace

std::vector<int> homologyZ2(const SimplicialComplex& k, const SimplexSet& s) {
  auto g = grade(k, s);
  const int top = static_cast<int>(g.byDim.size()) - 1;
  std::vector<std::size_t> rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) rank[d] = rankOf(boundaryRows(k, g, d));
  std::vector<int> betti;
  for (int d = 0; d <= top; ++d)
    betti.push_back(static_cast<int>(g.byDim[d].size() - rank[d] - rank[d + 1]));
  return betti;
}

std::vector<int> homologyZ2(const SimplicialComplex& k) { return homologyZ2(k, k.all()); }

std::vector<int> reducedHomologyZ2(const SimplicialComplex& k, const SimplexSet& s) {
  auto b = homologyZ2(k, s);
  if (!b.empty()) b[0] -= 1;
  return b;
}

bool hasTrivialReducedHomology(const SimplicialComplex& k, const SimplexSet& s) {
  if (s.empty()) return false;
  auto b = reducedHomologyZ2(k, s);
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

std::optional<NonzeroInclusionClass> nonzeroInclusionClass(const SimplicialComplex& k, const SimplexSet& sub,
                                                           const SimplexSet& ambient) {
  if (sub.empty()) return std::nullopt;
  // degree 0: sub meets two components of ambient
  {
    std::vector<int> parent(k.vertexCount());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i : ambient.members())
      if (k.dim(i) == 1) parent[find(k.simplex(i)[0])] = find(k.simplex(i)[1]);
    int root = -1;
    for (int v : verticesOf(k, sub)) {
      int r = find(v);
      if (root < 0) root = r;
      else if (r != root) return NonzeroInclusionClass{0};
    }
  }
  auto gs = grade(k, sub);
  auto ga = grade(k, ambient);
  const int top = static_cast<int>(gs.byDim.size()) - 1;
  for (int d = 1; d <= top; ++d) {
    auto cycles = kernelOfRows(boundaryRows(k, gs, d));
    if (cycles.empty()) continue;
    Gf2Basis boundaries;
    for (auto& r : boundaryRows(k, ga, d + 1)) boundaries.insert(std::move(r));
    for (const auto& c : cycles) {
      BitVector inAmbient(ga.byDim[d].size());
      for (std::size_t i = 0; i < gs.byDim[d].size(); ++i)
        if (c.test(i)) inAmbient.set(static_cast<std::size_t>(ga.local[gs.byDim[d][i]]));
      if (!boundaries.contains(inAmbient)) return NonzeroInclusionClass{d};
    }
  }
  return std::nullopt;
}

int cupLengthZ2(const SimplicialComplex& k, const SimplexSet& s) {
  auto g = grade(k, s);
  const int top = static_cast<int>(g.byDim.size()) - 1;
  if (top < 1) return 0;

  struct Class {
    int degree;
    BitVector cochain;
  };
  std::vector<Gf2Basis> coboundaries(top + 1);
  for (int d = 1; d <= top; ++d)
    for (auto& r : coboundaryRows(k, g, d - 1)) coboundaries[d].insert(std::move(r));

  std::vector<Class> generators;
  for (int d = 1; d <= top; ++d) {
    auto rows = coboundaryRows(k, g, d);
    std::vector<BitVector> cocycles;
    if (d == top) {
      for (std::size_t i = 0; i < g.byDim[d].size(); ++i) {
        BitVector e(g.byDim[d].size());
        e.set(i);
        cocycles.push_back(std::move(e));
      }
    } else {
      cocycles = kernelOfRows(rows);
    }
    Gf2Basis span = coboundaries[d];
    for (auto& z : cocycles)
      if (span.insert(z)) generators.push_back({d, std::move(z)});
  }
  if (generators.empty()) return 0;

  auto cup = [&](const Class& a, const Class& b) -> std::optional<Class> {
    const int d = a.degree + b.degree;
    if (d > top) return std::nullopt;
    BitVector out(g.byDim[d].size());
    for (std::size_t i = 0; i < g.byDim[d].size(); ++i) {
      const auto& verts = k.simplex(g.byDim[d][i]);
      std::vector<int> front(verts.begin(), verts.begin() + a.degree + 1);
      std::vector<int> back(verts.begin() + a.degree, verts.end());
      int fi = g.local[k.indexOf(front)];
      int bi = g.local[k.indexOf(back)];
      if (a.cochain.test(static_cast<std::size_t>(fi)) && b.cochain.test(static_cast<std::size_t>(bi))) out.set(i);
    }
    return Class{d, std::move(out)};
  };

  int length = 1;
  std::vector<Class> level = generators;
  while (true) {
    std::vector<Gf2Basis> seen = coboundaries;
    std::vector<Class> next;
    for (const auto& a : level)
      for (const auto& b : generators) {
        auto c = cup(a, b);
        if (!c) continue;
        if (seen[c->degree].insert(c->cochain)) next.push_back(std::move(*c));
      }
    if (next.empty()) return length;
    ++length;
    level = std::move(next);
  }
}

int cupLengthZ2(const SimplicialComplex& k) { return cupLengthZ2(k, k.all()); }

}  // namespace orbicat
