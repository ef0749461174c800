#include "orbicat/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace orbicat {

namespace {

void checkVertices(const std::vector<std::string>& names, const std::vector<int>& simplex) {
  if (simplex.empty()) throw ModelError("empty simplex");
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (simplex[i] < 0 || simplex[i] >= static_cast<int>(names.size()))
      throw ModelError("simplex refers to an unknown vertex");
    if (i > 0 && simplex[i] == simplex[i - 1]) throw ModelError("repeated vertex " + names[simplex[i]] + " in a simplex");
  }
}

std::vector<int> sortedCopy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

void SimplicialComplex::index() {
  std::sort(simplices_.begin(), simplices_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  lookup_.clear();
  for (int s = 0; s < simplexCount(); ++s) lookup_.emplace(simplices_[s], s);
  faces_.assign(simplices_.size(), {});
  cofaces_.assign(simplices_.size(), {});
  for (int s = 0; s < simplexCount(); ++s) {
    const auto& sim = simplices_[s];
    if (sim.size() < 2) continue;
    for (std::size_t i = 0; i < sim.size(); ++i) {
      std::vector<int> f;
      f.reserve(sim.size() - 1);
      for (std::size_t j = 0; j < sim.size(); ++j)
        if (j != i) f.push_back(sim[j]);
      auto it = lookup_.find(f);
      if (it == lookup_.end()) {
        std::string name;
        for (int v : f) name += (name.empty() ? "" : " ") + vertices_[v];
        throw ModelError("complex is not closed under faces: missing {" + name + "}");
      }
      faces_[s].push_back(it->second);
      cofaces_[it->second].push_back(s);
    }
    std::sort(faces_[s].begin(), faces_[s].end());
  }
  for (auto& c : cofaces_) std::sort(c.begin(), c.end());
}

SimplicialComplex SimplicialComplex::fromFacets(std::vector<std::string> vertices,
                                                const std::vector<std::vector<int>>& facets) {
  SimplicialComplex k;
  std::set<std::vector<int>> all;
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) all.insert({v});
  for (const auto& raw : facets) {
    auto f = sortedCopy(raw);
    checkVertices(vertices, f);
    if (f.size() > 20) throw ModelError("simplex dimension too large");
    const unsigned n = static_cast<unsigned>(f.size());
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      std::vector<int> face;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1U << i)) face.push_back(f[i]);
      all.insert(std::move(face));
    }
  }
  k.vertices_ = std::move(vertices);
  k.simplices_.assign(all.begin(), all.end());
  k.index();
  return k;
}

SimplicialComplex SimplicialComplex::fromSimplices(std::vector<std::string> vertices,
                                                   const std::vector<std::vector<int>>& simplices) {
  SimplicialComplex k;
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) k.simplices_.push_back({v});
  for (const auto& raw : simplices) {
    auto f = sortedCopy(raw);
    checkVertices(vertices, f);
    k.simplices_.push_back(std::move(f));
  }
  k.vertices_ = std::move(vertices);
  k.index();
  return k;
}

std::optional<int> SimplicialComplex::findVertex(const std::string& name) const {
  for (int v = 0; v < vertexCount(); ++v)
    if (vertices_[v] == name) return v;
  return std::nullopt;
}

std::optional<int> SimplicialComplex::find(const std::vector<int>& vertices) const {
  auto it = lookup_.find(vertices);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int SimplicialComplex::indexOf(const std::vector<int>& vertices) const {
  auto s = find(vertices);
  if (!s) throw ModelError("simplex not in complex");
  return *s;
}

std::vector<int> SimplicialComplex::allFaces(int s) const {
  std::vector<int> out;
  const auto& sim = simplices_[s];
  const unsigned n = static_cast<unsigned>(sim.size());
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> face;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1U << i)) face.push_back(sim[i]);
    out.push_back(lookup_.at(face));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplexSet SimplicialComplex::all() const {
  SimplexSet s(simplices_.size());
  for (int i = 0; i < simplexCount(); ++i) s.set(i);
  return s;
}

std::string SimplicialComplex::simplexName(int s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < simplices_[s].size(); ++i) out += (i ? " " : "") + vertices_[simplices_[s][i]];
  return out + "}";
}

bool isSubcomplex(const SimplicialComplex& k, const SimplexSet& s) {
  for (int i : s.members())
    for (int f : k.faces(i))
      if (!s.test(f)) return false;
  return true;
}

SimplexSet closure(const SimplicialComplex& k, const SimplexSet& s) {
  SimplexSet out = s;
  // faces have smaller indices, so a descending sweep suffices
  for (int i = k.simplexCount() - 1; i >= 0; --i)
    if (out.test(i))
      for (int f : k.faces(i)) out.set(f);
  return out;
}

SimplexSet closedStar(const SimplicialComplex& k, const std::vector<int>& vertices) {
  return closedStar(k, vertices, k.all());
}

SimplexSet closedStar(const SimplicialComplex& k, const std::vector<int>& vertices, const SimplexSet& within) {
  SimplexSet open = k.none();
  for (int v : vertices) open.set(v);
  return closure(k, openStar(k, open) & within);
}

SimplexSet openStar(const SimplicialComplex& k, const SimplexSet& s) {
  SimplexSet out = s;
  for (int i = 0; i < k.simplexCount(); ++i)
    if (out.test(i))
      for (int c : k.cofaces(i)) out.set(c);
  return out;
}

SimplexSet fullSubcomplex(const SimplicialComplex& k, const std::vector<int>& vertices) {
  std::vector<bool> in(k.vertexCount(), false);
  for (int v : vertices) in[v] = true;
  SimplexSet out = k.none();
  for (int i = 0; i < k.simplexCount(); ++i)
    if (std::all_of(k.simplex(i).begin(), k.simplex(i).end(), [&](int v) { return in[v]; })) out.set(i);
  return out;
}

std::vector<int> verticesOf(const SimplicialComplex& k, const SimplexSet& s) {
  std::vector<bool> in(k.vertexCount(), false);
  for (int i : s.members())
    for (int v : k.simplex(i)) in[v] = true;
  std::vector<int> out;
  for (int v = 0; v < k.vertexCount(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<int> maximalSimplices(const SimplicialComplex& k, const SimplexSet& s) {
  std::vector<int> out;
  for (int i : s.members())
    if (std::none_of(k.cofaces(i).begin(), k.cofaces(i).end(), [&](int c) { return s.test(c); })) out.push_back(i);
  return out;
}

long long eulerCharacteristic(const SimplicialComplex& k, const SimplexSet& s) {
  long long chi = 0;
  for (int i : s.members()) chi += (k.dim(i) % 2 == 0) ? 1 : -1;
  return chi;
}

int componentCount(const SimplicialComplex& k, const SimplexSet& s) {
  std::vector<int> parent(k.vertexCount());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i : s.members())
    if (k.dim(i) == 1) parent[find(k.simplex(i)[0])] = find(k.simplex(i)[1]);
  int count = 0;
  for (int v = 0; v < k.vertexCount(); ++v)
    if (s.test(v) && find(v) == v) ++count;
  return count;
}

SimplexSet link(const SimplicialComplex& k, int v, const SimplexSet& s) {
  SimplexSet out = k.none();
  for (int i : s.members()) {
    const auto& sim = k.simplex(i);
    if (std::find(sim.begin(), sim.end(), v) == sim.end()) continue;
    if (sim.size() < 2) continue;
    std::vector<int> rest;
    for (int w : sim)
      if (w != v) rest.push_back(w);
    out.set(k.indexOf(rest));
  }
  return out;
}

SimplicialComplex extractSubcomplex(const SimplicialComplex& k, const SimplexSet& s, std::vector<int>* vertexMap,
                                    std::vector<int>* simplexMap) {
  auto verts = verticesOf(k, s);
  std::vector<int> local(k.vertexCount(), -1);
  std::vector<std::string> names;
  for (int v : verts) {
    local[v] = static_cast<int>(names.size());
    names.push_back(k.vertexName(v));
  }
  std::vector<std::vector<int>> sims;
  for (int i : s.members()) {
    if (k.dim(i) == 0) continue;
    std::vector<int> sim;
    for (int v : k.simplex(i)) sim.push_back(local[v]);
    sims.push_back(std::move(sim));
  }
  auto out = SimplicialComplex::fromSimplices(std::move(names), sims);
  if (vertexMap) *vertexMap = verts;
  if (simplexMap) {
    simplexMap->assign(out.simplexCount(), -1);
    for (int i = 0; i < out.simplexCount(); ++i) {
      std::vector<int> sim;
      for (int v : out.simplex(i)) sim.push_back(verts[v]);
      (*simplexMap)[i] = k.indexOf(sim);
    }
  }
  return out;
}

SimplicialComplex barycentricSubdivide(const SimplicialComplex& k, std::vector<std::vector<int>>* chains) {
  std::vector<std::string> names;
  for (int s = 0; s < k.simplexCount(); ++s) {
    if (k.dim(s) == 0) {
      names.push_back(k.vertexName(k.simplex(s)[0]));
      continue;
    }
    std::string n = "(";
    for (std::size_t i = 0; i < k.simplex(s).size(); ++i) n += (i ? "," : "") + k.vertexName(k.simplex(s)[i]);
    names.push_back(n + ")");
  }
  std::vector<std::vector<int>> flags;
  std::vector<int> chain;
  std::function<void(int)> descend = [&](int s) {
    chain.push_back(s);
    if (k.dim(s) == 0) {
      flags.push_back(chain);
    } else {
      for (int f : k.faces(s)) descend(f);
    }
    chain.pop_back();
  };
  for (int s : maximalSimplices(k, k.all())) descend(s);
  auto out = SimplicialComplex::fromFacets(std::move(names), flags);
  if (chains) {
    chains->clear();
    for (int s = 0; s < out.simplexCount(); ++s) chains->push_back(out.simplex(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

SimplicialGComplex::SimplicialGComplex(SimplicialComplex complex, AbstractGroup group,
                                       std::vector<std::vector<int>> perm)
    : complex_(std::move(complex)), group_(std::move(group)), perm_(std::move(perm)) {
  const int n = complex_.vertexCount();
  if (static_cast<int>(perm_.size()) != group_.order()) throw ModelError("action needs one permutation per element");
  for (const auto& p : perm_) {
    if (static_cast<int>(p.size()) != n) throw ModelError("permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (int v : p) {
      if (v < 0 || v >= n || hit[v]) throw ModelError("action element is not a vertex permutation");
      hit[v] = true;
    }
  }
  for (int v = 0; v < n; ++v)
    if (perm_[group_.identity()][v] != v) throw ModelError("identity element moves vertex " + complex_.vertexName(v));
  for (int g = 0; g < group_.order(); ++g)
    for (int h = 0; h < group_.order(); ++h)
      for (int v = 0; v < n; ++v)
        if (perm_[g][perm_[h][v]] != perm_[group_.mul(g, h)][v])
          throw ModelError("action is not a homomorphism at " + group_.elementName(g) + ", " + group_.elementName(h));
  simplexPerm_.assign(group_.order(), std::vector<int>(complex_.simplexCount()));
  for (int g = 0; g < group_.order(); ++g)
    for (int s = 0; s < complex_.simplexCount(); ++s) {
      std::vector<int> image;
      for (int v : complex_.simplex(s)) image.push_back(perm_[g][v]);
      std::sort(image.begin(), image.end());
      auto t = complex_.find(image);
      if (!t)
        throw ModelError("element " + group_.elementName(g) + " maps simplex " + complex_.simplexName(s) +
                         " outside the complex");
      simplexPerm_[g][s] = *t;
    }
}

bool isRegular(const SimplicialGComplex& x) {
  const auto& k = x.complex();
  for (int g = 0; g < x.group().order(); ++g)
    for (int s = 0; s < k.simplexCount(); ++s)
      if (x.actSimplex(g, s) == s)
        for (int v : k.simplex(s))
          if (x.actVertex(g, v) != v) return false;
  return true;
}

namespace {

std::vector<int> vertexOrbitIds(const SimplicialGComplex& x) {
  const auto& k = x.complex();
  std::vector<int> id(k.vertexCount());
  for (int v = 0; v < k.vertexCount(); ++v) {
    int m = v;
    for (int g = 0; g < x.group().order(); ++g) m = std::min(m, x.actVertex(g, v));
    id[v] = m;
  }
  return id;
}

std::vector<int> simplexOrbitIds(const SimplicialGComplex& x) {
  const auto& k = x.complex();
  std::vector<int> id(k.simplexCount());
  for (int s = 0; s < k.simplexCount(); ++s) {
    int m = s;
    for (int g = 0; g < x.group().order(); ++g) m = std::min(m, x.actSimplex(g, s));
    id[s] = m;
  }
  return id;
}

}  // namespace

bool hasSimplicialQuotient(const SimplicialGComplex& x) {
  if (!isRegular(x)) return false;
  const auto& k = x.complex();
  auto vo = vertexOrbitIds(x);
  auto so = simplexOrbitIds(x);
  std::map<std::vector<int>, int> seen;
  for (int s = 0; s < k.simplexCount(); ++s) {
    std::vector<int> key;
    for (int v : k.simplex(s)) key.push_back(vo[v]);
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
    auto [it, fresh] = seen.emplace(key, so[s]);
    if (!fresh && it->second != so[s]) return false;
  }
  return true;
}

SimplicialGComplex barycentricSubdivide(const SimplicialGComplex& x) {
  auto sub = barycentricSubdivide(x.complex());
  std::vector<std::vector<int>> perm(x.group().order(), std::vector<int>(sub.vertexCount()));
  for (int g = 0; g < x.group().order(); ++g)
    for (int v = 0; v < sub.vertexCount(); ++v) perm[g][v] = x.actSimplex(g, v);
  return SimplicialGComplex(std::move(sub), x.group(), std::move(perm));
}

SimplicialGComplex makeQuotientReady(const SimplicialGComplex& x, int maxRounds) {
  SimplicialGComplex cur = x;
  for (int round = 0; !hasSimplicialQuotient(cur); ++round) {
    if (round >= maxRounds) throw ModelError("action has no simplicial quotient after repeated subdivision");
    cur = barycentricSubdivide(cur);
  }
  return cur;
}

SimplexSet fixedSubcomplex(const SimplicialGComplex& x, int g) {
  if (g < 0 || g >= x.group().order()) throw ModelError("unknown group element");
  const auto& k = x.complex();
  SimplexSet out = k.none();
  for (int s = 0; s < k.simplexCount(); ++s)
    if (std::all_of(k.simplex(s).begin(), k.simplex(s).end(), [&](int v) { return x.actVertex(g, v) == v; }))
      out.set(s);
  return out;
}

Subgroup stabilizer(const SimplicialGComplex& x, int s) {
  Subgroup out;
  for (int g = 0; g < x.group().order(); ++g)
    if (x.actSimplex(g, s) == s) out.push_back(g);
  return out;
}

OrbifoldComplex quotientOrbifoldComplex(const SimplicialGComplex& x, std::vector<int>* liftOf) {
  if (!hasSimplicialQuotient(x))
    throw ModelError("action is not regular: subdivide before taking the quotient");
  const auto& k = x.complex();
  auto vo = vertexOrbitIds(x);
  std::vector<int> qIndex(k.vertexCount(), -1);
  std::vector<std::string> names;
  for (int v = 0; v < k.vertexCount(); ++v)
    if (vo[v] == v) {
      qIndex[v] = static_cast<int>(names.size());
      names.push_back(k.vertexName(v));
    }
  auto image = [&](int s) {
    std::vector<int> q;
    for (int v : k.simplex(s)) q.push_back(qIndex[vo[v]]);
    std::sort(q.begin(), q.end());
    return q;
  };
  std::set<std::vector<int>> sims;
  for (int s = 0; s < k.simplexCount(); ++s)
    if (k.dim(s) > 0) sims.insert(image(s));
  auto q = SimplicialComplex::fromSimplices(names, {sims.begin(), sims.end()});

  // Coherent lifts: walk maximal simplices through shared faces and lift each
  // one next to an already lifted neighbour.
  std::vector<int> lift(q.simplexCount(), -1);
  std::vector<std::vector<int>> upstairs(q.simplexCount());
  for (int s = 0; s < k.simplexCount(); ++s) upstairs[q.indexOf(image(s))].push_back(s);
  auto assignFaces = [&](int qs, int ks) {
    lift[qs] = ks;
    for (int f : k.allFaces(ks)) {
      int qf = q.indexOf(image(f));
      if (lift[qf] < 0) lift[qf] = f;
    }
  };
  auto maxes = maximalSimplices(q, q.all());
  std::vector<bool> done(q.simplexCount(), false);
  for (int start : maxes) {
    if (done[start]) continue;
    std::deque<int> queue;
    // prefer a lift compatible with faces already lifted
    auto pick = [&](int qs) {
      int best = -1, bestShared = -1;
      for (int ks : upstairs[qs]) {
        int shared = 0;
        for (int f : k.allFaces(ks))
          if (lift[q.indexOf(image(f))] == f) shared += 1 + k.dim(f);
        if (shared > bestShared) {
          best = ks;
          bestShared = shared;
        }
      }
      return best;
    };
    assignFaces(start, pick(start));
    done[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int f : q.allFaces(cur))
        for (int m : maxes) {
          if (done[m]) continue;
          auto mf = q.allFaces(m);
          if (!std::binary_search(mf.begin(), mf.end(), f)) continue;
          assignFaces(m, pick(m));
          done[m] = true;
          queue.push_back(m);
        }
    }
  }
  std::vector<Subgroup> labels(q.simplexCount());
  for (int s = 0; s < q.simplexCount(); ++s) labels[s] = stabilizer(x, lift[s]);
  if (liftOf) *liftOf = lift;
  try {
    return OrbifoldComplex(std::move(q), x.group(), std::move(labels));
  } catch (const ModelError& e) {
    throw ModelError(std::string("quotient has no coherent lift: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

OrbifoldComplex::OrbifoldComplex(SimplicialComplex complex, AbstractGroup ambient, std::vector<Subgroup> labels)
    : complex_(std::move(complex)), ambient_(std::move(ambient)) {
  if (static_cast<int>(labels.size()) != complex_.simplexCount()) throw ModelError("one label per simplex required");
  std::map<Subgroup, int> ids;
  labelId_.resize(labels.size());
  for (std::size_t s = 0; s < labels.size(); ++s) {
    auto l = labels[s];
    std::sort(l.begin(), l.end());
    auto [it, fresh] = ids.emplace(l, static_cast<int>(distinct_.size()));
    if (fresh) {
      if (!isSubgroup(ambient_, l))
        throw ModelError("label of " + complex_.simplexName(static_cast<int>(s)) + " is not a subgroup of " +
                         ambient_.name());
      distinct_.push_back(l);
    }
    labelId_[s] = it->second;
  }
  for (int s = 0; s < complex_.simplexCount(); ++s)
    for (int f : complex_.faces(s))
      if (!std::includes(label(f).begin(), label(f).end(), label(s).begin(), label(s).end()))
        throw ModelError("label of " + complex_.simplexName(s) + " is not contained in the label of its face " +
                         complex_.simplexName(f));
  prepare();
}

OrbifoldComplex::OrbifoldComplex(SimplicialComplex complex)
    : complex_(std::move(complex)), ambient_(AbstractGroup::trivial()) {
  labelId_.assign(complex_.simplexCount(), 0);
  distinct_.push_back(trivialSubgroup(ambient_));
  prepare();
}

void OrbifoldComplex::prepare() {
  groups_.clear();
  classNumbers_.clear();
  for (const auto& l : distinct_) {
    groups_.push_back(subgroupAsGroup(ambient_, l));
    classNumbers_.push_back(classNumber(groups_.back()));
  }
  const std::size_t n = distinct_.size();
  embeds_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (std::includes(distinct_[b].begin(), distinct_[b].end(), distinct_[a].begin(), distinct_[a].end()))
        embeds_[a][b] = true;
      else if (distinct_[b].size() % distinct_[a].size() == 0)
        embeds_[a][b] = findEmbedding(groups_[a], groups_[b]).has_value();
    }
}

std::vector<Subgroup> OrbifoldComplex::labels() const {
  std::vector<Subgroup> out;
  for (int id : labelId_) out.push_back(distinct_[id]);
  return out;
}

std::optional<GroupMap> OrbifoldComplex::embedding(int a, int b) const {
  if (!embeds(a, b)) return std::nullopt;
  return findEmbedding(labelGroup(a), labelGroup(b));
}

bool OrbifoldComplex::isTrivial() const {
  return std::all_of(distinct_.begin(), distinct_.end(), [](const Subgroup& s) { return s.size() == 1; });
}

OrbifoldComplex restrictModel(const OrbifoldComplex& m, const SimplexSet& s, std::vector<int>* vertexMap,
                              std::vector<int>* simplexMap) {
  std::vector<int> smap;
  auto sub = extractSubcomplex(m.complex(), s, vertexMap, &smap);
  std::vector<Subgroup> labels;
  for (int old : smap) labels.push_back(m.label(old));
  if (simplexMap) *simplexMap = smap;
  return OrbifoldComplex(std::move(sub), m.ambient(), std::move(labels));
}

OrbifoldComplex barycentricSubdivide(const OrbifoldComplex& m) {
  std::vector<std::vector<int>> chains;
  auto sub = barycentricSubdivide(m.complex(), &chains);
  std::vector<Subgroup> labels;
  for (const auto& c : chains) labels.push_back(m.label(c.back()));
  return OrbifoldComplex(std::move(sub), m.ambient(), std::move(labels));
}

}  // namespace orbicat
