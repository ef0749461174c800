#include "orbicat/groupoid.hpp"

#include <algorithm>
#include <numeric>

namespace orbicat {

int FiniteGroupoid::compose(int a, int b) const {
  auto it = compose_.find(key(a, b));
  if (it == compose_.end())
    throw GroupoidError("arrows " + arrowId(a) + " and " + arrowId(b) + " are not composable");
  return it->second;
}

std::optional<int> FiniteGroupoid::tryCompose(int a, int b) const {
  auto it = compose_.find(key(a, b));
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroupoid::objectIndex(const std::string& id) const {
  auto it = objectIndex_.find(id);
  if (it == objectIndex_.end()) throw GroupoidError("unknown object '" + id + "'");
  return it->second;
}

std::optional<int> FiniteGroupoid::findObject(const std::string& id) const {
  auto it = objectIndex_.find(id);
  if (it == objectIndex_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroupoid::arrowIndex(const std::string& id) const {
  auto it = arrowIndex_.find(id);
  if (it == arrowIndex_.end()) throw GroupoidError("unknown arrow '" + id + "'");
  return it->second;
}

std::vector<int> FiniteGroupoid::arrowsBetween(int x, int y) const {
  std::vector<int> out;
  for (int a : outgoing_[x])
    if (target(a) == y) out.push_back(a);
  return out;
}

int GroupoidBuilder::addObject(std::string id) {
  if (g_.objectIndex_.count(id)) throw GroupoidError("duplicate object '" + id + "'");
  int x = objectCount();
  g_.objectIndex_.emplace(id, x);
  g_.objects_.push_back(std::move(id));
  g_.unit_.push_back(-1);
  g_.outgoing_.emplace_back();
  return x;
}

int GroupoidBuilder::addArrow(std::string id, int source, int target) {
  if (g_.arrowIndex_.count(id)) throw GroupoidError("duplicate arrow '" + id + "'");
  if (source < 0 || source >= objectCount() || target < 0 || target >= objectCount())
    throw GroupoidError("arrow '" + id + "' has an endpoint outside the object set");
  int a = arrowCount();
  g_.arrowIndex_.emplace(id, a);
  g_.arrows_.push_back({std::move(id), source, target});
  g_.inverse_.push_back(-1);
  g_.outgoing_[source].push_back(a);
  return a;
}

void GroupoidBuilder::setUnit(int object, int arrow) {
  const auto& r = g_.arrows_.at(arrow);
  if (r.source != object || r.target != object)
    throw GroupoidError("unit " + r.id + " of " + g_.objects_[object] + " is not a loop at that object");
  g_.unit_[object] = arrow;
}

void GroupoidBuilder::setInverse(int arrow, int inverse) {
  const auto& a = g_.arrows_.at(arrow);
  const auto& b = g_.arrows_.at(inverse);
  if (a.source != b.target || a.target != b.source)
    throw GroupoidError("endpoint mismatch: " + b.id + " cannot invert " + a.id);
  g_.inverse_[arrow] = inverse;
}

void GroupoidBuilder::reserveCompositions(std::size_t n) { g_.compose_.reserve(n); }

void GroupoidBuilder::setCompose(int left, int right, int result) {
  const auto& l = g_.arrows_.at(left);
  const auto& r = g_.arrows_.at(right);
  const auto& c = g_.arrows_.at(result);
  if (r.target != l.source)
    throw GroupoidError("endpoint mismatch: " + l.id + " ∘ " + r.id + " is not composable");
  if (c.source != r.source || c.target != l.target)
    throw GroupoidError("endpoint mismatch: " + l.id + " ∘ " + r.id + " = " + c.id);
  auto [it, inserted] = g_.compose_.emplace(FiniteGroupoid::key(left, right), result);
  if (!inserted && it->second != result)
    throw GroupoidError("conflicting compositions for " + l.id + " ∘ " + r.id);
}

GroupoidPtr GroupoidBuilder::build() {
  for (int x = 0; x < objectCount(); ++x)
    if (g_.unit_[x] < 0) throw GroupoidError("object " + g_.objects_[x] + " has no unit");
  for (int a = 0; a < arrowCount(); ++a)
    if (g_.inverse_[a] < 0) throw GroupoidError("missing inverse for arrow " + g_.arrows_[a].id);
  std::vector<std::size_t> in(objectCount(), 0);
  for (const auto& a : g_.arrows_) ++in[a.target];
  std::size_t expected = 0;
  for (int x = 0; x < objectCount(); ++x) expected += in[x] * g_.outgoing_[x].size();
  if (g_.compose_.size() != expected) {
    for (int b = 0; b < arrowCount(); ++b)
      for (int a : g_.outgoing_[g_.arrows_[b].target])
        if (!g_.compose_.count(FiniteGroupoid::key(a, b)))
          throw GroupoidError("missing composition " + g_.arrows_[a].id + " ∘ " + g_.arrows_[b].id);
  }
  return std::make_shared<const FiniteGroupoid>(std::move(g_));
}

void checkGroupoidAxioms(const FiniteGroupoid& g) {
  for (int x = 0; x < g.objectCount(); ++x) {
    int u = g.unit(x);
    if (g.source(u) != x || g.target(u) != x)
      throw GroupoidError("unit of " + g.objectId(x) + " is not a loop at it");
  }
  std::vector<std::vector<int>> incoming(g.objectCount());
  for (int a = 0; a < g.arrowCount(); ++a) incoming[g.target(a)].push_back(a);
  for (int a = 0; a < g.arrowCount(); ++a) {
    if (g.compose(g.unit(g.target(a)), a) != a || g.compose(a, g.unit(g.source(a))) != a)
      throw GroupoidError("unit law fails at arrow " + g.arrowId(a));
    int i = g.inverse(a);
    if (g.source(i) != g.target(a) || g.target(i) != g.source(a))
      throw GroupoidError("endpoint mismatch for inverse of " + g.arrowId(a));
    if (g.compose(a, i) != g.unit(g.target(a)) || g.compose(i, a) != g.unit(g.source(a)))
      throw GroupoidError("missing inverse: " + g.arrowId(i) + " does not invert " + g.arrowId(a));
  }
  for (int b = 0; b < g.arrowCount(); ++b)
    for (int a : g.arrowsFrom(g.target(b)))
      for (int c : incoming[g.source(b)]) {
        int lhs = g.compose(g.compose(a, b), c);
        int rhs = g.compose(a, g.compose(b, c));
        if (lhs != rhs)
          throw GroupoidError("non-associative triple (" + g.arrowId(a) + ", " + g.arrowId(b) + ", " +
                              g.arrowId(c) + ")");
      }
}

GroupoidPtr validateGroupoid(const RawGroupoid& raw) {
  GroupoidBuilder b;
  for (const auto& o : raw.objects) b.addObject(o);
  std::unordered_map<std::string, int> obj, arr;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) obj[raw.objects[i]] = static_cast<int>(i);
  auto objectOf = [&](const std::string& id) {
    auto it = obj.find(id);
    if (it == obj.end()) throw GroupoidError("unknown object '" + id + "'");
    return it->second;
  };
  auto arrowOf = [&](const std::string& id) {
    auto it = arr.find(id);
    if (it == arr.end()) throw GroupoidError("unknown arrow '" + id + "'");
    return it->second;
  };
  for (const auto& a : raw.arrows) arr[a.id] = b.addArrow(a.id, objectOf(a.source), objectOf(a.target));
  for (const auto& [o, a] : raw.units) b.setUnit(objectOf(o), arrowOf(a));
  for (const auto& [a, i] : raw.inverses) b.setInverse(arrowOf(a), arrowOf(i));
  for (const auto& c : raw.compositions) b.setCompose(arrowOf(c.left), arrowOf(c.right), arrowOf(c.result));
  auto g = b.build();
  checkGroupoidAxioms(*g);
  return g;
}

std::vector<std::vector<int>> orbits(const FiniteGroupoid& g) {
  auto idx = orbitIndex(g);
  int n = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<std::vector<int>> out(n);
  for (int x = 0; x < g.objectCount(); ++x) out[idx[x]].push_back(x);
  return out;
}

std::vector<int> orbitIndex(const FiniteGroupoid& g) {
  // arrows are closed under inverses, so out-neighbours generate the orbit
  std::vector<int> idx(g.objectCount(), -1);
  int next = 0;
  for (int x = 0; x < g.objectCount(); ++x) {
    if (idx[x] >= 0) continue;
    idx[x] = next;
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int a : g.arrowsFrom(y))
        if (idx[g.target(a)] < 0) {
          idx[g.target(a)] = next;
          stack.push_back(g.target(a));
        }
    }
    ++next;
  }
  return idx;
}

std::vector<int> loopsAt(const FiniteGroupoid& g, int x) { return g.arrowsBetween(x, x); }

AbstractGroup isotropy(const FiniteGroupoid& g, int x) {
  if (x < 0 || x >= g.objectCount()) throw GroupoidError("unknown object index " + std::to_string(x));
  auto loops = loopsAt(g, x);
  std::unordered_map<int, int> local;
  for (std::size_t i = 0; i < loops.size(); ++i) local[loops[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(loops.size(), std::vector<int>(loops.size()));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    names.push_back(g.arrowId(loops[i]));
    for (std::size_t j = 0; j < loops.size(); ++j) table[i][j] = local.at(g.compose(loops[i], loops[j]));
  }
  return AbstractGroup("Iso(" + g.objectId(x) + ")", std::move(names), std::move(table));
}

Skeleton skeleton(const FiniteGroupoid& g) {
  Skeleton out;
  auto blocks = orbits(g);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out.push_back({static_cast<int>(i), blocks[i].front(), isotropy(g, blocks[i].front())});
  return out;
}

Functor checkFunctor(Functor f) {
  const auto& K = *f.domain;
  const auto& G = *f.codomain;
  if (static_cast<int>(f.objectMap.size()) != K.objectCount() || static_cast<int>(f.arrowMap.size()) != K.arrowCount())
    throw GroupoidError("functor maps are not total");
  for (int x : f.objectMap)
    if (x < 0 || x >= G.objectCount()) throw GroupoidError("functor sends an object outside the codomain");
  for (int a : f.arrowMap)
    if (a < 0 || a >= G.arrowCount()) throw GroupoidError("functor sends an arrow outside the codomain");
  for (int a = 0; a < K.arrowCount(); ++a) {
    int fa = f.arrowMap[a];
    if (G.source(fa) != f.objectMap[K.source(a)] || G.target(fa) != f.objectMap[K.target(a)])
      throw GroupoidError("endpoint mismatch: image of " + K.arrowId(a) + " is " + G.arrowId(fa));
  }
  for (int x = 0; x < K.objectCount(); ++x)
    if (f.arrowMap[K.unit(x)] != G.unit(f.objectMap[x]))
      throw GroupoidError("unit of " + K.objectId(x) + " not preserved");
  for (int b = 0; b < K.arrowCount(); ++b)
    for (int a : K.arrowsFrom(K.target(b)))
      if (f.arrowMap[K.compose(a, b)] != G.compose(f.arrowMap[a], f.arrowMap[b]))
        throw GroupoidError("composition not preserved at pair (" + K.arrowId(a) + ", " + K.arrowId(b) + ")");
  return f;
}

Functor identityFunctor(const GroupoidPtr& g) {
  Functor f{g, g, std::vector<int>(g->objectCount()), std::vector<int>(g->arrowCount())};
  std::iota(f.objectMap.begin(), f.objectMap.end(), 0);
  std::iota(f.arrowMap.begin(), f.arrowMap.end(), 0);
  return f;
}

Functor composeFunctors(const Functor& g, const Functor& f) {
  if (f.codomain != g.domain) throw GroupoidError("functors are not composable");
  Functor h{f.domain, g.codomain, {}, {}};
  for (int x : f.objectMap) h.objectMap.push_back(g.objectMap[x]);
  for (int a : f.arrowMap) h.arrowMap.push_back(g.arrowMap[a]);
  return h;
}

NaturalTransformation checkNatural(NaturalTransformation t) {
  const auto& phi = t.from;
  const auto& psi = t.to;
  if (phi.domain != psi.domain || phi.codomain != psi.codomain)
    throw GroupoidError("natural transformation between non-parallel functors");
  const auto& K = *phi.domain;
  const auto& G = *phi.codomain;
  if (static_cast<int>(t.component.size()) != K.objectCount())
    throw GroupoidError("natural transformation components are not total");
  for (int x = 0; x < K.objectCount(); ++x) {
    int c = t.component[x];
    if (c < 0 || c >= G.arrowCount() || G.source(c) != phi.objectMap[x] || G.target(c) != psi.objectMap[x])
      throw GroupoidError("component at " + K.objectId(x) + " has wrong endpoints");
  }
  for (int h = 0; h < K.arrowCount(); ++h) {
    int lhs = G.compose(psi.arrowMap[h], t.component[K.source(h)]);
    int rhs = G.compose(t.component[K.target(h)], phi.arrowMap[h]);
    if (lhs != rhs) throw GroupoidError("naturality square fails at arrow " + K.arrowId(h));
  }
  return t;
}

}  // namespace orbicat
