#include "orbicat/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbicat {

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

EssentialCheck isEssentialEquivalence(const Functor& f) {
  const auto& K = *f.domain;
  const auto& G = *f.codomain;
  auto korb = orbitIndex(K);
  auto gorb = orbitIndex(G);
  const int gOrbits = gorb.empty() ? 0 : *std::max_element(gorb.begin(), gorb.end()) + 1;

  // essentially surjective: every G-orbit meets the image
  // hit[o] = first domain object landing in G-orbit o
  std::vector<int> hit(gOrbits, -1);
  for (int x = 0; x < K.objectCount(); ++x) {
    int o = gorb[f.objectMap[x]];
    if (hit[o] < 0) hit[o] = x;
    else if (korb[hit[o]] != korb[x])
      return {false, "hom-set " + K.objectId(hit[o]) + " -> " + K.objectId(x) + " is empty but its image is not"};
  }
  for (int y = 0; y < G.objectCount(); ++y)
    if (hit[gorb[y]] < 0) return {false, "object " + G.objectId(y) + " is not reached"};

  // fully faithful: injective on each hom-set and sizes agree
  std::vector<int> isoSize(G.objectCount(), 0);
  for (int y = 0; y < G.objectCount(); ++y)
    for (int a : G.arrowsFrom(y))
      if (G.target(a) == y) ++isoSize[y];
  std::vector<int> count(K.objectCount());
  // stamp of the hom-set (x, z) that last used each G-arrow
  std::vector<long long> seen(G.arrowCount(), -1);
  const long long n = K.objectCount();
  for (int x = 0; x < K.objectCount(); ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (int a : K.arrowsFrom(x)) {
      int b = f.arrowMap[a];
      long long stamp = x * n + K.target(a);
      if (seen[b] == stamp)
        return {false, "hom-set " + K.objectId(x) + " -> " + K.objectId(K.target(a)) + " is not mapped injectively"};
      seen[b] = stamp;
      ++count[K.target(a)];
    }
    for (int a : K.arrowsFrom(x)) {
      int z = K.target(a);
      if (count[z] != isoSize[f.objectMap[x]])
        return {false, "hom-set " + K.objectId(x) + " -> " + K.objectId(z) + " is not mapped onto"};
    }
  }
  return {true, {}};
}

StrongEquivalence isStrongEquivalence(const Functor& f) {
  StrongEquivalence out;
  if (!isEssentialEquivalence(f).holds) return out;
  const auto& K = *f.domain;
  const auto& G = *f.codomain;

  // preimage[x][(target, arrow of G from F(x))] = arrow of K from x
  std::vector<std::map<std::pair<int, int>, int>> preimage(K.objectCount());
  for (int x = 0; x < K.objectCount(); ++x)
    for (int a : K.arrowsFrom(x)) preimage[x][{K.target(a), f.arrowMap[a]}] = a;

  std::vector<int> psiObj(G.objectCount(), -1);
  std::vector<int> eta(G.objectCount(), -1);  // y -> F(psi(y))
  for (int y = 0; y < G.objectCount(); ++y) {
    for (int x = 0; x < K.objectCount() && psiObj[y] < 0; ++x) {
      auto between = G.arrowsBetween(y, f.objectMap[x]);
      if (between.empty()) continue;
      psiObj[y] = x;
      eta[y] = f.objectMap[x] == y ? G.unit(y) : between.front();
    }
  }
  Functor psi{f.codomain, f.domain, psiObj, std::vector<int>(G.arrowCount())};
  for (int g = 0; g < G.arrowCount(); ++g) {
    int y = G.source(g), y2 = G.target(g);
    int image = G.compose(G.compose(eta[y2], g), G.inverse(eta[y]));
    psi.arrowMap[g] = preimage[psiObj[y]].at({psiObj[y2], image});
  }
  psi = checkFunctor(std::move(psi));

  Functor fpsi = composeFunctors(f, psi);
  Functor psif = composeFunctors(psi, f);
  NaturalTransformation unit{identityFunctor(f.codomain), fpsi, eta};
  std::vector<int> counitComp(K.objectCount());
  for (int x = 0; x < K.objectCount(); ++x) {
    int y = f.objectMap[x];
    counitComp[x] = preimage[psiObj[y]].at({x, G.inverse(eta[y])});
  }
  NaturalTransformation counit{psif, identityFunctor(f.domain), counitComp};
  out.unit = checkNatural(std::move(unit));
  out.counit = checkNatural(std::move(counit));
  out.quasiInverse = std::move(psi);
  out.holds = true;
  return out;
}

std::optional<GroupMap> groupIsomorphic(const AbstractGroup& a, const AbstractGroup& b) {
  return findIsomorphism(a, b);
}

std::optional<MoritaWitness> moritaEquivalent(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  auto sg = skeleton(g);
  auto sh = skeleton(h);
  if (sg.size() != sh.size()) return std::nullopt;
  MoritaWitness w;
  w.orbitMap.assign(sg.size(), -1);
  w.isomorphisms.resize(sg.size());
  std::vector<bool> used(sh.size(), false);
  // Isomorphism is an equivalence relation, so greedy matching is exact.
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < sh.size(); ++j) {
      if (used[j]) continue;
      auto iso = findIsomorphism(sg[i].isotropy, sh[j].isotropy);
      if (!iso) continue;
      used[j] = true;
      w.orbitMap[i] = static_cast<int>(j);
      w.isomorphisms[i] = std::move(*iso);
      break;
    }
    if (w.orbitMap[i] < 0) return std::nullopt;
  }
  return w;
}

GeneralizedMap makeGeneralizedMap(Functor left, Functor right) {
  if (left.domain != right.domain) throw GroupoidError("span legs must share their domain");
  left = checkFunctor(std::move(left));
  right = checkFunctor(std::move(right));
  auto check = isEssentialEquivalence(left);
  if (!check.holds) throw GroupoidError("left leg is not an essential equivalence: " + check.obstruction);
  GroupoidPtr apex = left.domain;
  return {apex, std::move(left), std::move(right)};
}

GeneralizedMap identityGeneralizedMap(const GroupoidPtr& g) {
  return makeGeneralizedMap(identityFunctor(g), identityFunctor(g));
}

GeneralizedMap generalizedFromFunctor(const Functor& f) {
  return makeGeneralizedMap(identityFunctor(f.domain), f);
}

GeneralizedMap composeGeneralized(const GeneralizedMap& f, const GeneralizedMap& g) {
  if (f.right.codomain != g.left.codomain)
    throw GroupoidError("generalized maps are not composable: middle groupoids differ");
  auto p = fiberedProduct(f.right, g.left);
  Functor left = composeFunctors(f.left, p.first);
  Functor right = composeFunctors(g.right, p.second);
  auto check = isEssentialEquivalence(left);
  if (!check.holds)
    throw GroupoidError("internal error: projected left leg is not an essential equivalence: " + check.obstruction);
  return {p.groupoid, std::move(left), std::move(right)};
}

std::optional<ConstantImage> isGeneralizedConstant(const GeneralizedMap& f) {
  const auto& G = *f.right.codomain;
  if (f.apex->objectCount() == 0) return std::nullopt;
  auto gorb = orbitIndex(G);
  int o = gorb[f.right.objectMap[0]];
  for (int y : f.right.objectMap)
    if (gorb[y] != o) return std::nullopt;
  auto blocks = orbits(G);
  return ConstantImage{o, isotropy(G, blocks[o].front())};
}

std::vector<int> inducedOrbitMap(const GeneralizedMap& f) {
  const auto& K = *f.left.codomain;
  auto korb = orbitIndex(K);
  auto gorb = orbitIndex(*f.right.codomain);
  const int n = korb.empty() ? 0 : *std::max_element(korb.begin(), korb.end()) + 1;
  std::vector<int> out(n, -1);
  for (int x = 0; x < f.apex->objectCount(); ++x) {
    int o = korb[f.left.objectMap[x]];
    if (out[o] < 0) out[o] = gorb[f.right.objectMap[x]];
  }
  return out;
}

Verdict generalizedMapsEquivalent(const GeneralizedMap& f, const GeneralizedMap& g) {
  if (f.left.codomain != g.left.codomain || f.right.codomain != g.right.codomain)
    throw GroupoidError("generalized maps must share their outer groupoids");
  if (inducedOrbitMap(f) != inducedOrbitMap(g)) return Verdict::No;

  const auto& G = *f.right.codomain;
  auto p = fiberedProduct(f.left, g.left);
  const auto& L = *p.groupoid;
  Functor a = composeFunctors(f.right, p.first);
  Functor b = composeFunctors(g.right, p.second);

  // Search S: a ⇒ b one connected component at a time.
  std::vector<int> comp(L.objectCount(), -1);
  for (const auto& block : orbits(L)) {
    const int root = block.front();
    bool found = false;
    for (int s0 : G.arrowsBetween(a.objectMap[root], b.objectMap[root])) {
      for (int x : block) comp[x] = -1;
      comp[root] = s0;
      std::vector<int> stack{root};
      bool ok = true;
      while (!stack.empty() && ok) {
        int x = stack.back();
        stack.pop_back();
        for (int h : L.arrowsFrom(x)) {
          int y = L.target(h);
          int want = G.compose(G.compose(b.arrowMap[h], comp[x]), G.inverse(a.arrowMap[h]));
          if (comp[y] < 0) {
            comp[y] = want;
            stack.push_back(y);
          } else if (comp[y] != want) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return Verdict::Unknown;
  }
  checkNatural({a, b, comp});
  return Verdict::Yes;
}

}  // namespace orbicat
