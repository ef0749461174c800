#include "orbicat/constructions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace orbicat {

GroupAction makeGroupAction(AbstractGroup group, std::vector<std::string> carrier, std::vector<std::vector<int>> act) {
  const int n = static_cast<int>(carrier.size());
  if (static_cast<int>(act.size()) != group.order())
    throw GroupoidError("action table needs one row per group element");
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != n) throw GroupoidError("action row has wrong length");
    for (int y : row)
      if (y < 0 || y >= n) throw GroupoidError("action sends a point outside the carrier");
  }
  for (int x = 0; x < n; ++x)
    if (act[group.identity()][x] != x) throw GroupoidError("identity moves point " + carrier[x]);
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int x = 0; x < n; ++x)
        if (act[g][act[h][x]] != act[group.mul(g, h)][x])
          throw GroupoidError("action is not compatible with the group law at (" + group.elementName(g) + ", " +
                              group.elementName(h) + ", " + carrier[x] + ")");
  return {std::move(group), std::move(carrier), std::move(act)};
}

GroupoidPtr unitGroupoid(const std::vector<std::string>& objects) {
  if (objects.empty()) throw GroupoidError("unit groupoid over an empty set");
  GroupoidBuilder b;
  for (const auto& o : objects) {
    int x = b.addObject(o);
    int u = b.addArrow("id_" + o, x, x);
    b.setUnit(x, u);
    b.setInverse(u, u);
    b.setCompose(u, u, u);
  }
  return b.build();
}

GroupoidPtr pairGroupoid(const std::vector<std::string>& objects) {
  if (objects.empty()) throw GroupoidError("pair groupoid over an empty set");
  const int n = static_cast<int>(objects.size());
  GroupoidBuilder b;
  for (const auto& o : objects) b.addObject(o);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      arrow[x][y] = b.addArrow(x == y ? "id_" + objects[x] : objects[x] + ">" + objects[y], x, y);
  for (int x = 0; x < n; ++x) {
    b.setUnit(x, arrow[x][x]);
    for (int y = 0; y < n; ++y) {
      b.setInverse(arrow[x][y], arrow[y][x]);
      for (int z = 0; z < n; ++z) b.setCompose(arrow[y][z], arrow[x][y], arrow[x][z]);
    }
  }
  return b.build();
}

GroupoidPtr inflatedGroupoid(const std::vector<InflationOrbit>& orbitList) {
  GroupoidBuilder b;
  for (const auto& orbit : orbitList) {
    const auto& k = orbit.group;
    const int m = static_cast<int>(orbit.objects.size());
    if (m == 0) throw GroupoidError("inflation orbit without objects");
    std::vector<int> obj;
    for (const auto& o : orbit.objects) obj.push_back(b.addObject(o));
    // arrow[x][g][y]
    std::vector<std::vector<std::vector<int>>> arrow(m, std::vector<std::vector<int>>(k.order(), std::vector<int>(m)));
    for (int x = 0; x < m; ++x)
      for (int g = 0; g < k.order(); ++g)
        for (int y = 0; y < m; ++y) {
          std::string id = (x == y && g == k.identity())
                               ? "id_" + orbit.objects[x]
                               : orbit.objects[x] + ">" + orbit.objects[y] + ":" + k.elementName(g);
          arrow[x][g][y] = b.addArrow(std::move(id), obj[x], obj[y]);
        }
    for (int x = 0; x < m; ++x) {
      b.setUnit(obj[x], arrow[x][k.identity()][x]);
      for (int g = 0; g < k.order(); ++g)
        for (int y = 0; y < m; ++y) {
          b.setInverse(arrow[x][g][y], arrow[y][k.inverse(g)][x]);
          for (int h = 0; h < k.order(); ++h)
            for (int z = 0; z < m; ++z) b.setCompose(arrow[y][h][z], arrow[x][g][y], arrow[x][k.mul(h, g)][z]);
        }
    }
  }
  return b.build();
}

GroupoidPtr pointGroupoid(const AbstractGroup& k, const std::string& object) {
  GroupoidBuilder b;
  int x = b.addObject(object);
  std::vector<int> arrow;
  for (int g = 0; g < k.order(); ++g) arrow.push_back(b.addArrow(k.elementName(g), x, x));
  b.setUnit(x, arrow[k.identity()]);
  for (int g = 0; g < k.order(); ++g) {
    b.setInverse(arrow[g], arrow[k.inverse(g)]);
    for (int h = 0; h < k.order(); ++h) b.setCompose(arrow[g], arrow[h], arrow[k.mul(g, h)]);
  }
  return b.build();
}

GroupoidPtr groupoidFromSkeleton(const Skeleton& skel) {
  std::vector<InflationOrbit> orbitList;
  for (const auto& r : skel) orbitList.push_back({{"o" + std::to_string(r.orbit)}, r.isotropy});
  return inflatedGroupoid(orbitList);
}

GroupoidPtr translationGroupoid(const GroupAction& action) {
  const auto& k = action.group;
  const int n = static_cast<int>(action.carrier.size());
  GroupoidBuilder b;
  for (const auto& c : action.carrier) b.addObject(c);
  std::vector<std::vector<int>> arrow(k.order(), std::vector<int>(n));
  // arrows grouped by source so that arrowsFrom lists follow group order
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < k.order(); ++g)
      arrow[g][x] = b.addArrow("(" + k.elementName(g) + "," + action.carrier[x] + ")", x, action.act[g][x]);
  for (int x = 0; x < n; ++x) {
    b.setUnit(x, arrow[k.identity()][x]);
    for (int g = 0; g < k.order(); ++g) {
      int gx = action.act[g][x];
      b.setInverse(arrow[g][x], arrow[k.inverse(g)][gx]);
      for (int h = 0; h < k.order(); ++h) b.setCompose(arrow[h][gx], arrow[g][x], arrow[k.mul(h, g)][x]);
    }
  }
  return b.build();
}

GroupoidPtr productGroupoid(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  GroupoidBuilder b;
  const int nh = h.objectCount();
  const int ah = h.arrowCount();
  for (int x = 0; x < g.objectCount(); ++x)
    for (int y = 0; y < nh; ++y) b.addObject("(" + g.objectId(x) + "," + h.objectId(y) + ")");
  auto objectOf = [&](int x, int y) { return x * nh + y; };
  auto arrowOf = [&](int a, int c) { return a * ah + c; };
  for (int a = 0; a < g.arrowCount(); ++a)
    for (int c = 0; c < ah; ++c)
      b.addArrow("(" + g.arrowId(a) + "," + h.arrowId(c) + ")", objectOf(g.source(a), h.source(c)),
                 objectOf(g.target(a), h.target(c)));
  for (int x = 0; x < g.objectCount(); ++x)
    for (int y = 0; y < nh; ++y) b.setUnit(objectOf(x, y), arrowOf(g.unit(x), h.unit(y)));
  std::size_t gPairs = 0, hPairs = 0;
  for (int a = 0; a < g.arrowCount(); ++a) gPairs += g.arrowsFrom(g.target(a)).size();
  for (int c = 0; c < ah; ++c) hPairs += h.arrowsFrom(h.target(c)).size();
  b.reserveCompositions(gPairs * hPairs);
  for (int a = 0; a < g.arrowCount(); ++a)
    for (int c = 0; c < ah; ++c) {
      b.setInverse(arrowOf(a, c), arrowOf(g.inverse(a), h.inverse(c)));
      for (int a2 : g.arrowsFrom(g.target(a)))
        for (int c2 : h.arrowsFrom(h.target(c)))
          b.setCompose(arrowOf(a2, c2), arrowOf(a, c), arrowOf(g.compose(a2, a), h.compose(c2, c)));
    }
  return b.build();
}

GroupoidPtr disjointUnion(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  GroupoidBuilder b;
  for (int side = 0; side < 2; ++side) {
    const auto* part = side == 0 ? &g : &h;
    const std::string prefix = side == 0 ? "L:" : "R:";
    const int objectBase = b.objectCount();
    const int arrowBase = b.arrowCount();
    for (int x = 0; x < part->objectCount(); ++x) b.addObject(prefix + part->objectId(x));
    for (int a = 0; a < part->arrowCount(); ++a)
      b.addArrow(prefix + part->arrowId(a), objectBase + part->source(a), objectBase + part->target(a));
    for (int x = 0; x < part->objectCount(); ++x) b.setUnit(objectBase + x, arrowBase + part->unit(x));
    for (int a = 0; a < part->arrowCount(); ++a) {
      b.setInverse(arrowBase + a, arrowBase + part->inverse(a));
      for (int c : part->arrowsFrom(part->target(a)))
        b.setCompose(arrowBase + c, arrowBase + a, arrowBase + part->compose(c, a));
    }
  }
  return b.build();
}

GroupoidPtr fullSubgroupoid(const FiniteGroupoid& g, const std::vector<int>& objects) {
  std::vector<int> local(g.objectCount(), -1);
  std::vector<int> sorted = objects;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int x : sorted) {
    if (x < 0 || x >= g.objectCount()) throw GroupoidError("object index out of range");
    local[x] = 0;
  }
  for (int x : sorted)
    for (int a : g.arrowsFrom(x))
      if (local[g.target(a)] < 0)
        throw GroupoidError("object set is not invariant: arrow " + g.arrowId(a) + " leaves it");
  GroupoidBuilder b;
  for (int x : sorted) local[x] = b.addObject(g.objectId(x));
  std::vector<int> arrowLocal(g.arrowCount(), -1);
  for (int x : sorted)
    for (int a : g.arrowsFrom(x)) arrowLocal[a] = b.addArrow(g.arrowId(a), local[x], local[g.target(a)]);
  for (int x : sorted) {
    b.setUnit(local[x], arrowLocal[g.unit(x)]);
    for (int a : g.arrowsFrom(x)) {
      b.setInverse(arrowLocal[a], arrowLocal[g.inverse(a)]);
      for (int c : g.arrowsFrom(g.target(a))) b.setCompose(arrowLocal[c], arrowLocal[a], arrowLocal[g.compose(c, a)]);
    }
  }
  return b.build();
}

FiberedProduct fiberedProduct(const Functor& phi, const Functor& psi) {
  if (phi.codomain != psi.codomain) throw GroupoidError("fibered product needs a common codomain");
  const auto& J = *phi.domain;
  const auto& Jp = *psi.domain;
  const auto& G = *phi.codomain;
  struct Obj {
    int x, g, y;
  };
  std::vector<Obj> objs;
  std::map<std::tuple<int, int, int>, int> objIndex;
  GroupoidBuilder b;
  for (int x = 0; x < J.objectCount(); ++x)
    for (int y = 0; y < Jp.objectCount(); ++y)
      for (int g : G.arrowsBetween(phi.objectMap[x], psi.objectMap[y])) {
        int o = b.addObject("(" + J.objectId(x) + "|" + G.arrowId(g) + "|" + Jp.objectId(y) + ")");
        objIndex[{x, g, y}] = o;
        objs.push_back({x, g, y});
      }
  Functor first{nullptr, phi.domain, {}, {}};
  Functor second{nullptr, psi.domain, {}, {}};
  for (const auto& o : objs) {
    first.objectMap.push_back(o.x);
    second.objectMap.push_back(o.y);
  }
  std::map<std::tuple<int, int, int>, int> arrowIndex;  // (source object, j, j')
  struct Arr {
    int o, j, jp;
  };
  std::vector<Arr> arrs;
  for (int o = 0; o < static_cast<int>(objs.size()); ++o) {
    const auto& src = objs[o];
    for (int j : J.arrowsFrom(src.x))
      for (int jp : Jp.arrowsFrom(src.y)) {
        int g2 = G.compose(G.compose(psi.arrowMap[jp], src.g), G.inverse(phi.arrowMap[j]));
        int t = objIndex.at({J.target(j), g2, Jp.target(jp)});
        int a = b.addArrow("[" + J.arrowId(j) + "," + Jp.arrowId(jp) + "]@" + std::to_string(o), o, t);
        arrowIndex[{o, j, jp}] = a;
        arrs.push_back({o, j, jp});
        first.arrowMap.push_back(j);
        second.arrowMap.push_back(jp);
      }
  }
  auto targetObj = [&](const Arr& a) {
    const auto& src = objs[a.o];
    int g2 = G.compose(G.compose(psi.arrowMap[a.jp], src.g), G.inverse(phi.arrowMap[a.j]));
    return objIndex.at({J.target(a.j), g2, Jp.target(a.jp)});
  };
  for (int o = 0; o < static_cast<int>(objs.size()); ++o)
    b.setUnit(o, arrowIndex.at({o, J.unit(objs[o].x), Jp.unit(objs[o].y)}));
  for (int a = 0; a < static_cast<int>(arrs.size()); ++a) {
    const auto& r = arrs[a];
    int t = targetObj(r);
    b.setInverse(a, arrowIndex.at({t, J.inverse(r.j), Jp.inverse(r.jp)}));
    for (int j2 : J.arrowsFrom(objs[t].x))
      for (int jp2 : Jp.arrowsFrom(objs[t].y))
        b.setCompose(arrowIndex.at({t, j2, jp2}), a, arrowIndex.at({r.o, J.compose(j2, r.j), Jp.compose(jp2, r.jp)}));
  }
  auto p = b.build();
  first.domain = p;
  second.domain = p;
  return {p, std::move(first), std::move(second)};
}

}  // namespace orbicat
