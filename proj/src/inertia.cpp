#include "orbicat/inertia.hpp"

#include "orbicat/constructions.hpp"

#include <unordered_map>

namespace orbicat {

GroupoidPtr inertiaGroupoid(const FiniteGroupoid& g) {
  GroupoidBuilder b;
  std::vector<int> loopObject(g.arrowCount(), -1);
  std::vector<int> loops;
  for (int a = 0; a < g.arrowCount(); ++a)
    if (g.source(a) == g.target(a)) {
      loopObject[a] = b.addObject(g.arrowId(a));
      loops.push_back(a);
    }
  // arrow (loop, h) -> index, keyed loop * arrowCount + h
  std::unordered_map<long long, int> arrowOf;
  const long long n = g.arrowCount();
  for (int loop : loops)
    for (int h : g.arrowsFrom(g.source(loop))) {
      int conj = g.compose(g.compose(h, loop), g.inverse(h));
      arrowOf[loop * n + h] = b.addArrow("(" + g.arrowId(loop) + "|" + g.arrowId(h) + ")", loopObject[loop],
                                         loopObject[conj]);
    }
  for (int loop : loops) {
    const int x = g.source(loop);
    b.setUnit(loopObject[loop], arrowOf.at(loop * n + g.unit(x)));
    for (int h : g.arrowsFrom(x)) {
      int conj = g.compose(g.compose(h, loop), g.inverse(h));
      int self = arrowOf.at(loop * n + h);
      b.setInverse(self, arrowOf.at(conj * n + g.inverse(h)));
      for (int h2 : g.arrowsFrom(g.target(h))) b.setCompose(arrowOf.at(conj * n + h2), self, arrowOf.at(loop * n + g.compose(h2, h)));
    }
  }
  return b.build();
}

SectorDecomposition sectorsDiscrete(const FiniteGroupoid& g) {
  auto inertia = inertiaGroupoid(g);
  SectorDecomposition out;
  for (auto& block : orbits(*inertia)) {
    DiscreteSector s;
    s.id = static_cast<int>(out.size());
    for (int o : block)
      if (g.isUnit(g.arrowIndex(inertia->objectId(o)))) s.twisted = false;
    s.groupoid = fullSubgroupoid(*inertia, block);
    s.objects = std::move(block);
    out.push_back(std::move(s));
  }
  return out;
}

ExactRational baezDolanCardinality(const FiniteGroupoid& g) {
  ExactRational sum;
  for (const auto& r : skeleton(g)) sum += ExactRational(1, r.isotropy.order());
  return sum;
}

long long stringEulerCardinality(const FiniteGroupoid& g) {
  long long sum = 0;
  for (const auto& r : skeleton(g)) sum += classNumber(r.isotropy);
  return sum;
}

}  // namespace orbicat
