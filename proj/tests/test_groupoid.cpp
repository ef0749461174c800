#include "doctest.h"

#include "orbicat/constructions.hpp"
#include "orbicat/equivalence.hpp"
#include "orbicat/groupoid.hpp"

#include <set>

using namespace orbicat;

namespace {

GroupAction z3OnDisk() {
  // center c fixed, u0 u1 u2 rotated
  std::vector<std::vector<int>> act{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return makeGroupAction(cyclicGroup(3), {"c", "u0", "u1", "u2"}, act);
}

void checkStructure(const FiniteGroupoid& g) {
  auto idx = orbitIndex(g);
  for (int a = 0; a < g.arrowCount(); ++a) {
    CHECK(g.inverse(g.inverse(a)) == a);
    CHECK(idx[g.source(a)] == idx[g.target(a)]);
  }
  for (const auto& o : orbits(g))
    for (int x : o) CHECK(groupIsomorphic(isotropy(g, o.front()), isotropy(g, x)));
}

}  // namespace

TEST_SUITE("groupoid") {

TEST_CASE("validation of small groupoids") {
  RawGroupoid unit;
  unit.objects = {"x"};
  unit.arrows = {{"id", "x", "x"}};
  unit.units = {{"x", "id"}};
  unit.inverses = {{"id", "id"}};
  unit.compositions = {{"id", "id", "id"}};
  auto g = validateGroupoid(unit);
  CHECK(g->objectCount() == 1);
  CHECK(g->arrowCount() == 1);

  auto pair = pairGroupoid({"x", "y"});
  CHECK(pair->objectCount() == 2);
  CHECK(pair->arrowCount() == 4);
  checkGroupoidAxioms(*pair);

  RawGroupoid bad = unit;
  bad.objects = {"x", "y"};
  bad.arrows.push_back({"idy", "y", "y"});
  bad.arrows.push_back({"f", "x", "y"});
  bad.units.push_back({"y", "idy"});
  bad.inverses.push_back({"idy", "idy"});
  bad.compositions.push_back({"idy", "idy", "idy"});
  bad.compositions.push_back({"f", "id", "f"});
  bad.compositions.push_back({"idy", "f", "f"});
  CHECK_THROWS_WITH_AS(validateGroupoid(bad), doctest::Contains("missing inverse"), GroupoidError);
}

TEST_CASE("orbits") {
  CHECK(orbits(*unitGroupoid({"a", "b", "c", "d"})).size() == 4);
  CHECK(orbits(*pairGroupoid({"a", "b", "c"})).size() == 1);
  std::vector<std::vector<int>> free{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto t = translationGroupoid(makeGroupAction(cyclicGroup(3), {"p", "q", "r"}, free));
  CHECK(t->arrowCount() == 9);
  CHECK(orbits(*t).size() == 1);
  checkStructure(*t);
}

TEST_CASE("isotropy") {
  auto pair = pairGroupoid({"x", "y"});
  CHECK(isotropy(*pair, 0).order() == 1);
  auto d8 = pointGroupoid(namedGroup("D8"));
  CHECK(isotropy(*d8, 0).order() == 8);
  CHECK(groupIsomorphic(isotropy(*d8, 0), namedGroup("D8")));
}

TEST_CASE("skeleton") {
  auto u = skeleton(*unitGroupoid({"a", "b"}));
  REQUIRE(u.size() == 2);
  CHECK(u[0].isotropy.order() == 1);
  CHECK(u[1].isotropy.order() == 1);
  auto z2 = skeleton(*pointGroupoid(cyclicGroup(2)));
  REQUIRE(z2.size() == 1);
  CHECK(z2[0].isotropy.order() == 2);

  auto disk = translationGroupoid(z3OnDisk());
  checkStructure(*disk);
  auto sk = skeleton(*disk);
  REQUIRE(sk.size() == 2);
  std::multiset<int> orders{sk[0].isotropy.order(), sk[1].isotropy.order()};
  CHECK(orders == std::multiset<int>{1, 3});

  // rebuilding from a skeleton gives the same skeleton
  auto again = skeleton(*groupoidFromSkeleton(sk));
  REQUIRE(again.size() == sk.size());
  for (std::size_t i = 0; i < sk.size(); ++i) CHECK(groupIsomorphic(again[i].isotropy, sk[i].isotropy));
}

TEST_CASE("functors") {
  auto z2 = pointGroupoid(cyclicGroup(2));
  CHECK_NOTHROW(checkFunctor(identityFunctor(z2)));
  auto one = unitGroupoid({"*"});
  CHECK_NOTHROW(checkFunctor({z2, one, {0}, {0, 0}}));
  // the loop goes to the unit, the unit to the unit
  auto toSelf = checkFunctor({z2, z2, {0}, {z2->unit(0), z2->unit(0)}});
  CHECK(toSelf.arrowMap[1] == z2->unit(0));
  int loop = 1 - z2->unit(0);
  CHECK_THROWS_AS(checkFunctor({z2, z2, {0}, {loop, loop}}), GroupoidError);
  auto composed = composeFunctors(identityFunctor(z2), toSelf);
  CHECK(composed.arrowMap == toSelf.arrowMap);
}

TEST_CASE("natural transformations") {
  auto pair = pairGroupoid({"x", "y"});
  auto point = unitGroupoid({"*"});
  Functor toX = checkFunctor({point, pair, {0}, {pair->unit(0)}});
  Functor toY = checkFunctor({point, pair, {1}, {pair->unit(1)}});
  CHECK_NOTHROW(checkNatural({toX, toX, {pair->unit(0)}}));
  auto xy = pair->arrowsBetween(0, 1);
  REQUIRE(xy.size() == 1);
  CHECK_NOTHROW(checkNatural({toX, toY, {xy[0]}}));

  // identity and trivial endomorphisms of Z2 are not isomorphic functors
  auto z2 = pointGroupoid(cyclicGroup(2));
  Functor id = identityFunctor(z2);
  Functor triv = checkFunctor({z2, z2, {0}, {z2->unit(0), z2->unit(0)}});
  for (int a = 0; a < z2->arrowCount(); ++a)
    CHECK_THROWS_WITH_AS(checkNatural({id, triv, {a}}), doctest::Contains("naturality"), GroupoidError);
}

TEST_CASE("error messages name the failing item") {
  auto pair = pairGroupoid({"x", "y"});
  CHECK_THROWS_WITH(pair->objectIndex("z"), doctest::Contains("unknown object 'z'"));
  CHECK_THROWS_WITH(pair->arrowIndex("nope"), doctest::Contains("unknown arrow 'nope'"));
}

}  // TEST_SUITE
