#include "doctest.h"

#include "orbicat/constructions.hpp"
#include "orbicat/corpus.hpp"
#include "orbicat/equivalence.hpp"

#include "support.hpp"

#include <random>

using namespace orbicat;

namespace {

Functor constantTo(const GroupoidPtr& from, const GroupoidPtr& to, int object) {
  return checkFunctor({from, to, std::vector<int>(from->objectCount(), object),
                       std::vector<int>(from->arrowCount(), to->unit(object))});
}

GroupoidPtr translationOf(const SimplicialGComplex& x) {
  const auto& k = x.complex();
  std::vector<std::vector<int>> act(x.group().order(), std::vector<int>(k.vertexCount()));
  for (int g = 0; g < x.group().order(); ++g)
    for (int v = 0; v < k.vertexCount(); ++v) act[g][v] = x.actVertex(g, v);
  return translationGroupoid(makeGroupAction(x.group(), k.vertexNames(), act));
}

}  // namespace

TEST_SUITE("equivalence") {

TEST_CASE("essential equivalences") {
  auto pair = pairGroupoid({"x", "y"});
  CHECK(isEssentialEquivalence(identityFunctor(pair)).holds);
  auto one = unitGroupoid({"x"});
  CHECK(isEssentialEquivalence(checkFunctor({one, pair, {0}, {pair->unit(0)}})).holds);
  auto trivialPoint = pointGroupoid(AbstractGroup::trivial());
  auto z2 = pointGroupoid(cyclicGroup(2));
  auto inc = checkFunctor({trivialPoint, z2, {0}, {z2->unit(0)}});
  auto check = isEssentialEquivalence(inc);
  CHECK_FALSE(check.holds);
  CHECK(check.obstruction.find("hom-set") != std::string::npos);
}

TEST_CASE("strong equivalences") {
  auto pair = pairGroupoid({"x", "y"});
  auto s = isStrongEquivalence(identityFunctor(pair));
  REQUIRE(s.holds);
  REQUIRE(s.quasiInverse);
  // both objects go to the least one
  CHECK(s.quasiInverse->objectMap == std::vector<int>{0, 0});

  auto one = unitGroupoid({"*"});
  auto collapse = constantTo(pair, one, 0);
  auto c = isStrongEquivalence(collapse);
  REQUIRE(c.holds);
  REQUIRE(c.unit);
  REQUIRE(c.counit);
  CHECK_NOTHROW(checkNatural(*c.unit));
  CHECK_NOTHROW(checkNatural(*c.counit));

  auto z2 = pointGroupoid(cyclicGroup(2));
  CHECK_FALSE(isStrongEquivalence(constantTo(z2, one, 0)).holds);
}

TEST_CASE("Morita equivalence") {
  std::vector<std::vector<int>> free{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto t = translationGroupoid(makeGroupAction(cyclicGroup(3), {"p", "q", "r"}, free));
  CHECK(moritaEquivalent(*t, *unitGroupoid({"*"})));
  CHECK_FALSE(moritaEquivalent(*pointGroupoid(cyclicGroup(2)), *unitGroupoid({"*"})));

  // the teardrop charts against their skeleton
  auto charts = inflatedGroupoid({{{"c"}, cyclicGroup(3)}, {{"a0", "a1", "a2", "b"}, AbstractGroup::trivial()}});
  auto w = moritaEquivalent(*charts, *groupoidFromSkeleton(skeleton(*charts)));
  REQUIRE(w);
  CHECK(w->orbitMap.size() == 2);

  CHECK_FALSE(moritaEquivalent(*pointGroupoid(namedGroup("Z4")), *pointGroupoid(namedGroup("V4"))));
}

TEST_CASE("Morita equivalence is an equivalence relation on the corpus") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto p = randomMoritaPair(rng, {6, 8});
    auto q = randomMoritaPair(rng, {6, 8});
    CHECK(moritaEquivalent(*p.a, *p.a));
    CHECK(moritaEquivalent(*p.a, *p.b));
    CHECK(moritaEquivalent(*p.b, *p.a));
    auto sk = groupoidFromSkeleton(skeleton(*p.b));
    CHECK(moritaEquivalent(*p.a, *sk));
    bool ab = moritaEquivalent(*p.a, *q.a).has_value();
    CHECK(ab == moritaEquivalent(*q.b, *p.b).has_value());
  }
}

TEST_CASE("composition of generalized maps") {
  auto pair = pairGroupoid({"x", "y"});
  auto f = identityGeneralizedMap(pair);
  auto one = unitGroupoid({"*"});
  auto g = generalizedFromFunctor(constantTo(pair, one, 0));
  auto gf = composeGeneralized(f, g);
  CHECK(moritaEquivalent(*gf.apex, *g.apex));
  auto idg = composeGeneralized(composeGeneralized(identityGeneralizedMap(pair), g), identityGeneralizedMap(one));
  CHECK(moritaEquivalent(*idg.apex, *g.apex));

  // spans through the pair groupoid
  auto span1 = makeGeneralizedMap(identityFunctor(pair), identityFunctor(pair));
  auto span2 = generalizedFromFunctor(constantTo(pair, one, 0));
  auto composed = composeGeneralized(span1, span2);
  CHECK(orbits(*composed.apex).size() == 1);
  auto z2 = pointGroupoid(cyclicGroup(2));
  CHECK_THROWS_AS(makeGeneralizedMap(constantTo(z2, one, 0), identityFunctor(z2)), GroupoidError);
}

TEST_CASE("generalized constant maps") {
  auto z3 = pointGroupoid(cyclicGroup(3));
  auto pair = pairGroupoid({"x", "y"});
  auto c = isGeneralizedConstant(generalizedFromFunctor(constantTo(pair, z3, 0)));
  REQUIRE(c);
  CHECK(groupIsomorphic(c->isotropy, cyclicGroup(3)));

  auto two = unitGroupoid({"a", "b"});
  CHECK_FALSE(isGeneralizedConstant(identityGeneralizedMap(two)));

  auto d8 = fixtures::model("d8-sphere.ogx");
  REQUIRE(d8.action);
  auto g = translationOf(*d8.action);
  int pole = g->objectIndex("N");
  auto poleOrbit = pairGroupoid({"n"});
  auto toPole = checkFunctor({poleOrbit, g, {pole}, {g->unit(pole)}});
  auto image = isGeneralizedConstant(generalizedFromFunctor(toPole));
  REQUIRE(image);
  CHECK(groupIsomorphic(image->isotropy, namedGroup("D8")));
  CHECK(image->orbit == orbitIndex(*g)[pole]);
}

TEST_CASE("comparing generalized maps") {
  auto pair = pairGroupoid({"x", "y"});
  auto f = identityGeneralizedMap(pair);
  CHECK(generalizedMapsEquivalent(f, f) == Verdict::Yes);

  // conjugate homomorphisms into a point groupoid
  auto d6 = namedGroup("D6");
  auto target = pointGroupoid(d6);
  auto z2 = pointGroupoid(cyclicGroup(2));
  int s = target->arrowIndex("s");
  int sr = target->arrowIndex("sr");
  int loop = 1 - z2->unit(0);
  std::vector<int> a(2), b(2);
  a[z2->unit(0)] = b[z2->unit(0)] = target->unit(0);
  a[loop] = s;
  b[loop] = sr;
  auto fa = generalizedFromFunctor(checkFunctor({z2, target, {0}, a}));
  auto fb = generalizedFromFunctor(checkFunctor({z2, target, {0}, b}));
  CHECK(generalizedMapsEquivalent(fa, fb) == Verdict::Yes);

  // Z2 inner automorphisms are trivial
  auto z2id = identityGeneralizedMap(z2);
  CHECK(generalizedMapsEquivalent(z2id, z2id) == Verdict::Yes);

  // different orbits
  auto two = unitGroupoid({"a", "b"});
  auto one = unitGroupoid({"*"});
  auto toA = generalizedFromFunctor(checkFunctor({one, two, {0}, {two->unit(0)}}));
  auto toB = generalizedFromFunctor(checkFunctor({one, two, {1}, {two->unit(1)}}));
  CHECK(generalizedMapsEquivalent(toA, toB) == Verdict::No);
  CHECK(inducedOrbitMap(toA) != inducedOrbitMap(toB));
}

}  // TEST_SUITE
