#include "doctest.h"

#include "orbicat/constructions.hpp"
#include "orbicat/corpus.hpp"
#include "orbicat/equivalence.hpp"
#include "orbicat/inertia.hpp"
#include "orbicat/sectors.hpp"

#include "support.hpp"

#include <random>

using namespace orbicat;

TEST_SUITE("inertia") {

TEST_CASE("inertia groupoid of a point") {
  auto z2 = pointGroupoid(cyclicGroup(2));
  auto in = inertiaGroupoid(*z2);
  CHECK(in->objectCount() == 2);
  CHECK(orbits(*in).size() == 2);
  // abelian: every loop is fixed by conjugation
  CHECK(in->arrowCount() == 4);

  auto d6 = inertiaGroupoid(*pointGroupoid(namedGroup("D6")));
  CHECK(d6->objectCount() == 6);
  CHECK(orbits(*d6).size() == 3);
}

TEST_CASE("discrete sectors") {
  CHECK(sectorsDiscrete(*unitGroupoid({"*"})).size() == 1);
  auto z2 = sectorsDiscrete(*pointGroupoid(cyclicGroup(2)));
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].twisted != z2[1].twisted);
  CHECK(sectorsDiscrete(*pointGroupoid(namedGroup("D8"))).size() == 5);
  CHECK(sectorsDiscrete(*pairGroupoid({"x", "y", "z"})).size() == 1);

  int untwisted = 0;
  for (const auto& s : sectorsDiscrete(*pointGroupoid(namedGroup("Q8")))) untwisted += s.twisted ? 0 : 1;
  CHECK(untwisted == 1);
}

TEST_CASE("groupoid cardinalities") {
  CHECK(baezDolanCardinality(*pointGroupoid(cyclicGroup(2))) == ExactRational(1, 2));
  auto d8 = pointGroupoid(namedGroup("D8"));
  CHECK(baezDolanCardinality(*disjointUnion(*d8, *d8)) == ExactRational(1, 4));
  for (int n = 1; n <= 7; ++n) CHECK(stringEulerCardinality(*pointGroupoid(cyclicGroup(n))) == n);
  CHECK(stringEulerCardinality(*d8) == 5);
  CHECK(baezDolanCardinality(*pairGroupoid({"x", "y"})) == ExactRational(1));

  auto skel = parseGroupoid(readFile(fixtures::modelPath("teardrop-skel.gpd")));
  CHECK(baezDolanCardinality(*skel) == ExactRational(4, 3));
  CHECK(stringEulerCardinality(*skel) == 4);
}

TEST_CASE("sectors of labeled models") {
  auto tear = fixtures::model("teardrop.ogx").model;
  auto s = sectorsSimplicial(tear);
  REQUIRE(s.size() == 3);
  CHECK_FALSE(s[0].twisted);
  CHECK(s[1].model.complex().simplexCount() == 1);
  CHECK(s[1].model.labelOrder(0) == 3);

  auto klein = sectorsSimplicial(fixtures::model("klein.ogx").model);
  CHECK(klein.size() == 3);
}

TEST_CASE("sectors of actions") {
  auto d8 = fixtures::model("d8-sphere.ogx");
  REQUIRE(d8.action);
  auto s = sectorsSimplicial(*d8.action);
  CHECK(s.size() == 7);
  int points = 0, intervals = 0;
  for (const auto& sec : s) {
    if (!sec.twisted) continue;
    if (sec.model.complex().vertexCount() == 1) ++points;
    if (sec.model.complex().vertexCount() == 5) ++intervals;
  }
  CHECK(points == 4);
  CHECK(intervals == 2);

  auto kleinAction = fixtures::model("klein-action.ogx");
  REQUIRE(kleinAction.action);
  CHECK(sectorsSimplicial(*kleinAction.action).size() == 3);
}

TEST_CASE("model cardinalities") {
  auto tear = modelCardinalities(fixtures::model("teardrop.ogx").model);
  CHECK(tear.orbifoldEuler == ExactRational(4, 3));
  CHECK(tear.stringEuler == 4);
  auto d8 = modelCardinalities(fixtures::model("d8-sphere.ogx").model);
  CHECK(d8.orbifoldEuler == ExactRational(1, 4));
  CHECK(d8.stringEuler == 7);
  auto klein = modelCardinalities(fixtures::model("klein.ogx").model);
  CHECK(klein.orbifoldEuler == ExactRational(0));
  auto oct = modelCardinalities(fixtures::model("octahedron.ogx").model);
  CHECK(oct.orbifoldEuler == ExactRational(2));
  CHECK(oct.stringEuler == 2);
}

TEST_CASE("model cardinalities are subdivision invariant") {
  for (const char* name : {"teardrop.ogx", "klein.ogx", "klein-action.ogx"}) {
    auto m = fixtures::model(name).model;
    auto a = modelCardinalities(m);
    auto b = modelCardinalities(barycentricSubdivide(m));
    CHECK(a.orbifoldEuler == b.orbifoldEuler);
    CHECK(a.stringEuler == b.stringEuler);
  }
}

TEST_CASE("inertia respects Morita equivalence") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 15; ++i) {
    auto p = randomMoritaPair(rng, {6, 8});
    CHECK(moritaEquivalent(*inertiaGroupoid(*p.a), *inertiaGroupoid(*p.b)));
    CHECK(sectorsDiscrete(*p.a).size() == sectorsDiscrete(*p.b).size());
    CHECK(baezDolanCardinality(*p.a) == baezDolanCardinality(*p.b));
    CHECK(stringEulerCardinality(*p.a) == stringEulerCardinality(*p.b));
  }
}

}  // TEST_SUITE
