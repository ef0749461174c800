#include "doctest.h"

#include "orbicat/morse.hpp"

#include "support.hpp"

using namespace orbicat;

namespace {

std::vector<std::string> criticalNames(const OrbifoldComplex& m, const CriticalReport& r) {
  std::vector<std::string> out;
  for (const auto& level : r.levels)
    for (int v : level.vertices) out.push_back(m.complex().vertexName(v));
  return out;
}

}  // namespace

TEST_SUITE("morse") {

TEST_CASE("critical orbits of height functions") {
  for (const auto& [model, fn] : std::vector<std::pair<std::string, std::string>>{
           {"octahedron.ogx", "octahedron-height.fn"}, {"teardrop.ogx", "teardrop-height.fn"}}) {
    CAPTURE(model);
    auto m = fixtures::model(model).model;
    auto f = fixtures::function(fn, m.complex());
    auto r = criticalOrbits(m, f);
    CHECK_FALSE(r.degenerate);
    CHECK(criticalNames(m, r) == std::vector<std::string>{"S", "N"});
    CHECK(r.criticalCount() == 2);
    REQUIRE(r.levels.size() == 2);
    CHECK(r.levels[0].value == ExactRational(0));
    CHECK(r.levels[1].value == ExactRational(5));
  }
  auto klein = fixtures::model("klein.ogx").model;
  auto kr = criticalOrbits(klein, fixtures::function("klein-height.fn", klein.complex()));
  CHECK(criticalNames(klein, kr) == std::vector<std::string>{"a", "d"});

  auto d8 = fixtures::model("d8-sphere.ogx").model;
  auto dr = criticalOrbits(d8, fixtures::function("d8-sphere-height.fn", d8.complex()));
  CHECK(dr.criticalCount() == 2);
}

TEST_CASE("degenerate functions") {
  auto m = fixtures::model("octahedron.ogx").model;
  InvariantFunction flat(m.complex().vertexCount(), ExactRational(0));
  auto r = criticalOrbits(m, flat);
  CHECK(r.degenerate);
  CHECK(r.criticalCount() == m.complex().vertexCount());

  auto tied = fixtures::function("octahedron-height.fn", m.complex());
  tied[*m.complex().findVertex("e1")] = tied[*m.complex().findVertex("e0")];
  auto t = criticalOrbits(m, tied);
  CHECK(t.degenerate);
  CHECK(t.critical[*m.complex().findVertex("e0")]);
  CHECK(t.critical[*m.complex().findVertex("e1")]);
}

TEST_CASE("sublevel sets") {
  auto m = fixtures::model("octahedron.ogx").model;
  auto f = fixtures::function("octahedron-height.fn", m.complex());
  CHECK(sublevel(m, f, ExactRational(0)).count() == 1);
  CHECK(sublevel(m, f, ExactRational(0), true).empty());
  CHECK(sublevel(m, f, ExactRational(5)) == m.complex().all());
  auto low = sublevelModel(m, f, ExactRational(2));
  CHECK(low.complex().vertexCount() == 3);
}

TEST_CASE("deformation conditions") {
  for (const auto& [model, fn] : std::vector<std::pair<std::string, std::string>>{
           {"octahedron.ogx", "octahedron-height.fn"},
           {"teardrop.ogx", "teardrop-height.fn"},
           {"klein.ogx", "klein-height.fn"},
           {"d8-sphere.ogx", "d8-sphere-height.fn"}}) {
    CAPTURE(model);
    auto m = fixtures::model(model).model;
    auto f = fixtures::function(fn, m.complex());
    auto checks = verifyDeformationConditions(m, f);
    bool d1 = false, d2 = false, d3 = false;
    for (const auto& c : checks) {
      CAPTURE(conditionName(c.condition));
      CHECK(c.verdict == Verdict::Yes);
      if (c.certificate) CHECK(verifyCertificate(m, *c.certificate));
      d1 |= c.condition == Condition::D1;
      d2 |= c.condition == Condition::D2;
      d3 |= c.condition == Condition::D3;
    }
    CHECK(d1);
    CHECK(d2);
    CHECK(d3);
  }
}

TEST_CASE("LS inequality") {
  for (const auto& [model, fn] : std::vector<std::pair<std::string, std::string>>{
           {"octahedron.ogx", "octahedron-height.fn"},
           {"teardrop.ogx", "teardrop-height.fn"},
           {"klein.ogx", "klein-height.fn"},
           {"d8-sphere.ogx", "d8-sphere-height.fn"}}) {
    CAPTURE(model);
    auto m = fixtures::model(model).model;
    auto ls = verifyLSInequality(m, fixtures::function(fn, m.complex()));
    CHECK(ls.pass);
    CHECK(ls.catLower == 2);
    CHECK(ls.catLower <= ls.sumRelativeUpper);
    CHECK(ls.sumRelativeUpper <= ls.criticalCount);
  }
}

TEST_CASE("the function m") {
  auto m = fixtures::model("octahedron.ogx").model;
  auto mf = mFunction(m, fixtures::function("octahedron-height.fn", m.complex()));
  REQUIRE(mf.samples.size() == 3);
  CHECK(mf.samples[0].where == "below");
  CHECK(mf.samples[2].where == "above");
  std::vector<int> values;
  for (const auto& s : mf.samples) values.push_back(s.upper);
  CHECK(values == std::vector<int>{0, 1, 2});
  CHECK(mf.monotone);
  CHECK(mf.jumpsBounded);
}

}  // TEST_SUITE
