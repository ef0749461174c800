#include "doctest.h"

#include "orbicat/lscat.hpp"

#include "support.hpp"

using namespace orbicat;

namespace {

int vertex(const OrbifoldComplex& m, const std::string& name) {
  auto v = m.complex().findVertex(name);
  REQUIRE(v);
  return *v;
}

SimplexSet star(const OrbifoldComplex& m, const std::string& name) {
  return closedStar(m.complex(), {vertex(m, name)});
}

SimplexSet points(const OrbifoldComplex& m, const std::vector<std::string>& names) {
  std::vector<int> vs;
  for (const auto& n : names) vs.push_back(vertex(m, n));
  return fullSubcomplex(m.complex(), vs);
}

}  // namespace

TEST_SUITE("lscat") {

TEST_CASE("categorical subsets") {
  auto tear = fixtures::model("teardrop.ogx").model;
  auto chart = isCategorical(tear, star(tear, "N"), vertex(tear, "N"));
  CHECK(chart.verdict == Verdict::Yes);
  REQUIRE(chart.certificate);
  CHECK(verifyCertificate(tear, *chart.certificate));

  // the cone point cannot be pushed into a trivially labeled vertex
  auto wrong = isCategorical(tear, star(tear, "N"), vertex(tear, "e0"));
  CHECK(wrong.verdict == Verdict::No);
  CHECK(wrong.obstruction == Obstruction::Injection);

  auto klein = fixtures::model("klein.ogx").model;
  auto whole = isCategorical(klein, klein.complex().all(), vertex(klein, "a"));
  CHECK(whole.verdict == Verdict::No);
  CHECK(whole.obstruction == Obstruction::Injection);

  // a sphere does not contract
  auto oct = fixtures::model("octahedron.ogx").model;
  auto sphere = isCategorical(oct, oct.complex().all(), vertex(oct, "N"));
  CHECK(sphere.verdict == Verdict::No);
  CHECK(sphere.obstruction == Obstruction::Homology);
}

TEST_CASE("weights") {
  auto tear = fixtures::model("teardrop.ogx").model;
  CHECK(weight(tear, star(tear, "N")) == 3);
  CHECK(weight(tear, star(tear, "S")) == 1);
  CHECK_THROWS_AS(weight(tear, tear.complex().all()), ModelError);

  auto d8 = fixtures::model("d8-sphere.ogx").model;
  std::vector<int> rest;
  for (int v = 0; v < d8.complex().vertexCount(); ++v)
    if (d8.complex().vertexName(v) != "S") rest.push_back(v);
  CHECK(weight(d8, fullSubcomplex(d8.complex(), rest)) == 5);
}

TEST_CASE("cat of the reference models") {
  for (const char* name : {"teardrop.ogx", "klein.ogx", "klein-action.ogx", "octahedron.ogx", "d8-sphere.ogx"}) {
    CAPTURE(name);
    auto m = fixtures::model(name).model;
    CatEngine engine(m);
    auto r = engine.catBounds();
    CHECK(r.lower == 2);
    CHECK(r.upper == 2);
    for (const auto& p : r.cover) CHECK(verifyCertificate(m, p.certificate));
    SimplexSet covered = m.complex().none();
    for (const auto& p : r.cover) covered |= p.simplices;
    CHECK(covered == m.complex().all());
  }
  CHECK(catBounds(fixtures::model("teardrop.ogx").model).cupLower == 2);
  CHECK(catBounds(fixtures::model("klein.ogx").model).obstructionLower == 2);
  CHECK(catBounds(fixtures::model("d8-sphere.ogx").model).sectorLower == 2);
}

TEST_CASE("weighted cat") {
  CHECK(wcat(fixtures::model("teardrop.ogx").model).upper == 4);
  CHECK(wcat(fixtures::model("klein.ogx").model).upper == 4);
  CHECK(wcat(fixtures::model("octahedron.ogx").model).upper == 2);
  auto d8 = wcat(fixtures::model("d8-sphere.ogx").model);
  CHECK(d8.exact);
  CHECK(d8.upper == 10);
}

TEST_CASE("small budgets leave the bound open") {
  LsOptions o;
  o.budget = 5;
  auto r = catBounds(fixtures::model("teardrop.ogx").model, o);
  CHECK(r.upper == kUnbounded);
  CHECK_FALSE(r.exact());
  CHECK(addBounds(kUnbounded, 1) == kUnbounded);
  CHECK(addBounds(2, 3) == 5);
}

TEST_CASE("relative category") {
  auto d8 = fixtures::model("d8-sphere.ogx").model;
  auto poles = relativeCat(d8, points(d8, {"N", "S"}));
  CHECK(poles.lower == 2);
  CHECK(poles.upper == 2);
  auto one = relativeCat(d8, points(d8, {"N"}));
  CHECK(one.upper == 1);
  CHECK(relativeCat(d8, d8.complex().none()).upper == 0);
}

TEST_CASE("relative category properties") {
  auto tear = fixtures::model("teardrop.ogx").model;
  CatEngine engine(tear);
  auto whole = engine.catBounds();
  std::vector<SimplexSet> subs = {points(tear, {"N"}), points(tear, {"S"}), star(tear, "N"), star(tear, "S"),
                                  points(tear, {"e0", "e2"}), points(tear, {"N", "S"})};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto a = engine.relativeCat(subs[i]);
    // bounded by the whole space
    CHECK(a.lower <= whole.upper);
    for (std::size_t j = 0; j < subs.size(); ++j) {
      auto b = engine.relativeCat(subs[j]);
      auto u = engine.relativeCat(closure(tear.complex(), subs[i] | subs[j]));
      // monotone under inclusion
      if (subs[i].isSubsetOf(subs[j])) CHECK(a.lower <= b.upper);
      // subadditive
      CHECK(u.lower <= addBounds(a.upper, b.upper));
    }
  }
}

TEST_CASE("deformations between subcomplexes") {
  auto tear = fixtures::model("teardrop.ogx").model;
  auto yes = deformableInto(tear, star(tear, "S"), points(tear, {"S"}));
  CHECK(yes.verdict == Verdict::Yes);
  REQUIRE(yes.certificate);
  CHECK(verifyCertificate(tear, *yes.certificate));
  CHECK(deformableInto(tear, star(tear, "N"), points(tear, {"e0"})).verdict != Verdict::Yes);
}

TEST_CASE("tampered certificates fail") {
  auto tear = fixtures::model("teardrop.ogx").model;
  auto r = isCategorical(tear, star(tear, "N"), vertex(tear, "N"));
  REQUIRE(r.certificate);
  auto bad = *r.certificate;
  REQUIRE(bad.collapses.size() > 1);
  bad.collapses.pop_back();
  CHECK_FALSE(verifyCertificate(tear, bad));

  // a non-injective embedding
  auto d8 = fixtures::model("d8-sphere.ogx").model;
  auto dr = isCategorical(d8, star(d8, "N"), vertex(d8, "N"));
  REQUIRE(dr.certificate);
  CHECK(verifyCertificate(d8, *dr.certificate));
  auto wrongMap = *dr.certificate;
  bool tampered = false;
  for (auto& [key, map] : wrongMap.embeddings)
    if (map.size() > 1) {
      std::fill(map.begin(), map.end(), map.front());
      tampered = true;
    }
  REQUIRE(tampered);
  CHECK_FALSE(verifyCertificate(d8, wrongMap));
}

TEST_CASE("cat is unchanged by subdivision") {
  for (const char* name : {"teardrop.ogx", "klein.ogx"}) {
    CAPTURE(name);
    auto m = barycentricSubdivide(fixtures::model(name).model);
    auto r = catBounds(m);
    CHECK(r.lower == 2);
    CHECK(r.upper == 2);
  }
}

TEST_CASE("inertia report") {
  auto t = inertiaCatReport(fixtures::model("teardrop.ogx").model);
  CHECK(t.sectors.size() == 3);
  CHECK(t.sumLower == 4);
  CHECK(t.sumUpper == 4);
  CHECK(t.verdict == ConjectureVerdict::Equal);
  auto f = fixtures::model("d8-sphere.ogx");
  REQUIRE(f.action);
  auto d = inertiaCatReport(f.model, sectorsSimplicial(*f.action));
  CHECK(d.sectors.size() == 7);
  CHECK(d.sumUpper == 10);
  CHECK(d.verdict == ConjectureVerdict::Equal);
}

}  // TEST_SUITE
