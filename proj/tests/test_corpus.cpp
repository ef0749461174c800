#include "doctest.h"

#include "orbicat/corpus.hpp"
#include "orbicat/equivalence.hpp"

#include "support.hpp"

#include <algorithm>

using namespace orbicat;

TEST_SUITE("corpus") {

TEST_CASE("small groups") {
  const auto& gs = smallGroups();
  CHECK(gs.size() == 24);
  for (const auto& g : gs) CHECK(g.order() <= 12);
}

TEST_CASE("random groupoids respect their limits") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    auto g = randomGroupoid(rng, {12, 12});
    CHECK(g->objectCount() <= 12);
    CHECK_NOTHROW(checkGroupoidAxioms(*g));
    for (const auto& r : skeleton(*g)) CHECK(r.isotropy.order() <= 12);
  }
}

TEST_CASE("pairs are labeled correctly") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    auto yes = randomMoritaPair(rng);
    CHECK(yes.equivalent);
    CHECK(moritaEquivalent(*yes.a, *yes.b));
    auto no = randomNonMoritaPair(rng);
    CHECK_FALSE(no.equivalent);
    CHECK_FALSE(moritaEquivalent(*no.a, *no.b));
  }
}

TEST_CASE("seeds reproduce") {
  std::mt19937_64 a(9), b(9);
  auto ga = randomGroupoid(a);
  auto gb = randomGroupoid(b);
  CHECK(ga->objectIds() == gb->objectIds());
  CHECK(ga->arrowCount() == gb->arrowCount());
}

TEST_CASE("random functions") {
  std::mt19937_64 rng(3);
  auto k = fixtures::octahedron();
  auto f = randomFunction(rng, k);
  REQUIRE(f.size() == 6);
  auto sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 6; ++i) CHECK(sorted[i] == ExactRational(i));
}

}  // TEST_SUITE
