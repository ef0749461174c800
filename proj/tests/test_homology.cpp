#include "doctest.h"

#include "orbicat/homology.hpp"

#include "support.hpp"

using namespace orbicat;

TEST_SUITE("homology") {

TEST_CASE("bit vectors and bases") {
  BitVector a(70), b(70);
  a.set(3);
  a.set(65);
  b.set(65);
  CHECK(a.lowest() == 3);
  a ^= b;
  CHECK(a.lowest() == 3);
  CHECK_FALSE(a.test(65));
  Gf2Basis basis;
  CHECK(basis.insert(a));
  CHECK(basis.insert(b));
  BitVector c = a;
  c ^= b;
  CHECK_FALSE(basis.insert(c));
  CHECK(basis.contains(c));
  CHECK(basis.rank() == 2);
}

TEST_CASE("Betti numbers") {
  CHECK(homologyZ2(fixtures::octahedron()) == std::vector<int>{1, 0, 1});
  CHECK(homologyZ2(fixtures::triangle()) == std::vector<int>{1, 0, 0});
  CHECK(homologyZ2(fixtures::torus()) == std::vector<int>{1, 2, 1});
  CHECK(homologyZ2(fixtures::cycle(5)) == std::vector<int>{1, 1});
  CHECK(homologyZ2(fixtures::hexDisk()) == std::vector<int>{1, 0, 0});
}

TEST_CASE("homology of subcomplexes") {
  auto k = fixtures::octahedron();
  auto equator = fullSubcomplex(k, {2, 3, 4, 5});
  CHECK(homologyZ2(k, equator) == std::vector<int>{1, 1});
  CHECK(hasTrivialReducedHomology(k, closedStar(k, {0})));
  CHECK_FALSE(hasTrivialReducedHomology(k, equator));
  auto poles = fullSubcomplex(k, {0, 1});
  CHECK(reducedHomologyZ2(k, poles)[0] == 1);
}

TEST_CASE("classes surviving an inclusion") {
  auto k = fixtures::octahedron();
  auto equator = fullSubcomplex(k, {2, 3, 4, 5});
  CHECK_FALSE(nonzeroInclusionClass(k, equator, k.all()));
  auto punctured = fullSubcomplex(k, {1, 2, 3, 4, 5});
  CHECK_FALSE(nonzeroInclusionClass(k, equator, punctured));
  auto c = nonzeroInclusionClass(k, equator, equator);
  REQUIRE(c);
  CHECK(c->degree == 1);
  auto poles = fullSubcomplex(k, {0, 1});
  auto p = nonzeroInclusionClass(k, poles, k.all() - openStar(k, equator));
  REQUIRE(p);
  CHECK(p->degree == 0);
}

TEST_CASE("cup length") {
  CHECK(cupLengthZ2(fixtures::triangle()) == 0);
  CHECK(cupLengthZ2(fixtures::octahedron()) == 1);
  CHECK(cupLengthZ2(fixtures::torus()) == 2);
  CHECK(cupLengthZ2(fixtures::cycle(4)) == 1);
}

}  // TEST_SUITE
