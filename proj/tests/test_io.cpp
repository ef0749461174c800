#include "doctest.h"

#include "orbicat/equivalence.hpp"
#include "orbicat/io.hpp"

#include "support.hpp"

using namespace orbicat;

namespace {

int errorLine(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("tokenizer") {
  CHECK(tokenize("  a  b # c d") == std::vector<std::string>{"a", "b"});
  CHECK(tokenize("# only a comment").empty());
}

TEST_CASE("group files") {
  auto d8 = parseGroup(readFile(fixtures::modelPath("d8.grp")));
  CHECK(d8.order() == 8);
  CHECK(findIsomorphism(d8, namedGroup("D8")));
  auto again = parseGroup(writeGroup(d8));
  CHECK(again.table() == d8.table());
  CHECK(again.elementNames() == d8.elementNames());
  CHECK(parseGroup(readFile(fixtures::modelPath("z3.grp"))).order() == 3);
}

TEST_CASE("group file errors") {
  CHECK(errorLine([] { parseGroup("group G\nelements a b\ntable:\na b\nb\n"); }) == 5);
  // no identity element
  CHECK(errorLine([] { parseGroup("group G\nelements a b\ntable:\na a\na a\n"); }) == 1);
  CHECK_THROWS_AS(parseGroup("group G\nelements a b\n"), ParseError);
}

TEST_CASE("groupoid files") {
  for (const char* name : {"teardrop-skel.gpd", "z3-free.gpd", "point.gpd", "pair2.gpd", "z2-point.gpd"}) {
    CAPTURE(name);
    auto g = parseGroupoid(readFile(fixtures::modelPath(name)));
    auto again = parseGroupoid(writeGroupoid(*g));
    CHECK(again->objectCount() == g->objectCount());
    CHECK(again->arrowCount() == g->arrowCount());
    CHECK(moritaEquivalent(*g, *again));
  }
  auto skel = parseGroupoid(readFile(fixtures::modelPath("teardrop-skel.gpd")));
  CHECK(skel->arrowCount() == 4);
  CHECK(skel->unit(skel->objectIndex("p")) == skel->arrowIndex("id_p"));
}

TEST_CASE("groupoid file errors") {
  // r has no composition with itself
  const char* missing =
      "objects c\n"
      "arrow r : c -> c\n"
      "inverse r = r\n";
  CHECK(errorLine([&] { parseGroupoid(missing); }) == 2);
  const char* noInverse =
      "objects x y\n"
      "arrow f : x -> y\n";
  CHECK(errorLine([&] { parseGroupoid(noInverse); }) == 2);
  const char* badCompose =
      "objects x y\n"
      "arrow f : x -> y\n"
      "arrow g : y -> x\n"
      "inverse f = g\n"
      "compose f f = f\n";
  CHECK(errorLine([&] { parseGroupoid(badCompose); }) == 5);
  CHECK(errorLine([] { parseGroupoid("objects x\narrow id_x : x -> x\n"); }) == 2);
  CHECK(errorLine([] { parseGroupoid("objects x\narrow f : x -> q\n"); }) == 2);
}

TEST_CASE("model files") {
  for (const char* name : {"teardrop.ogx", "klein.ogx", "octahedron.ogx", "klein-action.ogx", "d8-sphere.ogx"}) {
    CAPTURE(name);
    auto f = fixtures::model(name);
    auto again = parseModel(writeModel(f.model)).model;
    CHECK(again.complex().simplexCount() == f.model.complex().simplexCount());
    CHECK(again.complex().vertexNames() == f.model.complex().vertexNames());
    for (int s = 0; s < f.model.complex().simplexCount(); ++s) CHECK(again.labelOrder(s) == f.model.labelOrder(s));
    if (f.action) {
      auto act = parseModel(writeModel(*f.action));
      REQUIRE(act.action);
      CHECK(act.action->permutations() == f.action->permutations());
    }
  }
}

TEST_CASE("model file errors") {
  const char* nonSubgroup =
      "complex:\n"
      "vertices a b\n"
      "simplex a b\n"
      "labels:\n"
      "ambient Z4\n"
      "label a -> 1 r\n";
  CHECK(errorLine([&] { parseModel(nonSubgroup); }) == 6);
  const char* monotone =
      "complex:\n"
      "vertices a b\n"
      "simplex a b\n"
      "labels:\n"
      "ambient Z2\n"
      "label a b -> 1 r\n";
  CHECK(errorLine([&] { parseModel(monotone); }) == 6);
  const char* notClosed =
      "complex:\n"
      "vertices a b c\n"
      "simplex a b c\n";
  CHECK(errorLine([&] { parseModel(notClosed); }) == 3);
  const char* badGenerator =
      "complex:\n"
      "facet a b\n"
      "facet b c\n"
      "action:\n"
      "group Z2\n"
      "gen r : a->b\n";
  CHECK(errorLine([&] { parseModel(badGenerator); }) == 6);
  CHECK_THROWS_AS(parseModel("complex:\nfacet a b\nlabels:\nambient Q9\n"), std::exception);
}

TEST_CASE("function files") {
  auto m = fixtures::model("octahedron.ogx").model;
  auto f = fixtures::function("octahedron-height.fn", m.complex());
  CHECK(f[*m.complex().findVertex("N")] == ExactRational(5));
  CHECK(parseFunction(writeFunction(f, m.complex()), m.complex()) == f);
  CHECK(errorLine([&] { parseFunction("N 1\nS x\n", m.complex()); }) == 2);
  CHECK(errorLine([&] { parseFunction("Q 1\n", m.complex()); }) == 1);
  CHECK_THROWS_AS(parseFunction("N 1\n", m.complex()), ParseError);
}

}  // TEST_SUITE
