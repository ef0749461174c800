#include "doctest.h"

#include "orbicat/corpus.hpp"
#include "orbicat/equivalence.hpp"
#include "orbicat/group.hpp"

using namespace orbicat;

TEST_SUITE("group") {

TEST_CASE("named groups have the expected orders and class numbers") {
  struct Row {
    const char* name;
    int order;
    int classes;
  };
  // class numbers of small groups
  for (auto [name, order, classes] : {Row{"1", 1, 1}, Row{"Z5", 5, 5}, Row{"V4", 4, 4}, Row{"D6", 6, 3},
                                      Row{"D8", 8, 5}, Row{"Q8", 8, 5}, Row{"D10", 10, 4}, Row{"D12", 12, 6},
                                      Row{"A4", 12, 4}, Row{"Dic12", 12, 6}, Row{"S4", 24, 5}, Row{"Z2xZ4", 8, 8}}) {
    CAPTURE(name);
    auto g = namedGroup(name);
    CHECK(g.order() == order);
    CHECK(classNumber(g) == classes);
    CHECK(static_cast<int>(conjugacyClasses(g).size()) == classes);
  }
}

TEST_CASE("abelian groups have one class per element") {
  for (const auto& g : smallGroups())
    if (g.isAbelian()) CHECK(classNumber(g) == g.order());
}

TEST_CASE("quaternion group") {
  auto q = quaternionGroup();
  CHECK(q.order() == 8);
  CHECK(orderProfile(q) == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK_FALSE(q.isAbelian());
  CHECK(commutatorSubgroupOrder(q) == 2);
  CHECK_FALSE(groupIsomorphic(q, namedGroup("D8")));
}

TEST_CASE("isomorphism tests") {
  CHECK_FALSE(groupIsomorphic(namedGroup("Z4"), namedGroup("V4")));
  auto iso = groupIsomorphic(namedGroup("Z6"), namedGroup("Z2xZ3"));
  REQUIRE(iso);
  auto z6 = namedGroup("Z6");
  auto z23 = namedGroup("Z2xZ3");
  CHECK(isHomomorphism(z6, z23, *iso));
  CHECK(isInjective(*iso, z23.order()));
  auto self = groupIsomorphic(namedGroup("D8"), namedGroup("D8"));
  REQUIRE(self);
  CHECK(isHomomorphism(namedGroup("D8"), namedGroup("D8"), *self));
  CHECK(groupIsomorphic(namedGroup("D6"), namedGroup("S3")));
  CHECK_FALSE(groupIsomorphic(namedGroup("A4"), namedGroup("D12")));
}

TEST_CASE("the small groups are pairwise non-isomorphic") {
  const auto& gs = smallGroups();
  CHECK(gs.size() == 24);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      CAPTURE(gs[i].name());
      CAPTURE(gs[j].name());
      CHECK_FALSE(groupIsomorphic(gs[i], gs[j]));
    }
}

TEST_CASE("embeddings") {
  CHECK(findEmbedding(namedGroup("Z2"), namedGroup("D8")));
  CHECK(findEmbedding(namedGroup("V4"), namedGroup("D8")));
  CHECK_FALSE(findEmbedding(namedGroup("V4"), namedGroup("Q8")));
  CHECK_FALSE(findEmbedding(namedGroup("Z3"), namedGroup("D8")));
  CHECK(findEmbedding(AbstractGroup::trivial(), namedGroup("Z3")));
  CHECK_FALSE(findEmbedding(namedGroup("Z2"), AbstractGroup::trivial()));
}

TEST_CASE("subgroups") {
  auto d8 = namedGroup("D8");
  int r = d8.indexOf("r"), s = d8.indexOf("s");
  CHECK(generatedSubgroup(d8, std::vector<int>{r}).size() == 4);
  CHECK(generatedSubgroup(d8, std::vector<int>{r, s}).size() == 8);
  CHECK(centralizer(d8, s).size() == 4);
  CHECK(centralizer(d8, d8.indexOf("r2")).size() == 8);
  CHECK(isSubgroup(d8, std::vector<int>{d8.identity(), s}));
  CHECK_FALSE(isSubgroup(d8, std::vector<int>{d8.identity(), r}));
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(AbstractGroup("bad", {"a", "b"}, {{0, 1}, {1, 1}}), GroupError);
  CHECK_THROWS_AS(AbstractGroup("bad", {"a", "b"}, {{1, 0}, {0, 0}}), GroupError);
  CHECK_THROWS_AS(namedGroup("Q7"), GroupError);
}

}  // TEST_SUITE
