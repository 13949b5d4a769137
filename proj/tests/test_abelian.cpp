#include <doctest.h>

#include "gaussdeg/abelian.hpp"
#include "gaussdeg/error.hpp"

using namespace gaussdeg;

TEST_SUITE("abelian") {
  TEST_CASE("construction rejects bad moduli") {
    CHECK_THROWS_AS(AbelianGroup(0, {1}), InvalidArgument);
    CHECK_THROWS_AS(AbelianGroup(0, {4, 0}), InvalidArgument);
    CHECK_NOTHROW(AbelianGroup(2, {}));
  }

  TEST_CASE("order and finiteness") {
    CHECK(AbelianGroup(0, {2, 2, 3}).order() == 12);
    CHECK(AbelianGroup::cyclic(14).order() == 14);
    AbelianGroup infinite(1, {3});
    CHECK_FALSE(infinite.is_finite());
    CHECK_THROWS_AS(infinite.order(), NotEnumerable);
    CHECK_THROWS_AS(infinite.enumerate_elements(), NotEnumerable);
  }

  TEST_CASE("torsion generators count the invariant factors") {
    CHECK(AbelianGroup::cyclic(8).torsion_generators() == 1);
    CHECK(AbelianGroup::cyclic(14).torsion_generators() == 1);
    CHECK(AbelianGroup(0, {2, 6}).torsion_generators() == 2);
    CHECK(AbelianGroup(0, {2, 2, 3}).torsion_generators() == 2);
    CHECK(AbelianGroup(0, {2, 2, 2}).torsion_generators() == 3);
    CHECK(AbelianGroup(0, {2, 3}).torsion_generators() == 1);  // Z6
    CHECK(AbelianGroup(3, {}).torsion_generators() == 0);
  }

  TEST_CASE("element reduction and arithmetic") {
    AbelianGroup G(0, {2, 6});
    const auto a = G.element({3, -1});
    CHECK(a.coords() == std::vector<std::int64_t>{1, 5});
    const auto b = G.element({1, 4});
    CHECK(G.add(a, b) == G.element({0, 3}));
    CHECK(G.negate(b) == G.element({1, 2}));
    CHECK(G.sub(a, a) == G.identity());
    CHECK(G.multiply(6, b) == G.identity());
    CHECK(G.multiply(-1, b) == G.negate(b));
    CHECK_THROWS_AS(G.element({1}), DimensionMismatch);
  }

  TEST_CASE("free coordinates are not reduced") {
    AbelianGroup G(1, {3});
    const auto a = G.element({-7, 5});
    CHECK(a.coords() == std::vector<std::int64_t>{-7, 2});
    CHECK(G.add(a, G.element({7, 1})) == G.identity());
  }

  TEST_CASE("enumeration is lexicographic and complete") {
    AbelianGroup G(0, {2, 3});
    const auto all = G.enumerate_elements();
    REQUIRE(all.size() == 6);
    CHECK(all[0] == G.element({0, 0}));
    CHECK(all[1] == G.element({0, 1}));
    CHECK(all[3] == G.element({1, 0}));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }

  TEST_CASE("unit multipliers") {
    const auto u = AbelianGroup(0, {5, 2}).unit_multipliers();
    REQUIRE(u.size() == 2);
    CHECK(u[0] == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(u[1] == std::vector<std::int64_t>{1});
  }

  TEST_CASE("json round trip and errors") {
    AbelianGroup G(0, {2, 8});
    nlohmann::json j = G;
    CHECK(group_from_json(j) == G);
    CHECK(G.to_string() == "Z2 x Z8");
    const auto e = G.element({1, 6});
    CHECK(element_from_json(G, element_to_json(e)) == e);
    CHECK(element_from_json(AbelianGroup::cyclic(5), 7) == AbelianGroup::cyclic(5).element({2}));
    CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"free_rank":0,"torsion":[1]})")), InvalidArgument);
    CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"torsion":"x"})")), InvalidArgument);
    CHECK_THROWS_AS(element_from_json(G, nlohmann::json::parse("[1]")), DimensionMismatch);
  }
}
