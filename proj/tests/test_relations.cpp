#include <doctest.h>

#include <set>

#include "gaussdeg/error.hpp"
#include "gaussdeg/relations.hpp"
#include "oracles.hpp"

using namespace gaussdeg;

TEST_SUITE("relations") {
  TEST_CASE("block layout") {
    DegreeVector d({1, 2, 2});
    CHECK(d.total() == 5);
    CHECK(d.points() == 10);
    CHECK(d.block_begin(0) == 0);
    CHECK(d.block_end(0) == 2);
    CHECK(d.block_begin(1) == 2);
    CHECK(d.block_end(2) == 10);
    CHECK(d.block_of(0) == 0);
    CHECK(d.block_of(5) == 1);
    CHECK(d.block_of(6) == 2);
    CHECK(d.to_string() == "(1,2,2)");
    CHECK_THROWS_AS(d.block_of(10), InvalidArgument);
  }

  TEST_CASE("parsing degree vectors") {
    CHECK(parse_degree("1,2,2") == DegreeVector({1, 2, 2}));
    CHECK(parse_degree(" 5 ") == DegreeVector({5}));
    CHECK_THROWS_AS(parse_degree("1,x"), InvalidArgument);
    CHECK_THROWS_AS(parse_degree("1,0"), InvalidArgument);
    CHECK_THROWS_AS(DegreeVector({}), InvalidArgument);
    CHECK_THROWS_AS(degree_from_json(nlohmann::json::parse(R"([1,"a"])")), InvalidArgument);
  }

  TEST_CASE("relation count matches the product of central binomials") {
    CHECK(relation_count(DegreeVector({1, 2, 2})) == 72);
    CHECK(relation_count(DegreeVector({5})) == 252);
    CHECK(relation_count(DegreeVector({1, 1, 1, 1, 1})) == 32);
    for (const auto& parts : std::vector<std::vector<int>>{{1, 4}, {2, 3}, {1, 1, 3}, {3, 1}}) {
      const DegreeVector d(parts);
      const auto rels = enumerate_relations(d);
      CHECK(rels.size() == relation_count(d).get_ui());
      std::set<Relation> unique(rels.begin(), rels.end());
      CHECK(unique.size() == rels.size());
      for (const auto& r : rels) CHECK(is_relation(d, r));
    }
  }

  TEST_CASE("enumeration order is lexicographic, first block slowest") {
    const auto rels = enumerate_relations(DegreeVector({1, 1}));
    REQUIRE(rels.size() == 4);
    CHECK(rels[0].indices() == std::vector<std::uint32_t>{0, 2});
    CHECK(rels[1].indices() == std::vector<std::uint32_t>{0, 3});
    CHECK(rels[2].indices() == std::vector<std::uint32_t>{1, 2});
    CHECK(rels[3].indices() == std::vector<std::uint32_t>{1, 3});
  }

  TEST_CASE("shards partition the enumeration") {
    const DegreeVector d({2, 3});
    const std::size_t shards = first_block_choices(d);
    CHECK(shards == 6);
    std::vector<Relation> joined;
    for (std::size_t s = 0; s < shards; ++s) {
      for_each_relation(
          d, [&](std::span<const std::uint32_t> idx) { joined.emplace_back(std::vector<std::uint32_t>(idx.begin(), idx.end())); },
          s, s + 1);
    }
    CHECK(joined == enumerate_relations(d));
  }

  TEST_CASE("complement is an involution onto relations") {
    const DegreeVector d({1, 2, 2});
    for (const auto& r : enumerate_relations(d)) {
      const auto c = complement(d, r);
      CHECK(is_relation(d, c));
      CHECK(complement(d, c) == r);
      CHECK((r.mask() & c.mask()) == 0);
    }
  }

  TEST_CASE("relations reject duplicates; mask order compares high bits first") {
    CHECK_THROWS_AS(Relation({1, 1}), InvalidArgument);
    CHECK(Relation({2, 0}).indices() == std::vector<std::uint32_t>{0, 2});
    CHECK(mask_less(Relation({0, 1}), Relation({2})));
    CHECK(mask_less(Relation({0, 2}), Relation({1, 2})));
    CHECK_FALSE(mask_less(Relation({3}), Relation({0, 1, 2})));
  }

  TEST_CASE("next_combination walks all k-subsets") {
    std::vector<std::uint32_t> c{0, 1};
    std::size_t n = 1;
    while (next_combination(c, 5)) ++n;
    CHECK(n == 10);
    std::vector<std::uint32_t> empty;
    CHECK_FALSE(next_combination(empty, 3));
  }

  TEST_CASE("json uses 1-based indices") {
    const DegreeVector d({1, 1});
    const Relation r({0, 3});
    CHECK(relation_to_json(r).dump() == "[1,4]");
    CHECK(relation_from_json(d, relation_to_json(r)) == r);
    CHECK_THROWS_AS(relation_from_json(d, nlohmann::json::parse("[1,2]")), InvalidArgument);
    CHECK_THROWS_AS(relation_from_json(d, nlohmann::json::parse("[0,3]")), InvalidArgument);
  }
}
