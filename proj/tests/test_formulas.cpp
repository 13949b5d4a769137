#include <doctest.h>

#include "gaussdeg/error.hpp"
#include "gaussdeg/formulas.hpp"
#include "oracles.hpp"

using namespace gaussdeg;

TEST_SUITE("formulas") {
  TEST_CASE("binomials") {
    for (long n = 0; n <= 40; ++n) {
      for (long k = -1; k <= n + 1; ++k) CHECK(binom(n, k) == oracle::pascal(n, k));
    }
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(200, 100) == oracle::pascal(200, 100));
  }

  TEST_CASE("jacobian degree") {
    CHECK(jacobian_degree(5) == 70);
    CHECK(jacobian_degree(4) == 20);
    CHECK_THROWS_AS(jacobian_degree(1), InvalidArgument);
  }

  TEST_CASE("boundary degrees in dimension 5") {
    const std::vector<std::pair<std::vector<int>, long>> table = {
        {{1, 1, 1, 1, 1}, 30}, {{1, 1, 1, 2}, 36}, {{1, 1, 3}, 52}, {{1, 2, 2}, 44},
        {{1, 4}, 70},          {{2, 3}, 52},       {{5}, 70}};
    for (const auto& [parts, want] : table) CHECK(mu(DegreeVector(parts)) == want);
    CHECK(boundary_degree(DegreeVector({2, 3}), 20).degree == 32);
    CHECK_THROWS_AS(boundary_degree(DegreeVector({1, 1}), 100), InvalidArgument);
  }

  TEST_CASE("correction term: sum form, closed form and the shifted variant") {
    const DegreeVector d({2, 3});
    CHECK(mu_tilde(d) == mu_tilde_closed(d));
    CHECK(mu_tilde(d) == 68);
    CHECK(mu_tilde_top_shifted(d) == 156);
  }

  TEST_CASE("bielliptic degrees") {
    CHECK(bielliptic_base_degree(5, 0, BiellipticCase::t_zero) == 70);
    CHECK(bielliptic_base_degree(5, 1, BiellipticCase::generic) == 94);
    CHECK(bielliptic_base_degree(5, 2, BiellipticCase::generic) == 60);
    CHECK(bielliptic_base_degree(4, 2, BiellipticCase::g4t2_both_hyperelliptic) == 18);
    CHECK(bielliptic_base_degree(4, 2, BiellipticCase::g4t2_both_hyperelliptic, true) == 14);
    CHECK(bielliptic_base_degree(5, 2, BiellipticCase::t2_cprime_hyperelliptic) == 56);
    CHECK(bielliptic_base_degree(4, 2, BiellipticCase::t2_cprime_hyperelliptic) == 16);
    CHECK(bielliptic_degree(5, 1, BiellipticCase::generic, 18).degree == 76);
    CHECK_THROWS_AS(bielliptic_degree(5, 1, BiellipticCase::generic, 95), InvalidArgument);
    CHECK_THROWS_AS(bielliptic_degree(5, 1, BiellipticCase::generic, -2), InvalidArgument);
    CHECK_THROWS_AS(bielliptic_base_degree(5, 1, BiellipticCase::t_zero), InvalidArgument);
    CHECK_THROWS_AS(bielliptic_base_degree(5, 2, BiellipticCase::g4t2_both_hyperelliptic), InvalidArgument);
    CHECK_THROWS_AS(bielliptic_base_degree(5, 3, BiellipticCase::generic), InvalidArgument);
    CHECK_THROWS_AS(bielliptic_base_degree(3, 1, BiellipticCase::generic), InvalidArgument);
  }

  TEST_CASE("case names") {
    CHECK(parse_bielliptic_case("generic") == BiellipticCase::generic);
    CHECK(parse_bielliptic_case("t0") == BiellipticCase::t_zero);
    CHECK(parse_bielliptic_case("g4t2") == BiellipticCase::g4t2_both_hyperelliptic);
    CHECK(parse_bielliptic_case(to_string(BiellipticCase::t2_cprime_hyperelliptic)) ==
          BiellipticCase::t2_cprime_hyperelliptic);
    CHECK_THROWS_AS(parse_bielliptic_case("hyper"), InvalidArgument);
  }

  TEST_CASE("intersection numbers and the bound") {
    CHECK(intersection_number_smooth(5, 0) == 2 * binom(8, 4));
    CHECK(intersection_number_boundary(DegreeVector({1, 1})) == 2 * 4 * 1 * 1);
    CHECK(xi_upper_bound(DegreeVector({5})) == 50);
    CHECK(xi_upper_bound(DegreeVector({1, 1, 1, 1, 1})) == 32);
    CHECK(xi_upper_bound(DegreeVector({2, 3})) == 6 * 20 / 3);
  }

  TEST_CASE("report json writes exact integers as strings") {
    const auto r = bielliptic_degree(30, 1, BiellipticCase::generic, 0);
    const auto j = report_to_json(r);
    CHECK(j["degree"].is_string());
    CHECK(BigInt(j["degree"].get<std::string>()) == r.degree);
  }
}
