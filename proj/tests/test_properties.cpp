#include <doctest.h>

#include <algorithm>
#include <random>

#include "gaussdeg/formulas.hpp"
#include "gaussdeg/lattice.hpp"
#include "helpers.hpp"

using namespace gaussdeg;
using namespace testutil;

TEST_SUITE("properties") {
  TEST_CASE("naive, meet-in-the-middle and the oracle agree") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
      const auto G = random_group(rng, 12);
      const auto d = random_degree(rng, 6);
      const auto c = random_config(rng, G, d, trial % 2 == 0);
      const auto naive = count_xi(c, CountMethod::naive).xi;
      CHECK(count_xi(c, CountMethod::meet_in_middle).xi == naive);
      CHECK(oracle_xi(c) == naive);
    }
  }

  TEST_CASE("complement pairing makes xi even on zero-sum configurations") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = random_config(rng, random_group(rng, 12), random_degree(rng, 6), true);
      REQUIRE(c.total_sum_zero());
      const auto rels = satisfied_relations(c);
      CHECK(rels.size() % 2 == 0);
      for (const auto& r : rels) {
        const auto comp = complement(c.degree(), r);
        CHECK(std::find(rels.begin(), rels.end(), comp) != rels.end());
      }
    }
  }

  TEST_CASE("xi is invariant under translation by g-torsion, unit scaling and reordering") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const auto G = random_group(rng, 12);
      const auto d = random_degree(rng, 5);
      const auto c = random_config(rng, G, d, false);
      const auto xi = count_xi(c).xi;
      const auto elems = G.enumerate_elements();
      for (const auto& x : elems) {
        if (G.multiply(d.total(), x) != G.identity()) continue;
        std::vector<GroupElement> moved;
        for (const auto& p : c.points()) moved.push_back(G.add(p, x));
        CHECK(count_xi(Configuration(G, d, moved)).xi == xi);
      }
      const auto units = G.unit_multipliers();
      std::vector<std::int64_t> u;
      for (const auto& choices : units) u.push_back(choices[rng() % choices.size()]);
      std::vector<GroupElement> scaled;
      for (const auto& p : c.points()) {
        std::vector<std::int64_t> v = p.coords();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= u[i];
        scaled.push_back(G.element(v));
      }
      CHECK(count_xi(Configuration(G, d, scaled)).xi == xi);
      auto shuffled = c.points();
      for (std::size_t k = 0; k < d.blocks(); ++k) {
        std::shuffle(shuffled.begin() + static_cast<long>(d.block_begin(k)),
                     shuffled.begin() + static_cast<long>(d.block_end(k)), rng);
      }
      CHECK(count_xi(Configuration(G, d, shuffled)).xi == xi);
    }
  }

  TEST_CASE("off-diagonal configurations respect the upper bound") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 100) {
      const auto G = random_group(rng, 12);
      const auto d = random_degree(rng, 6);
      const auto parts = d.parts();
      if (2 * static_cast<std::uint64_t>(*std::max_element(parts.begin(), parts.end())) > G.order()) continue;
      const auto c = random_config(rng, G, d, true);
      if (is_on_diagonal(c)) continue;
      CHECK(count_xi(c).xi <= xi_upper_bound(d));
      ++checked;
    }
  }

  TEST_CASE("mu is symmetric and mu + mu~ is half the boundary intersection") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto d = random_degree(rng, 12);
      auto parts = d.parts();
      std::shuffle(parts.begin(), parts.end(), rng);
      CHECK(mu(DegreeVector(parts)) == mu(d));
      CHECK(2 * (mu(d) + mu_tilde(d)) == intersection_number_boundary(d));
    }
  }

  TEST_CASE("hermite form is idempotent and spans the same lattice") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      IntMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % 21) - 10;
      }
      const auto h = hermite_form(m);
      CHECK(hermite_form(h) == h);
      CHECK(h.rows() == smith_invariants(m).rank);
      if (h.rows() > 0) {
        CHECK(RowLattice(h).contains_all_rows(m));
        CHECK(RowLattice(m).contains_all_rows(h));
      }
    }
  }
}
