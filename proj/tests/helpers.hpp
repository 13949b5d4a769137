#pragma once

#include <random>
#include <vector>

#include "gaussdeg/counting.hpp"
#include "oracles.hpp"

namespace testutil {

using namespace gaussdeg;

/// Configuration over a cyclic group from plain residues.
inline Configuration cyclic_config(std::int64_t m, std::vector<int> parts, const std::vector<std::int64_t>& residues) {
  AbelianGroup G = AbelianGroup::cyclic(m);
  std::vector<GroupElement> pts;
  for (auto r : residues) pts.push_back(G.element({r}));
  return Configuration(G, DegreeVector(std::move(parts)), std::move(pts));
}

inline std::uint64_t oracle_xi(const Configuration& c) {
  std::vector<oracle::Point> pts;
  for (const auto& p : c.points()) pts.push_back(p.coords());
  return oracle::brute_xi(c.group().torsion(), c.degree().parts(), pts);
}

/// Random finite group of order <= max_order, as a product of cyclic factors.
inline AbelianGroup random_group(std::mt19937_64& rng, std::uint64_t max_order) {
  std::vector<std::int64_t> t;
  std::uint64_t order = 1;
  do {
    t.clear();
    order = 1;
    const int factors = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < factors; ++i) {
      const auto m = static_cast<std::int64_t>(2 + rng() % 11);
      if (order * static_cast<std::uint64_t>(m) > max_order) break;
      order *= static_cast<std::uint64_t>(m);
      t.push_back(m);
    }
  } while (t.empty());
  return AbelianGroup(0, t);
}

/// Random composition of a total in [1, max_total].
inline DegreeVector random_degree(std::mt19937_64& rng, int max_total) {
  int total = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total));
  std::vector<int> parts;
  while (total > 0) {
    const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total));
    parts.push_back(p);
    total -= p;
  }
  return DegreeVector(parts);
}

inline Configuration random_config(std::mt19937_64& rng, const AbelianGroup& G, const DegreeVector& d,
                                   bool force_zero_sum) {
  const auto elems = G.enumerate_elements();
  std::vector<GroupElement> pts;
  for (std::size_t i = 0; i < d.points(); ++i) pts.push_back(elems[rng() % elems.size()]);
  if (force_zero_sum) {
    const auto s = G.sum(std::span<const GroupElement>(pts.data(), pts.size() - 1));
    pts.back() = G.negate(s);
  }
  return Configuration(G, d, std::move(pts));
}

}  // namespace testutil
