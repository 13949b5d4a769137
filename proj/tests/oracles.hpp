#pragma once

// Reference implementations used only by tests. None of them call into the
// library's counting, lattice or formula code.

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Point = std::vector<std::int64_t>;

/// xi by scanning every subset of the 2g indices.
inline std::uint64_t brute_xi(const std::vector<std::int64_t>& torsion, const std::vector<int>& parts,
                              const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::uint64_t> block_masks;
  std::size_t pos = 0;
  for (int p : parts) {
    std::uint64_t m = 0;
    for (int i = 0; i < 2 * p; ++i) m |= std::uint64_t{1} << (pos + static_cast<std::size_t>(i));
    block_masks.push_back(m);
    pos += 2 * static_cast<std::size_t>(p);
  }
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t k = 0; k < parts.size() && ok; ++k) ok = std::popcount(s & block_masks[k]) == parts[k];
    if (!ok) continue;
    for (std::size_t c = 0; c < torsion.size() && ok; ++c) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (s >> i & 1) acc += pts[i][c];
      }
      ok = acc % torsion[c] == 0;
    }
    if (ok) ++count;
  }
  return count;
}

/// C(n, k) from Pascal's rule.
inline mpz_class pascal(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(static_cast<std::size_t>(i) + 1, 1);
    for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

inline mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  // Cofactor expansion; only used on tiny matrices.
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * determinant(minor);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Smith invariants as quotients of determinantal divisors (gcd of k x k minors).
inline std::vector<mpz_class> determinantal_smith(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<mpz_class>> sub;
        for (auto i : r) {
          std::vector<mpz_class> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        mpz_class d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> inv;
  for (std::size_t k = 1; k < divisors.size(); ++k) inv.push_back(divisors[k] / divisors[k - 1]);
  return inv;
}

}  // namespace oracle
