#include "gaussdeg/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "gaussdeg/error.hpp"

namespace gaussdeg {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t c : v) {
      h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using SumTable = std::unordered_map<std::vector<std::int64_t>, std::uint64_t, VecHash>;

// Calls fn(chosen) for every k-subset of {0..n-1}, lexicographically.
template <typename Fn>
void for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::uint32_t> c(k);
  std::iota(c.begin(), c.end(), 0u);
  do {
    fn(std::span<const std::uint32_t>(c));
  } while (next_combination(c, n));
}

double binom_d(double n, double k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)));
}

// One side of the split: whole blocks that must contribute exactly d_k
// indices, plus optionally a partial block whose contribution j is free
// within [j_min, j_max] and recorded in the key.
struct Segment {
  std::vector<std::uint32_t> positions;
  int fixed = -1;  // exact count, or -1 for the partial block
};

struct Side {
  std::vector<Segment> segments;
  int j_min = 0;
  int j_max = 0;
  bool has_partial = false;
};

void split_sides(const DegreeVector& d, std::size_t split, Side& left, Side& right) {
  for (std::size_t k = 0; k < d.blocks(); ++k) {
    const std::size_t b = d.block_begin(k), e = d.block_end(k);
    Segment whole;
    for (std::size_t i = b; i < e; ++i) whole.positions.push_back(static_cast<std::uint32_t>(i));
    whole.fixed = d.part(k);
    if (e <= split) {
      left.segments.push_back(std::move(whole));
    } else if (b >= split) {
      right.segments.push_back(std::move(whole));
    } else {
      const int a = static_cast<int>(split - b), r = static_cast<int>(e - split);
      Segment lp, rp;
      for (std::size_t i = b; i < split; ++i) lp.positions.push_back(static_cast<std::uint32_t>(i));
      for (std::size_t i = split; i < e; ++i) rp.positions.push_back(static_cast<std::uint32_t>(i));
      left.has_partial = right.has_partial = true;
      left.j_min = std::max(0, d.part(k) - r);
      left.j_max = std::min(a, d.part(k));
      right.j_min = left.j_min;
      right.j_max = left.j_max;
      left.segments.push_back(std::move(lp));
      right.segments.push_back(std::move(rp));
    }
  }
}

// Visits every admissible choice on one side with its raw coordinate sum and
// the number j of indices taken from the partial block (0 when none).
template <typename Fn>
void walk_side(const Side& side, std::span<const GroupElement> pts, std::size_t dim, int total_partial,
               bool left, Fn&& fn) {
  std::vector<std::int64_t> acc(dim, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t s, int j) {
    if (s == side.segments.size()) {
      fn(acc, j);
      return;
    }
    const Segment& seg = side.segments[s];
    const auto n = static_cast<std::uint32_t>(seg.positions.size());
    auto take = [&](std::uint32_t k, int j_next) {
      for_each_combination(n, k, [&](std::span<const std::uint32_t> c) {
        for (std::uint32_t i : c) {
          const auto& p = pts[seg.positions[i]];
          for (std::size_t q = 0; q < dim; ++q) acc[q] += p[q];
        }
        rec(s + 1, j_next);
        for (std::uint32_t i : c) {
          const auto& p = pts[seg.positions[i]];
          for (std::size_t q = 0; q < dim; ++q) acc[q] -= p[q];
        }
      });
    };
    if (seg.fixed >= 0) {
      take(static_cast<std::uint32_t>(seg.fixed), j);
    } else {
      for (int jj = side.j_min; jj <= side.j_max; ++jj) {
        // The left half picks jj of the partial block, the right half the rest.
        const int here = left ? jj : total_partial - jj;
        if (here < 0 || here > static_cast<int>(n)) continue;
        take(static_cast<std::uint32_t>(here), jj);
      }
    }
  };
  rec(0, 0);
}

std::vector<std::int64_t> reduced_key(const AbelianGroup& g, const std::vector<std::int64_t>& acc,
                                      int j, bool negate) {
  std::vector<std::int64_t> key(acc.size() + 1);
  for (std::size_t q = 0; q < acc.size(); ++q) key[q] = negate ? -acc[q] : acc[q];
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    auto& v = key[g.free_rank() + i];
    const std::int64_t m = g.torsion()[i];
    v %= m;
    if (v < 0) v += m;
  }
  key.back() = j;
  return key;
}

std::uint64_t count_naive(const Configuration& c, unsigned threads) {
  const auto& g = c.group();
  const auto& d = c.degree();
  const auto& pts = c.points();
  const std::size_t dim = g.dimension();
  auto run = [&](std::size_t lo, std::size_t hi) {
    std::uint64_t n = 0;
    std::vector<std::int64_t> acc(dim);
    for_each_relation(
        d,
        [&](std::span<const std::uint32_t> idx) {
          std::fill(acc.begin(), acc.end(), 0);
          for (std::uint32_t i : idx) {
            for (std::size_t q = 0; q < dim; ++q) acc[q] += pts[i][q];
          }
          if (g.is_zero_raw(acc)) ++n;
        },
        lo, hi);
    return n;
  };
  const std::size_t shards = first_block_choices(d);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shards)));
  if (threads == 1) return run(0, shards);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = shards * t / threads, hi = shards * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] { partial[t] = run(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t count_mitm(const Configuration& c) {
  const auto& g = c.group();
  const auto& d = c.degree();
  const std::size_t split = mitm_split_position(d);
  Side left, right;
  split_sides(d, split, left, right);
  int total_partial = 0;
  for (std::size_t k = 0; k < d.blocks(); ++k) {
    if (d.block_begin(k) < split && split < d.block_end(k)) total_partial = d.part(k);
  }
  std::span<const GroupElement> pts(c.points());
  const std::size_t dim = g.dimension();

  SumTable table;
  walk_side(left, pts, dim, total_partial, true,
            [&](const std::vector<std::int64_t>& acc, int j) { ++table[reduced_key(g, acc, j, false)]; });
  std::uint64_t n = 0;
  walk_side(right, pts, dim, total_partial, false, [&](const std::vector<std::int64_t>& acc, int j) {
    auto it = table.find(reduced_key(g, acc, j, true));
    if (it != table.end()) n += it->second;
  });
  return n;
}

}  // namespace

Configuration::Configuration(AbelianGroup group, DegreeVector degree, std::vector<GroupElement> points)
    : group_(std::move(group)), degree_(std::move(degree)), points_(std::move(points)) {
  if (points_.size() != degree_.points()) {
    throw InvalidArgument("configuration has " + std::to_string(points_.size()) +
                          " points, degree " + degree_.to_string() + " needs " +
                          std::to_string(degree_.points()));
  }
  for (const auto& p : points_) {
    if (p.size() != group_.dimension()) {
      throw DimensionMismatch("configuration point does not match group " + group_.to_string());
    }
  }
}

Configuration Configuration::from_blocks(AbelianGroup group, DegreeVector degree,
                                         const std::vector<std::vector<GroupElement>>& blocks) {
  if (blocks.size() != degree.blocks()) {
    throw InvalidArgument("configuration has " + std::to_string(blocks.size()) +
                          " blocks, degree " + degree.to_string() + " has " +
                          std::to_string(degree.blocks()));
  }
  std::vector<GroupElement> pts;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].size() != degree.block_size(k)) {
      throw InvalidArgument("block " + std::to_string(k + 1) + " has " +
                            std::to_string(blocks[k].size()) + " points, expected " +
                            std::to_string(degree.block_size(k)));
    }
    pts.insert(pts.end(), blocks[k].begin(), blocks[k].end());
  }
  return Configuration(std::move(group), std::move(degree), std::move(pts));
}

std::span<const GroupElement> Configuration::block(std::size_t k) const {
  return std::span<const GroupElement>(points_).subspan(degree_.block_begin(k), degree_.block_size(k));
}

bool Configuration::total_sum_zero() const {
  return group_.sum(points_) == group_.identity();
}

nlohmann::json configuration_to_json(const Configuration& c) {
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t k = 0; k < c.degree().blocks(); ++k) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& p : c.block(k)) b.push_back(element_to_json(p));
    blocks.push_back(std::move(b));
  }
  return {{"group", c.group()}, {"degree", c.degree().parts()}, {"blocks", std::move(blocks)}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("configuration: expected an object");
  for (const char* key : {"group", "degree", "blocks"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("configuration: missing key '") + key + "'");
  }
  AbelianGroup g = group_from_json(j.at("group"));
  DegreeVector d = degree_from_json(j.at("degree"));
  const auto& jb = j.at("blocks");
  if (!jb.is_array()) throw InvalidArgument("configuration.blocks: expected an array of blocks");
  if (jb.size() != d.blocks()) {
    throw InvalidArgument("configuration.blocks: " + std::to_string(jb.size()) + " blocks, degree " +
                          d.to_string() + " needs " + std::to_string(d.blocks()));
  }
  std::vector<std::vector<GroupElement>> blocks;
  for (std::size_t k = 0; k < jb.size(); ++k) {
    if (!jb[k].is_array() || jb[k].size() != d.block_size(k)) {
      throw InvalidArgument("configuration.blocks[" + std::to_string(k) + "]: expected an array of " +
                            std::to_string(d.block_size(k)) + " elements");
    }
    std::vector<GroupElement> b;
    for (std::size_t i = 0; i < jb[k].size(); ++i) {
      try {
        b.push_back(element_from_json(g, jb[k][i]));
      } catch (const Error& e) {
        throw InvalidArgument("configuration.blocks[" + std::to_string(k) + "][" + std::to_string(i) +
                              "]: " + e.what());
      }
    }
    blocks.push_back(std::move(b));
  }
  return Configuration::from_blocks(std::move(g), std::move(d), blocks);
}

nlohmann::json xi_result_to_json(const XiResult& r) {
  return {{"xi", r.xi}, {"total_sum_zero", r.total_sum_zero}, {"on_diagonal", r.on_diagonal}};
}

bool is_on_diagonal(const Configuration& c) {
  for (std::size_t k = 0; k < c.degree().blocks(); ++k) {
    std::vector<GroupElement> b(c.block(k).begin(), c.block(k).end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return true;
  }
  return false;
}

std::size_t mitm_split_position(const DegreeVector& d) {
  std::size_t best = 0;
  double best_cost = INFINITY;
  for (std::size_t split = 0; split <= d.points(); ++split) {
    double lc = 1, rc = 1;
    for (std::size_t k = 0; k < d.blocks(); ++k) {
      const double n = static_cast<double>(d.block_size(k)), dk = d.part(k);
      const std::size_t b = d.block_begin(k), e = d.block_end(k);
      if (e <= split) {
        lc *= binom_d(n, dk);
      } else if (b >= split) {
        rc *= binom_d(n, dk);
      } else {
        const double a = static_cast<double>(split - b), r = static_cast<double>(e - split);
        double ls = 0, rs = 0;
        for (double j = std::max(0.0, dk - r); j <= std::min(a, dk); ++j) {
          ls += binom_d(a, j);
          rs += binom_d(r, dk - j);
        }
        lc *= ls;
        rc *= rs;
      }
    }
    const double cost = std::max(lc, rc) + 1e-9 * (lc + rc);
    if (cost < best_cost) {
      best_cost = cost;
      best = split;
    }
  }
  return best;
}

XiResult count_xi(const Configuration& c, CountMethod method, unsigned threads) {
  XiResult r;
  r.total_sum_zero = c.total_sum_zero();
  r.on_diagonal = is_on_diagonal(c);
  r.xi = method == CountMethod::naive ? count_naive(c, threads) : count_mitm(c);
  return r;
}

std::vector<Relation> satisfied_relations(const Configuration& c) {
  const auto& g = c.group();
  const auto& pts = c.points();
  std::vector<Relation> out;
  std::vector<std::int64_t> acc(g.dimension());
  for_each_relation(c.degree(), [&](std::span<const std::uint32_t> idx) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint32_t i : idx) {
      for (std::size_t q = 0; q < acc.size(); ++q) acc[q] += pts[i][q];
    }
    if (g.is_zero_raw(acc)) out.emplace_back(std::vector<std::uint32_t>(idx.begin(), idx.end()));
  });
  return out;
}

void validate(const BiellipticData& b) {
  const auto& G = b.group;
  if (b.g < 1) throw InvalidArgument("bielliptic data: g must be >= 1");
  if (b.t < 0 || 2 * b.t > b.g) {
    throw InvalidArgument("bielliptic data: need 0 <= t <= g/2, got t=" + std::to_string(b.t) +
                          ", g=" + std::to_string(b.g));
  }
  if (b.delta_prime_points.size() != static_cast<std::size_t>(2 * b.t)) {
    throw InvalidArgument("bielliptic data: Delta' must have 2t = " + std::to_string(2 * b.t) +
                          " points, got " + std::to_string(b.delta_prime_points.size()));
  }
  if (b.delta_dprime_points.size() != static_cast<std::size_t>(2 * (b.g - b.t))) {
    throw InvalidArgument("bielliptic data: Delta'' must have 2(g-t) = " +
                          std::to_string(2 * (b.g - b.t)) + " points, got " +
                          std::to_string(b.delta_dprime_points.size()));
  }
  if (G.sum(b.delta_prime_points) != G.multiply(2, b.delta_prime)) {
    throw InvalidArgument("bielliptic data: sum of Delta' must equal 2 delta'");
  }
  if (G.sum(b.delta_dprime_points) != G.multiply(2, G.sub(b.delta, b.delta_prime))) {
    throw InvalidArgument("bielliptic data: sum of Delta'' must equal 2 (delta - delta')");
  }
}

namespace {

std::unordered_map<GroupElement, std::uint64_t, GroupElementHash> subset_sum_histogram(
    const AbelianGroup& G, const std::vector<GroupElement>& pts, int k) {
  std::unordered_map<GroupElement, std::uint64_t, GroupElementHash> h;
  for_each_combination(static_cast<std::uint32_t>(pts.size()), static_cast<std::uint32_t>(k),
                       [&](std::span<const std::uint32_t> c) {
                         GroupElement s = G.identity();
                         for (std::uint32_t i : c) s = G.add(s, pts[i]);
                         ++h[s];
                       });
  return h;
}

}  // namespace

BiellipticXi count_xi_bielliptic(const BiellipticData& b) {
  validate(b);
  const auto& G = b.group;
  const auto h1 = subset_sum_histogram(G, b.delta_prime_points, b.t);
  const auto h2 = subset_sum_histogram(G, b.delta_dprime_points, b.g - b.t);
  BiellipticXi r;
  for (const auto& [s, n] : h1) {
    auto it = h2.find(G.sub(b.delta, s));
    if (it != h2.end()) r.xi += n * it->second;
  }
  std::uint64_t split = 0;
  if (auto a = h1.find(b.delta_prime); a != h1.end()) {
    if (auto c = h2.find(G.sub(b.delta, b.delta_prime)); c != h2.end()) split = a->second * c->second;
  }
  r.xi_tilde = r.xi - split;
  return r;
}

bool cprime_hyperelliptic(const BiellipticData& b) {
  validate(b);
  if (b.t != 2) return false;
  const auto h = subset_sum_histogram(b.group, b.delta_prime_points, 2);
  return h.contains(b.delta_prime);
}

std::optional<Configuration> translated_configuration(const BiellipticData& b) {
  validate(b);
  const auto& G = b.group;
  for (const auto& x : G.enumerate_elements()) {
    if (G.multiply(b.g, x) != b.delta) continue;
    std::vector<GroupElement> pts;
    for (const auto& p : b.delta_prime_points) pts.push_back(G.sub(p, x));
    for (const auto& p : b.delta_dprime_points) pts.push_back(G.sub(p, x));
    DegreeVector d = b.t == 0 ? DegreeVector({b.g}) : DegreeVector({b.t, b.g - b.t});
    return Configuration(G, std::move(d), std::move(pts));
  }
  return std::nullopt;
}

BiellipticData bielliptic_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("bielliptic spec: expected an object");
  for (const char* key : {"group", "g", "t", "delta_prime_points", "delta_dprime_points", "delta",
                          "delta_prime"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("bielliptic spec: missing key '") + key + "'");
  }
  AbelianGroup G = group_from_json(j.at("group"));
  auto points = [&](const char* key) {
    std::vector<GroupElement> out;
    const auto& a = j.at(key);
    if (!a.is_array()) throw InvalidArgument(std::string("bielliptic spec.") + key + ": expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
      try {
        out.push_back(element_from_json(G, a[i]));
      } catch (const Error& e) {
        throw InvalidArgument(std::string("bielliptic spec.") + key + "[" + std::to_string(i) + "]: " + e.what());
      }
    }
    return out;
  };
  BiellipticData b{G,
                   j.at("g").get<int>(),
                   j.at("t").get<int>(),
                   points("delta_prime_points"),
                   points("delta_dprime_points"),
                   element_from_json(G, j.at("delta")),
                   element_from_json(G, j.at("delta_prime"))};
  validate(b);
  return b;
}

VarleyConfiguration varley_configuration(int g) {
  if (g <= 0) throw InvalidArgument("varley configuration needs g >= 1");
  std::vector<int> parts(static_cast<std::size_t>(g), 1);
  const bool even = g % 2 == 0;
  AbelianGroup G = AbelianGroup::cyclic(even ? 2 : 3);
  std::vector<GroupElement> pts;
  for (int k = 0; k < g; ++k) {
    pts.push_back(G.element({even ? 0 : 1}));
    pts.push_back(G.element({even ? 1 : 2}));
  }
  const std::uint64_t expected =
      even ? (std::uint64_t{1} << (g - 1)) : ((std::uint64_t{1} << g) - 2) / 3;
  return {Configuration(G, DegreeVector(std::move(parts)), std::move(pts)), expected};
}

}  // namespace gaussdeg
