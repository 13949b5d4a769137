#include "gaussdeg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "gaussdeg/formulas.hpp"
#include "gaussdeg/lattice.hpp"

namespace gaussdeg {

namespace {

using Index = std::uint32_t;
using Clock = std::chrono::steady_clock;

// Finite group with elements addressed by their rank in lexicographic order.
class IndexedGroup {
 public:
  explicit IndexedGroup(const AbelianGroup& g) : group_(g), size_(g.order()) {
    if (size_ > std::numeric_limits<Index>::max()) throw InvalidArgument("group too large to search");
    const auto& t = g.torsion();
    stride_.assign(t.size(), 1);
    for (std::size_t i = t.size(); i-- > 1;) stride_[i - 1] = stride_[i] * static_cast<std::uint64_t>(t[i]);
    elements_ = g.enumerate_elements();
  }

  std::uint64_t size() const { return size_; }
  const AbelianGroup& group() const { return group_; }
  const GroupElement& element(Index i) const { return elements_[i]; }

  Index index(const GroupElement& e) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < stride_.size(); ++i) r += static_cast<std::uint64_t>(e[i]) * stride_[i];
    return static_cast<Index>(r);
  }

  Index add(Index a, Index b) const {
    const auto& t = group_.torsion();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto m = static_cast<std::uint64_t>(t[i]);
      const std::uint64_t ca = (a / stride_[i]) % m, cb = (b / stride_[i]) % m;
      r += ((ca + cb) % m) * stride_[i];
    }
    return static_cast<Index>(r);
  }

  Index neg(Index a) const {
    const auto& t = group_.torsion();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto m = static_cast<std::uint64_t>(t[i]);
      r += ((m - (a / stride_[i]) % m) % m) * stride_[i];
    }
    return static_cast<Index>(r);
  }

  Index scale(Index a, const std::vector<std::int64_t>& units) const {
    const auto& t = group_.torsion();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto m = static_cast<std::uint64_t>(t[i]);
      r += (((a / stride_[i]) % m) * static_cast<std::uint64_t>(units[i]) % m) * stride_[i];
    }
    return static_cast<Index>(r);
  }

 private:
  AbelianGroup group_;
  std::uint64_t size_;
  std::vector<std::uint64_t> stride_;
  std::vector<GroupElement> elements_;
};

Configuration to_configuration(const IndexedGroup& G, const DegreeVector& d, const std::vector<Index>& pts) {
  std::vector<GroupElement> out;
  out.reserve(pts.size());
  for (Index i : pts) out.push_back(G.element(i));
  return Configuration(G.group(), d, std::move(out));
}

// Non-identity automorphisms used for orbit pruning, as index maps.
std::vector<std::vector<Index>> pruning_automorphisms(const IndexedGroup& G, const SymmetryOptions& sym) {
  std::vector<std::vector<Index>> maps;
  const auto n = static_cast<Index>(G.size());
  if (sym.automorphisms && G.size() <= sym.automorphism_max_order) {
    const auto units = G.group().unit_multipliers();
    std::vector<std::size_t> pick(units.size(), 0);
    while (true) {
      std::vector<std::int64_t> u(units.size());
      bool identity = true;
      for (std::size_t i = 0; i < units.size(); ++i) {
        u[i] = units[i][pick[i]];
        identity = identity && u[i] == 1;
      }
      if (!identity) {
        std::vector<Index> m(n);
        for (Index a = 0; a < n; ++a) m[a] = G.scale(a, u);
        maps.push_back(std::move(m));
      }
      std::size_t i = 0;
      for (; i < units.size(); ++i) {
        if (++pick[i] < units[i].size()) break;
        pick[i] = 0;
      }
      if (i == units.size()) break;
    }
  } else if (sym.negation) {
    std::vector<Index> m(n);
    bool identity = true;
    for (Index a = 0; a < n; ++a) {
      m[a] = G.neg(a);
      identity = identity && m[a] == a;
    }
    if (!identity) maps.push_back(std::move(m));
  }
  if (!sym.negation && sym.automorphisms && G.size() <= sym.automorphism_max_order) {
    // Drop pure negation when that reduction is disabled.
    std::vector<Index> negmap(n);
    for (Index a = 0; a < n; ++a) negmap[a] = G.neg(a);
    std::erase(maps, negmap);
  }
  return maps;
}

// All choices for one block: sorted k-subsets, or ordered k-arrangements when
// within-block reduction is off.
std::vector<std::vector<Index>> block_choices(Index n, std::uint32_t k, bool sorted) {
  std::vector<std::vector<Index>> out;
  if (k > n) return out;
  std::vector<Index> c(k);
  std::iota(c.begin(), c.end(), 0u);
  do {
    if (sorted) {
      out.push_back(c);
    } else {
      std::vector<Index> p = c;
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  } while (next_combination(c, n));
  return out;
}

struct ShardOutcome {
  bool has = false;
  std::uint64_t xi = 0;
  std::vector<Index> points;
  std::uint64_t visited = 0;
  bool hit = false;  // reached the stopping value
};

class Exhaustive {
 public:
  Exhaustive(const SearchSpec& spec, const IndexedGroup& G)
      : spec_(spec), G_(G), d_(spec.degree), autos_(pruning_automorphisms(G, spec.symmetry)) {
    const std::size_t nb = d_.blocks();
    prev_same_.assign(nb, -1);
    for (std::size_t k = 0; k < nb; ++k) {
      for (std::size_t j = k; j-- > 0;) {
        if (d_.part(j) == d_.part(k)) {
          prev_same_[k] = static_cast<int>(j);
          break;
        }
      }
    }
    const auto n = static_cast<Index>(G.size());
    const bool sorted = spec.symmetry.within_block;
    for (std::size_t k = 0; k + 1 < nb; ++k) {
      choices_.push_back(block_choices(n, static_cast<std::uint32_t>(d_.block_size(k)), sorted));
    }
    last_partial_ = block_choices(n, static_cast<std::uint32_t>(d_.block_size(nb - 1) - 1), sorted);
    if (spec.target) {
      stop_value_ = *spec.target;
    } else {
      stop_value_ = xi_upper_bound(d_).get_ui();
    }
  }

  std::size_t shard_count() const { return d_.blocks() == 1 ? last_partial_.size() : choices_[0].size(); }

  ShardOutcome run_shard(std::size_t shard, const std::atomic<bool>& cancel, Clock::time_point deadline) {
    ShardOutcome out;
    blocks_.assign(d_.blocks(), {});
    cancel_ = &cancel;
    deadline_ = deadline;
    out_ = &out;
    if (d_.blocks() == 1) {
      finish_last(0, shard, 0);
    } else {
      const auto& c = choices_[0][shard];
      blocks_[0] = c;
      descend(1, sum_of(0, c));
    }
    return out;
  }

  bool timed_out() const { return timed_out_; }

 private:
  Index sum_of(Index acc, const std::vector<Index>& pts) const {
    for (Index p : pts) acc = G_.add(acc, p);
    return acc;
  }

  bool respects_order(std::size_t k, const std::vector<Index>& c) const {
    if (!spec_.symmetry.equal_blocks || prev_same_[k] < 0) return true;
    return !(c < blocks_[static_cast<std::size_t>(prev_same_[k])]);
  }

  bool stopped() {
    if (out_->hit || cancel_->load(std::memory_order_relaxed)) return true;
    if (spec_.time_limit_s > 0 && (out_->visited & 0xff) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return true;
    }
    return timed_out_;
  }

  void descend(std::size_t k, Index acc) {
    if (stopped()) return;
    if (k + 1 == d_.blocks()) {
      for (std::size_t i = 0; i < last_partial_.size() && !stopped(); ++i) finish_last(k, i, acc);
      return;
    }
    for (const auto& c : choices_[k]) {
      if (stopped()) return;
      if (!respects_order(k, c)) continue;
      blocks_[k] = c;
      descend(k + 1, sum_of(acc, c));
    }
  }

  void finish_last(std::size_t k, std::size_t partial, Index acc) {
    const auto& t = last_partial_[partial];
    const Index x = G_.neg(sum_of(acc, t));
    if (std::find(t.begin(), t.end(), x) != t.end()) return;
    if (spec_.symmetry.within_block && !t.empty() && x < t.back()) return;
    std::vector<Index> c = t;
    c.push_back(x);
    if (!respects_order(k, c)) return;
    blocks_[k] = std::move(c);
    evaluate();
  }

  bool canonical() const {
    for (const auto& m : autos_) {
      std::vector<std::vector<Index>> img = blocks_;
      for (auto& b : img) {
        for (auto& p : b) p = m[p];
        if (spec_.symmetry.within_block) std::sort(b.begin(), b.end());
      }
      if (spec_.symmetry.equal_blocks) {
        // Re-sort each class of equal-size blocks in place.
        std::vector<bool> done(img.size(), false);
        for (std::size_t k = 0; k < img.size(); ++k) {
          if (done[k]) continue;
          std::vector<std::size_t> slots;
          for (std::size_t j = k; j < img.size(); ++j) {
            if (d_.part(j) == d_.part(k)) slots.push_back(j);
          }
          std::vector<std::vector<Index>> cls;
          for (std::size_t j : slots) cls.push_back(img[j]);
          std::sort(cls.begin(), cls.end());
          for (std::size_t i = 0; i < slots.size(); ++i) {
            img[slots[i]] = std::move(cls[i]);
            done[slots[i]] = true;
          }
        }
      }
      if (img < blocks_) return false;
    }
    return true;
  }

  void evaluate() {
    if (!canonical()) return;
    std::vector<Index> pts;
    for (const auto& b : blocks_) pts.insert(pts.end(), b.begin(), b.end());
    const std::uint64_t xi = count_xi(to_configuration(G_, d_, pts)).xi;
    ++out_->visited;
    const bool better = spec_.target ? (!out_->has || closer(xi, out_->xi)) : (!out_->has || xi > out_->xi);
    if (better) {
      out_->has = true;
      out_->xi = xi;
      out_->points = std::move(pts);
    }
    if (xi == stop_value_) out_->hit = true;
  }

  bool closer(std::uint64_t a, std::uint64_t b) const {
    const auto t = *spec_.target;
    const auto da = a > t ? a - t : t - a, db = b > t ? b - t : t - b;
    return da < db;
  }

  const SearchSpec& spec_;
  const IndexedGroup& G_;
  const DegreeVector& d_;
  std::vector<std::vector<Index>> autos_;
  std::vector<int> prev_same_;
  std::vector<std::vector<std::vector<Index>>> choices_;
  std::vector<std::vector<Index>> last_partial_;
  std::uint64_t stop_value_ = 0;

  std::vector<std::vector<Index>> blocks_;
  const std::atomic<bool>* cancel_ = nullptr;
  Clock::time_point deadline_;
  ShardOutcome* out_ = nullptr;
  bool timed_out_ = false;
};

// Runs shards 0..count-1 on `threads` workers. Shards after the first one
// that hit the stopping value are skipped, so the merged result does not
// depend on scheduling.
template <typename RunShard>
std::vector<ShardOutcome> run_sharded(std::size_t count, unsigned threads, RunShard&& run) {
  std::vector<ShardOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (i > first_hit.load()) continue;
      std::atomic<bool> never{false};
      outcomes[i] = run(i, never);
      if (outcomes[i].hit) {
        std::size_t cur = first_hit.load();
        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  const std::size_t cut = first_hit.load();
  if (cut != std::numeric_limits<std::size_t>::max()) outcomes.resize(cut + 1);
  return outcomes;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool off_diagonal(const DegreeVector& d, const std::vector<Index>& pts) {
  for (std::size_t k = 0; k < d.blocks(); ++k) {
    std::vector<Index> b(pts.begin() + static_cast<std::ptrdiff_t>(d.block_begin(k)),
                         pts.begin() + static_cast<std::ptrdiff_t>(d.block_end(k)));
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  }
  return true;
}

class LocalSearch {
 public:
  LocalSearch(const SearchSpec& spec, const IndexedGroup& G) : spec_(spec), G_(G), d_(spec.degree) {
    bound_ = xi_upper_bound(d_).get_ui();
  }

  ShardOutcome run_restart(std::size_t r, Clock::time_point deadline) const {
    ShardOutcome out;
    std::mt19937_64 rng(splitmix64(spec_.seed ^ splitmix64(r)));
    const auto n = static_cast<Index>(G_.size());
    const std::size_t last = d_.points() - 1;
    std::vector<Index> pts(d_.points());

    auto resolve = [&](std::vector<Index>& p) {
      Index acc = 0;
      for (std::size_t i = 0; i < last; ++i) acc = G_.add(acc, p[i]);
      p[last] = G_.neg(acc);
    };

    bool ok = false;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      for (std::size_t k = 0; k < d_.blocks(); ++k) {
        std::vector<Index> pool(n);
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::size_t i = d_.block_begin(k), j = 0; i < d_.block_end(k); ++i, ++j) {
          const std::size_t pick = j + rng() % (pool.size() - j);
          std::swap(pool[j], pool[pick]);
          pts[i] = pool[j];
        }
      }
      resolve(pts);
      ok = off_diagonal(d_, pts);
    }
    if (!ok) return out;

    auto score = [&](std::uint64_t xi) -> std::int64_t {
      if (!spec_.target) return static_cast<std::int64_t>(xi);
      const auto t = *spec_.target;
      return -static_cast<std::int64_t>(xi > t ? xi - t : t - xi);
    };
    auto count = [&](const std::vector<Index>& p) {
      ++out.visited;
      return count_xi(to_configuration(G_, d_, p)).xi;
    };
    const std::uint64_t stop = spec_.target ? *spec_.target : bound_;

    std::uint64_t cur_xi = count(pts);
    out.has = true;
    out.xi = cur_xi;
    out.points = pts;
    if (cur_xi == stop) {
      out.hit = true;
      return out;
    }
    while (out.visited < spec_.max_iterations) {
      if (spec_.time_limit_s > 0 && Clock::now() > deadline) break;
      std::int64_t best_score = score(cur_xi);
      std::vector<Index> best_pts;
      std::uint64_t best_xi = cur_xi;
      // Steepest ascent over single-point replacements; the last point is
      // re-solved so the configuration stays zero-sum.
      for (std::size_t pos = 0; pos < last && out.visited < spec_.max_iterations; ++pos) {
        for (Index e = 0; e < n && out.visited < spec_.max_iterations; ++e) {
          if (e == pts[pos]) continue;
          std::vector<Index> cand = pts;
          cand[pos] = e;
          resolve(cand);
          if (!off_diagonal(d_, cand)) continue;
          const std::uint64_t xi = count(cand);
          if (score(xi) > best_score) {
            best_score = score(xi);
            best_pts = std::move(cand);
            best_xi = xi;
          }
        }
      }
      if (best_pts.empty()) break;
      pts = std::move(best_pts);
      cur_xi = best_xi;
      if (score(cur_xi) > score(out.xi)) {
        out.xi = cur_xi;
        out.points = pts;
      }
      if (cur_xi == stop) {
        out.hit = true;
        break;
      }
    }
    return out;
  }

 private:
  const SearchSpec& spec_;
  const IndexedGroup& G_;
  const DegreeVector& d_;
  std::uint64_t bound_ = 0;
};

std::string mode_name(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "local_search"; }

}  // namespace

double estimate_search_space(const SearchSpec& spec) {
  const double n = static_cast<double>(spec.group.order());
  auto lbinom = [](double a, double b) {
    if (b < 0 || b > a) return -std::numeric_limits<double>::infinity();
    return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
  };
  // Group blocks by size; equal-size blocks form a multiset of subsets.
  std::map<int, int> classes;
  for (int p : spec.degree.parts()) ++classes[p];
  double log_size = 0;
  for (const auto& [p, m] : classes) {
    const double s = 2.0 * p;
    double per_block = lbinom(n, s);
    if (!spec.symmetry.within_block) per_block += std::lgamma(s + 1);
    if (!std::isfinite(per_block)) return 0;
    if (spec.symmetry.equal_blocks) {
      log_size += lbinom(std::exp(per_block) + m - 1, m);
    } else {
      log_size += m * per_block;
    }
  }
  log_size -= std::log(n);  // zero-sum solve
  return std::exp(log_size);
}

SearchResult search_max_xi(const SearchSpec& spec) {
  if (!spec.group.is_finite()) throw NotEnumerable("search requires a finite group, got " + spec.group.to_string());
  if (spec.target && *spec.target % 2 != 0) throw InvalidArgument("target must be even");
  const IndexedGroup G(spec.group);
  const auto& d = spec.degree;
  SearchResult result;
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(spec.time_limit_s > 0 ? spec.time_limit_s : 1e9));

  std::size_t largest_block = 0;
  for (std::size_t k = 0; k < d.blocks(); ++k) largest_block = std::max(largest_block, d.block_size(k));
  if (largest_block > G.size()) {
    result.exhaustive = true;
    result.note = "no off-diagonal configuration: a block of size " + std::to_string(largest_block) +
                  " cannot hold distinct points of a group of order " + std::to_string(G.size());
    return result;
  }

  std::vector<ShardOutcome> outcomes;
  bool timed_out = false;
  if (spec.mode == SearchMode::exhaustive) {
    const double est = estimate_search_space(spec);
    if (est > spec.exhaustive_ceiling) {
      throw SearchTooLarge("exhaustive search space is about " + std::to_string(est) +
                               " configurations, above the ceiling " + std::to_string(spec.exhaustive_ceiling),
                           est);
    }
    // Each shard gets its own enumerator; they share nothing mutable.
    const Exhaustive probe(spec, G);
    std::atomic<bool> any_timeout{false};
    outcomes = run_sharded(probe.shard_count(), spec.threads, [&](std::size_t i, const std::atomic<bool>& cancel) {
      Exhaustive ex(spec, G);
      auto o = ex.run_shard(i, cancel, deadline);
      if (ex.timed_out()) any_timeout = true;
      return o;
    });
    timed_out = any_timeout.load();
  } else {
    const LocalSearch ls(spec, G);
    outcomes = run_sharded(static_cast<std::size_t>(spec.restarts), spec.threads,
                           [&](std::size_t i, const std::atomic<bool>&) { return ls.run_restart(i, deadline); });
    timed_out = spec.time_limit_s > 0 && Clock::now() > deadline;
  }

  const ShardOutcome* best = nullptr;
  for (const auto& o : outcomes) {
    result.visited += o.visited;
    if (!o.has) continue;
    if (!best) {
      best = &o;
      continue;
    }
    bool better;
    if (spec.target) {
      const auto t = *spec.target;
      const auto da = o.xi > t ? o.xi - t : t - o.xi, db = best->xi > t ? best->xi - t : t - best->xi;
      better = da < db;
    } else {
      better = o.xi > best->xi;
    }
    if (better) best = &o;
  }

  const bool hit = !outcomes.empty() && outcomes.back().hit;
  result.exhaustive = spec.mode == SearchMode::exhaustive && !timed_out;
  if (!best) {
    result.note = "no off-diagonal zero-sum configuration found";
    return result;
  }
  result.best_xi = best->xi;
  result.found = spec.target ? best->xi == *spec.target : true;
  if (spec.mode == SearchMode::exhaustive && hit && !spec.target) {
    result.note = "stopped at the upper bound";
  }

  Configuration w = to_configuration(G, d, best->points);
  // Re-verify the witness independently before reporting it.
  if (is_on_diagonal(w) || !w.total_sum_zero() || count_xi(w, CountMethod::naive).xi != best->xi) {
    throw Error("internal error: search witness failed re-verification");
  }
  result.module_rank = RowLattice(build_relation_module(d, satisfied_relations(w)).matrix).rank();
  result.witness = std::move(w);
  if (spec.target && !result.found) {
    result.note = result.exhaustive ? "target not achievable: whole reduced space searched"
                                    : "target not found within budget";
  }
  return result;
}

SearchResult find_xi_value(SearchSpec spec, std::uint64_t target) {
  if (target % 2 != 0) throw InvalidArgument("target must be even");
  const BigInt bound = xi_upper_bound(spec.degree);
  if (BigInt(std::to_string(target)) > bound) {
    SearchResult r;
    r.note = "target " + std::to_string(target) + " exceeds the upper bound " + bound.get_str() + " for degree " +
             spec.degree.to_string();
    r.exhaustive = true;
    return r;
  }
  spec.target = target;
  return search_max_xi(spec);
}

nlohmann::json search_spec_to_json(const SearchSpec& s) {
  nlohmann::json j;
  j["group"] = s.group;
  j["degree"] = s.degree.parts();
  j["mode"] = mode_name(s.mode);
  j["target"] = s.target ? nlohmann::json(*s.target) : nlohmann::json(nullptr);
  j["budget"] = {{"max_iterations", s.max_iterations}, {"restarts", s.restarts}, {"time_limit_s", s.time_limit_s}};
  j["seed"] = s.seed;
  j["symmetry"] = {{"within_block", s.symmetry.within_block},
                   {"equal_blocks", s.symmetry.equal_blocks},
                   {"negation", s.symmetry.negation},
                   {"automorphisms", s.symmetry.automorphisms},
                   {"automorphism_max_order", s.symmetry.automorphism_max_order}};
  j["exhaustive_ceiling"] = s.exhaustive_ceiling;
  return j;
}

SearchSpec search_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("search spec: expected an object");
  for (const char* key : {"group", "degree"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("search spec: missing key '") + key + "'");
  }
  SearchSpec s;
  s.group = group_from_json(j.at("group"));
  s.degree = degree_from_json(j.at("degree"));
  if (j.contains("mode")) {
    const auto m = j.at("mode").get<std::string>();
    if (m == "exhaustive") {
      s.mode = SearchMode::exhaustive;
    } else if (m == "local_search" || m == "local") {
      s.mode = SearchMode::local_search;
    } else {
      throw InvalidArgument("search spec.mode: expected 'exhaustive' or 'local_search', got '" + m + "'");
    }
  }
  if (j.contains("target") && !j.at("target").is_null()) {
    const auto t = j.at("target").get<std::int64_t>();
    if (t < 0 || t % 2 != 0) throw InvalidArgument("search spec.target: expected an even non-negative integer");
    s.target = static_cast<std::uint64_t>(t);
  }
  if (j.contains("budget")) {
    const auto& b = j.at("budget");
    s.max_iterations = b.value("max_iterations", s.max_iterations);
    s.restarts = b.value("restarts", s.restarts);
    s.time_limit_s = b.value("time_limit_s", s.time_limit_s);
  }
  s.seed = j.value("seed", s.seed);
  if (j.contains("symmetry")) {
    const auto& y = j.at("symmetry");
    s.symmetry.within_block = y.value("within_block", s.symmetry.within_block);
    s.symmetry.equal_blocks = y.value("equal_blocks", s.symmetry.equal_blocks);
    s.symmetry.negation = y.value("negation", s.symmetry.negation);
    s.symmetry.automorphisms = y.value("automorphisms", s.symmetry.automorphisms);
    s.symmetry.automorphism_max_order = y.value("automorphism_max_order", s.symmetry.automorphism_max_order);
  }
  s.exhaustive_ceiling = j.value("exhaustive_ceiling", s.exhaustive_ceiling);
  return s;
}

nlohmann::json search_result_to_json(const SearchResult& r) {
  nlohmann::json j;
  j["found"] = r.found;
  j["best_xi"] = r.best_xi;
  j["witness"] = r.witness ? configuration_to_json(*r.witness) : nlohmann::json(nullptr);
  j["exhaustive"] = r.exhaustive;
  j["visited"] = r.visited;
  j["module_rank"] = r.module_rank;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace gaussdeg
