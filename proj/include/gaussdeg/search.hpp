#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "gaussdeg/abelian.hpp"
#include "gaussdeg/counting.hpp"
#include "gaussdeg/error.hpp"
#include "gaussdeg/relations.hpp"

namespace gaussdeg {

/// Raised when an exhaustive search space exceeds the configured ceiling.
class SearchTooLarge : public Error {
 public:
  SearchTooLarge(const std::string& what, double estimate) : Error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

enum class SearchMode { exhaustive, local_search };

/// Which symmetries the exhaustive search quotients by. Each one only
/// changes the amount of work, never the optimum.
struct SymmetryOptions {
  bool within_block = true;   // blocks as sets rather than ordered tuples
  bool equal_blocks = true;   // blocks of equal size sorted among themselves
  bool negation = true;       // X ~ -X
  bool automorphisms = true;  // unit multipliers on each cyclic factor
  std::uint64_t automorphism_max_order = 256;
};

struct SearchSpec {
  AbelianGroup group = AbelianGroup::cyclic(2);
  DegreeVector degree = DegreeVector({1});
  SearchMode mode = SearchMode::exhaustive;
  std::optional<std::uint64_t> target;
  /// Local search: move evaluations per restart, and number of restarts.
  std::uint64_t max_iterations = 20000;
  std::uint64_t restarts = 64;
  /// Wall-clock limit in seconds; 0 means none. Results with a limit that
  /// fired are not reproducible.
  double time_limit_s = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  SymmetryOptions symmetry;
  /// Exhaustive mode refuses spaces whose estimated reduced size exceeds this.
  double exhaustive_ceiling = 5e8;
};

nlohmann::json search_spec_to_json(const SearchSpec& s);
SearchSpec search_spec_from_json(const nlohmann::json& j);

struct SearchResult {
  bool found = false;  // a witness exists (hitting the target, if any)
  std::uint64_t best_xi = 0;
  std::optional<Configuration> witness;
  bool exhaustive = false;  // true when the whole reduced space was covered
  std::uint64_t visited = 0;
  std::size_t module_rank = 0;
  std::string note;
};

nlohmann::json search_result_to_json(const SearchResult& r);

/// Estimated size of the reduced exhaustive space.
double estimate_search_space(const SearchSpec& spec);

/// Maximizes xi over off-diagonal zero-sum configurations (or hunts for
/// xi == target when spec.target is set).
SearchResult search_max_xi(const SearchSpec& spec);

/// Looks for a configuration with xi exactly `target`.
SearchResult find_xi_value(SearchSpec spec, std::uint64_t target);

}  // namespace gaussdeg
