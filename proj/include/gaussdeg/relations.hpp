#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussdeg/bigint.hpp"

namespace gaussdeg {

/// d = (d_1, ..., d_n). Block k covers 0-based indices [2 d^{k-1}, 2 d^k)
/// where d^k is the k-th prefix sum (d^0 = 0).
class DegreeVector {
 public:
  explicit DegreeVector(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t blocks() const { return parts_.size(); }
  int part(std::size_t k) const { return parts_[k]; }
  /// g = sum of parts.
  int total() const { return total_; }
  /// Number of points, 2g.
  std::size_t points() const { return 2 * static_cast<std::size_t>(total_); }
  std::size_t block_begin(std::size_t k) const { return 2 * static_cast<std::size_t>(prefix_[k]); }
  std::size_t block_end(std::size_t k) const { return 2 * static_cast<std::size_t>(prefix_[k + 1]); }
  std::size_t block_size(std::size_t k) const { return 2 * static_cast<std::size_t>(parts_[k]); }
  std::size_t block_of(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<int> parts_;
  std::vector<int> prefix_;
  int total_ = 0;
};

/// Parses "1,2,2" into a degree vector.
DegreeVector parse_degree(const std::string& text);
DegreeVector degree_from_json(const nlohmann::json& j);

/// Sorted set of 0-based indices meeting block k in exactly d_k indices.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::vector<std::uint32_t> indices);

  const std::vector<std::uint32_t>& indices() const { return indices_; }
  bool contains(std::uint32_t i) const;
  /// Bit i set iff index i is in the relation; requires 2g <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  std::vector<std::uint32_t> indices_;
};

/// Numeric order of the relations' bitmasks, valid for any 2g.
bool mask_less(const Relation& a, const Relation& b);

bool is_relation(const DegreeVector& d, const Relation& r);

/// prod_k C(2 d_k, d_k).
BigInt relation_count(const DegreeVector& d);

/// Lexicographic on the per-block index choices, first block slowest.
std::vector<Relation> enumerate_relations(const DegreeVector& d);

/// Number of d_1-subsets of the first block; shards for parallel consumers.
std::size_t first_block_choices(const DegreeVector& d);

/// Visits every relation whose first-block choice has lexicographic rank in
/// [shard_begin, shard_end), in enumeration order. The callback receives the
/// current 0-based indices.
void for_each_relation(const DegreeVector& d,
                       const std::function<void(std::span<const std::uint32_t>)>& fn,
                       std::size_t shard_begin = 0,
                       std::size_t shard_end = SIZE_MAX);

Relation complement(const DegreeVector& d, const Relation& r);

nlohmann::json relation_to_json(const Relation& r);
Relation relation_from_json(const DegreeVector& d, const nlohmann::json& j);

/// Advances a sorted k-combination of {0..n-1} to its lexicographic
/// successor; false when `c` was the last one.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n);

}  // namespace gaussdeg
