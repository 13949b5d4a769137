#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace gaussdeg {

class AbelianGroup;

/// A point of Z^r x Z_{m_1} x ... x Z_{m_s}. Torsion coordinates are always
/// stored reduced into [0, m_i), so equality is plain coordinate equality.
class GroupElement {
 public:
  GroupElement() = default;

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  friend class AbelianGroup;
  explicit GroupElement(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}

  std::vector<std::int64_t> coords_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const noexcept;
};

/// Finitely generated abelian group Z^free_rank x Z_{m_1} x ... x Z_{m_s}.
/// The torsion moduli are kept exactly as given (Z_2 x Z_6 is not rewritten).
class AbelianGroup {
 public:
  AbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);

  static AbelianGroup cyclic(std::int64_t m) { return AbelianGroup(0, {m}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t dimension() const { return free_rank_ + torsion_.size(); }
  bool is_finite() const { return free_rank_ == 0; }

  /// Group order; throws NotEnumerable for infinite groups.
  std::uint64_t order() const;

  /// Minimal number of generators of the torsion part (the length of its
  /// invariant-factor decomposition). 0 for the trivial group.
  std::size_t torsion_generators() const;

  /// Reduces and validates raw coordinates.
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement element(std::initializer_list<std::int64_t> coords) const {
    return element(std::vector<std::int64_t>(coords));
  }
  GroupElement identity() const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
  }
  GroupElement multiply(std::int64_t k, const GroupElement& a) const;
  GroupElement sum(std::span<const GroupElement> elems) const;

  /// True iff the raw integer sums in `acc` represent the identity.
  bool is_zero_raw(std::span<const std::int64_t> acc) const;
  GroupElement reduce_raw(std::span<const std::int64_t> acc) const {
    return element(std::vector<std::int64_t>(acc.begin(), acc.end()));
  }

  /// Every element exactly once, lexicographic in coordinates.
  std::vector<GroupElement> enumerate_elements() const;

  /// Units of each cyclic factor; an element-wise choice gives an automorphism.
  std::vector<std::vector<std::int64_t>> unit_multipliers() const;

  std::string to_string() const;
  std::string format(const GroupElement& e) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  void check(const GroupElement& e) const;

  std::size_t free_rank_;
  std::vector<std::int64_t> torsion_;
};

void to_json(nlohmann::json& j, const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const GroupElement& e);
GroupElement element_from_json(const AbelianGroup& g, const nlohmann::json& j);

}  // namespace gaussdeg
