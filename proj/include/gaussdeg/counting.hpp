#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "gaussdeg/abelian.hpp"
#include "gaussdeg/relations.hpp"

namespace gaussdeg {

/// X = (x_1, ..., x_{2g}) in G^{2g}, cut positionally into the blocks of d.
class Configuration {
 public:
  Configuration(AbelianGroup group, DegreeVector degree, std::vector<GroupElement> points);

  /// Builds from per-block point lists; block sizes must be 2 d_k.
  static Configuration from_blocks(AbelianGroup group, DegreeVector degree,
                                   const std::vector<std::vector<GroupElement>>& blocks);

  const AbelianGroup& group() const { return group_; }
  const DegreeVector& degree() const { return degree_; }
  const std::vector<GroupElement>& points() const { return points_; }
  std::span<const GroupElement> block(std::size_t k) const;

  bool total_sum_zero() const;

 private:
  AbelianGroup group_;
  DegreeVector degree_;
  std::vector<GroupElement> points_;
};

nlohmann::json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

enum class CountMethod { naive, meet_in_middle };

struct XiResult {
  std::uint64_t xi = 0;
  bool total_sum_zero = false;
  bool on_diagonal = false;
};

nlohmann::json xi_result_to_json(const XiResult& r);

/// True iff two points inside one block coincide.
bool is_on_diagonal(const Configuration& c);

/// Number of relations I with sum_{i in I} x_i = 0. `threads` only affects
/// the naive method; the result never depends on it.
XiResult count_xi(const Configuration& c, CountMethod method = CountMethod::meet_in_middle,
                  unsigned threads = 1);

/// The satisfied relations I_X, in enumeration order.
std::vector<Relation> satisfied_relations(const Configuration& c);

/// Split position chosen by the meet-in-the-middle counter: indices [0, P)
/// form the left half. Exposed for tests.
std::size_t mitm_split_position(const DegreeVector& d);

/// Divisor data of a bielliptic tower, already mapped into a group by a
/// fixed origin: Delta' (2t points), Delta'' (2(g-t) points) and the images
/// of delta and delta'.
struct BiellipticData {
  AbelianGroup group;
  int g = 0;
  int t = 0;
  std::vector<GroupElement> delta_prime_points;
  std::vector<GroupElement> delta_dprime_points;
  GroupElement delta;
  GroupElement delta_prime;
};

/// Throws InvalidArgument unless sizes, range of t and the relations
/// sum(Delta') = 2 delta', sum(Delta'') = 2 (delta - delta') hold.
void validate(const BiellipticData& b);

struct BiellipticXi {
  std::uint64_t xi = 0;
  std::uint64_t xi_tilde = 0;
};

BiellipticXi count_xi_bielliptic(const BiellipticData& b);

/// C' is hyperelliptic (for t = 2) iff some 2-subset of Delta' sums to delta'.
bool cprime_hyperelliptic(const BiellipticData& b);

/// Translates Delta', Delta'' by -x with g x = delta, giving a configuration
/// of degree (t, g-t) (or (g) when t = 0) with the same xi. Requires a finite
/// group so that x can be found; returns nullopt if no such x exists.
std::optional<Configuration> translated_configuration(const BiellipticData& b);

BiellipticData bielliptic_from_json(const nlohmann::json& j);

struct VarleyConfiguration {
  Configuration configuration;
  std::uint64_t expected_xi;
};

/// Even g: Z_2, every block {0,1}, xi = 2^{g-1}. Odd g: Z_3, every block
/// {1,2}, xi = (2^g - 2)/3.
VarleyConfiguration varley_configuration(int g);

}  // namespace gaussdeg
