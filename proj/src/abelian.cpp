#include "gaussdeg/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gaussdeg/error.hpp"

namespace gaussdeg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::size_t GroupElementHash::operator()(const GroupElement& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t c : e.coords()) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::int64_t m : torsion_) {
    if (m < 2) {
      throw InvalidArgument("torsion modulus must be >= 2, got " + std::to_string(m));
    }
  }
}

std::uint64_t AbelianGroup::order() const {
  if (!is_finite()) throw NotEnumerable("group " + to_string() + " is infinite");
  std::uint64_t n = 1;
  for (std::int64_t m : torsion_) {
    if (n > UINT64_MAX / static_cast<std::uint64_t>(m)) {
      throw InvalidArgument("group order overflows 64 bits");
    }
    n *= static_cast<std::uint64_t>(m);
  }
  return n;
}

std::size_t AbelianGroup::torsion_generators() const {
  // For each prime p, count the factors divisible by p; the maximum is the
  // number of invariant factors.
  std::map<std::int64_t, std::size_t> per_prime;
  for (std::int64_t m : torsion_) {
    std::int64_t r = m;
    for (std::int64_t p = 2; p * p <= r; ++p) {
      if (r % p == 0) {
        ++per_prime[p];
        while (r % p == 0) r /= p;
      }
    }
    if (r > 1) ++per_prime[r];
  }
  std::size_t best = 0;
  for (const auto& [p, c] : per_prime) best = std::max(best, c);
  return best;
}

void AbelianGroup::check(const GroupElement& e) const {
  if (e.size() != dimension()) {
    throw DimensionMismatch("element has " + std::to_string(e.size()) +
                            " coordinates, group " + to_string() + " expects " +
                            std::to_string(dimension()));
  }
}

GroupElement AbelianGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != dimension()) {
    throw DimensionMismatch("element has " + std::to_string(coords.size()) +
                            " coordinates, group " + to_string() + " expects " +
                            std::to_string(dimension()));
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    coords[free_rank_ + i] = floor_mod(coords[free_rank_ + i], torsion_[i]);
  }
  return GroupElement(std::move(coords));
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(std::vector<std::int64_t>(dimension(), 0));
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  std::vector<std::int64_t> c(dimension());
  for (std::size_t i = 0; i < free_rank_; ++i) c[i] = a[i] + b[i];
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const std::size_t k = free_rank_ + i;
    std::int64_t s = a[k] + b[k];
    c[k] = s >= torsion_[i] ? s - torsion_[i] : s;
  }
  return GroupElement(std::move(c));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  check(a);
  std::vector<std::int64_t> c(dimension());
  for (std::size_t i = 0; i < free_rank_; ++i) c[i] = -a[i];
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const std::size_t k = free_rank_ + i;
    c[k] = a[k] == 0 ? 0 : torsion_[i] - a[k];
  }
  return GroupElement(std::move(c));
}

GroupElement AbelianGroup::multiply(std::int64_t k, const GroupElement& a) const {
  check(a);
  std::vector<std::int64_t> c(dimension());
  for (std::size_t i = 0; i < free_rank_; ++i) c[i] = k * a[i];
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const std::size_t j = free_rank_ + i;
    const std::int64_t m = torsion_[i];
    c[j] = floor_mod(floor_mod(k, m) * a[j], m);
  }
  return GroupElement(std::move(c));
}

GroupElement AbelianGroup::sum(std::span<const GroupElement> elems) const {
  GroupElement acc = identity();
  for (const auto& e : elems) acc = add(acc, e);
  return acc;
}

bool AbelianGroup::is_zero_raw(std::span<const std::int64_t> acc) const {
  for (std::size_t i = 0; i < free_rank_; ++i) {
    if (acc[i] != 0) return false;
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (acc[free_rank_ + i] % torsion_[i] != 0) return false;
  }
  return true;
}

std::vector<GroupElement> AbelianGroup::enumerate_elements() const {
  const std::uint64_t n = order();
  std::vector<GroupElement> out;
  out.reserve(n);
  std::vector<std::int64_t> cur(dimension(), 0);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    out.push_back(GroupElement(cur));
    // odometer, last coordinate fastest
    for (std::size_t i = torsion_.size(); i-- > 0;) {
      if (++cur[i] < torsion_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> AbelianGroup::unit_multipliers() const {
  std::vector<std::vector<std::int64_t>> units;
  for (std::int64_t m : torsion_) {
    std::vector<std::int64_t> u;
    for (std::int64_t k = 1; k < m; ++k) {
      if (std::gcd(k, m) == 1) u.push_back(k);
    }
    units.push_back(std::move(u));
  }
  return units;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " x ";
    first = false;
  };
  if (free_rank_ > 0) {
    sep();
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
  }
  for (std::int64_t m : torsion_) {
    sep();
    os << "Z" << m;
  }
  if (first) os << "0";
  return os.str();
}

std::string AbelianGroup::format(const GroupElement& e) const {
  if (e.size() == 1) return std::to_string(e[0]);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << ")";
  return os.str();
}

void to_json(nlohmann::json& j, const AbelianGroup& g) {
  j = nlohmann::json{{"free_rank", g.free_rank()}, {"torsion", g.torsion()}};
}

AbelianGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("group: expected an object");
  std::size_t free_rank = 0;
  if (j.contains("free_rank")) {
    if (!j.at("free_rank").is_number_unsigned() && !j.at("free_rank").is_number_integer()) {
      throw InvalidArgument("group.free_rank: expected a non-negative integer");
    }
    const auto fr = j.at("free_rank").get<std::int64_t>();
    if (fr < 0) throw InvalidArgument("group.free_rank: expected a non-negative integer");
    free_rank = static_cast<std::size_t>(fr);
  }
  std::vector<std::int64_t> torsion;
  if (j.contains("torsion")) {
    const auto& t = j.at("torsion");
    if (!t.is_array()) throw InvalidArgument("group.torsion: expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_number_integer()) {
        throw InvalidArgument("group.torsion[" + std::to_string(i) + "]: expected an integer");
      }
      torsion.push_back(t[i].get<std::int64_t>());
    }
  }
  return AbelianGroup(free_rank, std::move(torsion));
}

nlohmann::json element_to_json(const GroupElement& e) { return e.coords(); }

GroupElement element_from_json(const AbelianGroup& g, const nlohmann::json& j) {
  // A bare integer is accepted for one-coordinate groups.
  if (j.is_number_integer()) return g.element({j.get<std::int64_t>()});
  if (!j.is_array()) throw InvalidArgument("element: expected an integer array");
  std::vector<std::int64_t> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidArgument("element: expected an integer array");
    c.push_back(v.get<std::int64_t>());
  }
  return g.element(std::move(c));
}

}  // namespace gaussdeg
