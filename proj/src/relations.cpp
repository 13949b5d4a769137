#include "gaussdeg/relations.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gaussdeg/error.hpp"

namespace gaussdeg {

DegreeVector::DegreeVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("degree vector must have at least one part");
  prefix_.push_back(0);
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("degree parts must be >= 1, got " + std::to_string(p));
    prefix_.push_back(prefix_.back() + p);
  }
  total_ = prefix_.back();
}

std::size_t DegreeVector::block_of(std::size_t index) const {
  if (index >= points()) throw InvalidArgument("index out of range");
  auto it = std::upper_bound(prefix_.begin(), prefix_.end(), static_cast<int>(index / 2));
  return static_cast<std::size_t>(it - prefix_.begin()) - 1;
}

std::string DegreeVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

DegreeVector parse_degree(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isspace(c) || c == '(' || c == ')'; }),
              tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("degree vector: '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw InvalidArgument("degree vector: '" + tok + "' is not an integer");
    parts.push_back(v);
  }
  return DegreeVector(std::move(parts));
}

DegreeVector degree_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("degree: expected an integer array");
  std::vector<int> parts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) {
      throw InvalidArgument("degree[" + std::to_string(i) + "]: expected an integer");
    }
    parts.push_back(j[i].get<int>());
  }
  return DegreeVector(std::move(parts));
}

Relation::Relation(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InvalidArgument("relation has repeated indices");
  }
}

bool Relation::contains(std::uint32_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::uint64_t Relation::mask() const {
  std::uint64_t m = 0;
  for (std::uint32_t i : indices_) {
    if (i >= 64) throw InvalidArgument("relation mask needs 2g <= 64");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

bool mask_less(const Relation& a, const Relation& b) {
  // Compare as binary numbers: the highest index in the symmetric
  // difference decides.
  auto ia = a.indices().rbegin(), ea = a.indices().rend();
  auto ib = b.indices().rbegin(), eb = b.indices().rend();
  while (ia != ea && ib != eb) {
    if (*ia != *ib) return *ia < *ib;
    ++ia;
    ++ib;
  }
  return ia == ea && ib != eb;
}

bool is_relation(const DegreeVector& d, const Relation& r) {
  std::vector<int> per_block(d.blocks(), 0);
  for (std::uint32_t i : r.indices()) {
    if (i >= d.points()) return false;
    ++per_block[d.block_of(i)];
  }
  for (std::size_t k = 0; k < d.blocks(); ++k) {
    if (per_block[k] != d.part(k)) return false;
  }
  return true;
}

BigInt relation_count(const DegreeVector& d) {
  BigInt n = 1;
  for (int p : d.parts()) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(p), static_cast<unsigned long>(p));
    n *= c;
  }
  return n;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t first_block_choices(const DegreeVector& d) {
  const BigInt c = relation_count(DegreeVector({d.part(0)}));
  return c.get_ui();
}

void for_each_relation(const DegreeVector& d,
                       const std::function<void(std::span<const std::uint32_t>)>& fn,
                       std::size_t shard_begin, std::size_t shard_end) {
  const std::size_t n = d.blocks();
  // Local combination state per block, in block-relative positions.
  std::vector<std::vector<std::uint32_t>> comb(n);
  for (std::size_t k = 0; k < n; ++k) {
    comb[k].resize(static_cast<std::size_t>(d.part(k)));
    std::iota(comb[k].begin(), comb[k].end(), 0u);
  }
  std::size_t first_rank = 0;
  while (first_rank < shard_begin) {
    if (!next_combination(comb[0], static_cast<std::uint32_t>(d.block_size(0)))) return;
    ++first_rank;
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(d.total()));
  while (first_rank < shard_end) {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto base = static_cast<std::uint32_t>(d.block_begin(k));
      for (std::uint32_t c : comb[k]) out[pos++] = base + c;
    }
    fn(out);
    // Odometer over blocks, last block fastest.
    std::size_t k = n;
    bool advanced = false;
    while (k-- > 0) {
      if (next_combination(comb[k], static_cast<std::uint32_t>(d.block_size(k)))) {
        advanced = true;
        break;
      }
      std::iota(comb[k].begin(), comb[k].end(), 0u);
    }
    if (!advanced) return;
    if (k == 0) ++first_rank;
  }
}

std::vector<Relation> enumerate_relations(const DegreeVector& d) {
  std::vector<Relation> out;
  for_each_relation(d, [&](std::span<const std::uint32_t> idx) {
    out.emplace_back(std::vector<std::uint32_t>(idx.begin(), idx.end()));
  });
  return out;
}

Relation complement(const DegreeVector& d, const Relation& r) {
  std::vector<std::uint32_t> out;
  out.reserve(d.points() - r.indices().size());
  for (std::uint32_t i = 0; i < d.points(); ++i) {
    if (!r.contains(i)) out.push_back(i);
  }
  return Relation(std::move(out));
}

nlohmann::json relation_to_json(const Relation& r) {
  nlohmann::json j = nlohmann::json::array();
  for (std::uint32_t i : r.indices()) j.push_back(i + 1);
  return j;
}

Relation relation_from_json(const DegreeVector& d, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("relation: expected an integer array");
  std::vector<std::uint32_t> idx;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
      throw InvalidArgument("relation: indices are 1-based positive integers");
    }
    idx.push_back(static_cast<std::uint32_t>(v.get<std::int64_t>() - 1));
  }
  Relation r(std::move(idx));
  if (!is_relation(d, r)) {
    throw InvalidArgument("relation " + j.dump() + " is not valid for degree " + d.to_string());
  }
  return r;
}

}  // namespace gaussdeg
