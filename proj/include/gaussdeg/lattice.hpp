#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "gaussdeg/bigint.hpp"
#include "gaussdeg/relations.hpp"

namespace gaussdeg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> row(std::size_t r) const;
  void append_row(const std::vector<BigInt>& row);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// Row-style Hermite normal form of the row lattice: the nonzero rows only,
/// pivots positive and strictly increasing in column, entries above each
/// pivot reduced into [0, pivot).
IntMatrix hermite_form(const IntMatrix& m);

struct SmithInvariants {
  std::vector<BigInt> factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
};

SmithInvariants smith_invariants(const IntMatrix& m);

/// Integer row lattice kept in Hermite form so that repeated membership
/// queries share one reduction.
class RowLattice {
 public:
  explicit RowLattice(const IntMatrix& generators);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dimension() const { return cols_; }
  const IntMatrix& basis() const { return basis_; }
  bool contains(const std::vector<BigInt>& v) const;
  bool contains_all_rows(const IntMatrix& m) const;

 private:
  std::size_t cols_;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_cols_;
};

bool lattice_contains(const IntMatrix& basis, const std::vector<BigInt>& v);

/// Rows: the all-ones vector, then T_I for each relation in bitmask order.
struct RelationModule {
  DegreeVector degree;
  std::vector<Relation> relations;
  IntMatrix matrix;
};

RelationModule build_relation_module(const DegreeVector& d, std::vector<Relation> rels);

/// True iff no e_i - e_j with i < j in a common block lies in the module.
bool obstruction_free(const RelationModule& m);

}  // namespace gaussdeg
