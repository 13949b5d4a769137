#include "gaussdeg/lattice.hpp"

#include <algorithm>
#include <utility>

#include "gaussdeg/error.hpp"

namespace gaussdeg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<BigInt>& row) {
  if (row.size() != cols_) {
    throw DimensionMismatch("row of length " + std::to_string(row.size()) + " for a matrix with " +
                            std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt& v = m(r, c);
      if (v.fits_slong_p()) {
        row.push_back(v.get_si());
      } else {
        row.push_back(v.get_str());
      }
    }
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries")) throw InvalidArgument("matrix: expected {\"rows\",\"cols\",\"entries\"}");
  const auto& e = j.at("entries");
  if (!e.is_array()) throw InvalidArgument("matrix.entries: expected an array of rows");
  std::size_t rows = j.value("rows", e.size());
  std::size_t cols = j.contains("cols") ? j.at("cols").get<std::size_t>() : (e.empty() ? 0 : e[0].size());
  if (rows != e.size()) throw InvalidArgument("matrix.rows does not match the number of entry rows");
  IntMatrix m(0, cols);
  for (std::size_t r = 0; r < e.size(); ++r) {
    if (!e[r].is_array() || e[r].size() != cols) {
      throw InvalidArgument("matrix.entries[" + std::to_string(r) + "]: expected " + std::to_string(cols) +
                            " integers");
    }
    std::vector<BigInt> row;
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = e[r][c];
      if (v.is_number_integer()) {
        row.emplace_back(std::to_string(v.get<std::int64_t>()));
      } else if (v.is_string()) {
        BigInt b;
        if (b.set_str(v.get<std::string>(), 10) != 0) {
          throw InvalidArgument("matrix.entries[" + std::to_string(r) + "][" + std::to_string(c) +
                                "]: not an integer");
        }
        row.push_back(b);
      } else {
        throw InvalidArgument("matrix.entries[" + std::to_string(r) + "][" + std::to_string(c) +
                              "]: not an integer");
      }
    }
    m.append_row(row);
  }
  return m;
}

namespace {

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from_col = 0) {
  if (q == 0) return;
  for (std::size_t c = from_col; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from_row = 0) {
  if (q == 0) return;
  for (std::size_t r = from_row; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hermite_form(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    // Euclid on the column: keep the smallest nonzero entry as pivot.
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t r = rank; r < m.rows(); ++r) {
        if (m(r, col) != 0 && (best == m.rows() || abs(m(r, col)) < abs(m(best, col)))) best = r;
      }
      if (best == m.rows()) break;
      m.swap_rows(rank, best);
      bool clean = true;
      for (std::size_t r = rank + 1; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        row_axpy(m, r, rank, tdiv(m(r, col), m(rank, col)), col);
        if (m(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(rank, col) == 0) continue;
    if (m(rank, col) < 0) {
      for (std::size_t c = col; c < m.cols(); ++c) m(rank, c) = -m(rank, c);
    }
    for (std::size_t r = 0; r < rank; ++r) row_axpy(m, r, rank, fdiv(m(r, col), m(rank, col)), col);
    pivots.push_back(col);
    ++rank;
  }
  IntMatrix out(0, m.cols());
  for (std::size_t r = 0; r < rank; ++r) out.append_row(m.row(r));
  return out;
}

SmithInvariants smith_invariants(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Pivot: smallest nonzero absolute value in the trailing submatrix.
    std::size_t pr = R, pc = C;
    for (std::size_t r = t; r < R; ++r)
      for (std::size_t c = t; c < C; ++c)
        if (m(r, c) != 0 && (pr == R || abs(m(r, c)) < abs(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == R) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);
    while (true) {
      bool changed = false;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (m(r, t) == 0) continue;
        row_axpy(m, r, t, tdiv(m(r, t), m(t, t)), t);
        if (m(r, t) != 0) {
          m.swap_rows(t, r);
          changed = true;
        }
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (m(t, c) == 0) continue;
        col_axpy(m, c, t, tdiv(m(t, c), m(t, t)), t);
        if (m(t, c) != 0) {
          m.swap_cols(t, c);
          changed = true;
        }
      }
      if (!changed) break;
    }
    diag.push_back(abs(m(t, t)));
  }
  // Enforce the divisibility chain: (a, b) -> (gcd, lcm) preserves the
  // abelian group and converges to invariant factors.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  }
  SmithInvariants s;
  s.rank = diag.size();
  s.factors = std::move(diag);
  return s;
}

RowLattice::RowLattice(const IntMatrix& generators)
    : cols_(generators.cols()), basis_(hermite_form(generators)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (basis_(r, c) == 0) ++c;
    pivot_cols_.push_back(c);
  }
}

bool RowLattice::contains(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against a lattice in Z^" +
                            std::to_string(cols_));
  }
  std::vector<BigInt> w = v;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (next < pivot_cols_.size() && pivot_cols_[next] == c) {
      const BigInt& p = basis_(next, c);
      if (w[c] % p != 0) return false;
      const BigInt q = w[c] / p;
      for (std::size_t k = c; k < cols_; ++k) w[k] -= q * basis_(next, k);
      ++next;
    } else if (w[c] != 0) {
      return false;
    }
  }
  return true;
}

bool RowLattice::contains_all_rows(const IntMatrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!contains(m.row(r))) return false;
  }
  return true;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<BigInt>& v) {
  return RowLattice(basis).contains(v);
}

RelationModule build_relation_module(const DegreeVector& d, std::vector<Relation> rels) {
  for (const auto& r : rels) {
    if (!is_relation(d, r)) throw InvalidArgument("build_relation_module: invalid relation for " + d.to_string());
  }
  std::sort(rels.begin(), rels.end(), mask_less);
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  const std::size_t n = d.points();
  IntMatrix m(0, n);
  m.append_row(std::vector<BigInt>(n, BigInt(1)));
  for (const auto& r : rels) {
    std::vector<BigInt> row(n, BigInt(0));
    for (std::uint32_t i : r.indices()) row[i] = 1;
    m.append_row(row);
  }
  return {d, std::move(rels), std::move(m)};
}

bool obstruction_free(const RelationModule& m) {
  const RowLattice lattice(m.matrix);
  const auto& d = m.degree;
  const std::size_t n = d.points();
  for (std::size_t k = 0; k < d.blocks(); ++k) {
    for (std::size_t i = d.block_begin(k); i < d.block_end(k); ++i) {
      for (std::size_t j = i + 1; j < d.block_end(k); ++j) {
        std::vector<BigInt> v(n, BigInt(0));
        v[i] = 1;
        v[j] = -1;
        if (lattice.contains(v)) return false;
      }
    }
  }
  return true;
}

}  // namespace gaussdeg
