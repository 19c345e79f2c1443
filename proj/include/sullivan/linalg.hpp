#pragma once

// Exact rank, kernel and quotient computations for sparse matrices over Q.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sullivan/algebra.hpp"

namespace sullivan {

/// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

class SparseExactMatrix {
 public:
  SparseExactMatrix() = default;
  SparseExactMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate (row, col) entries are summed; resulting zeros are dropped.
  static SparseExactMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static SparseExactMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
  static SparseExactMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t nnz() const;
  [[nodiscard]] bool is_zero() const { return nnz() == 0; }
  [[nodiscard]] const SparseVector& row(std::size_t r) const { return data_[r]; }
  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;
  [[nodiscard]] SparseVector column(std::size_t c) const;
  [[nodiscard]] std::vector<SparseVector> columns() const;

  [[nodiscard]] SparseExactMatrix transpose() const;
  [[nodiscard]] SparseVector multiply(const SparseVector& x) const;

  friend SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b);
  friend bool operator==(const SparseExactMatrix&, const SparseExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;  // row-major
};

struct RankResult {
  std::size_t rank = 0;
  /// One vector per non-pivot column f, with entry 1 at f and 0 at the other
  /// non-pivot columns; ordered by f.
  std::vector<SparseVector> kernel_basis;
  std::vector<std::size_t> pivot_columns;  // ascending
};

/// Fraction-free sparse elimination with Markowitz pivoting, run separately
/// on each connected component of the row/column incidence graph.
RankResult rank_exact(const SparseExactMatrix& m);
/// Same elimination without the kernel back-substitution.
std::size_t rank(const SparseExactMatrix& m);

/// Default 31-bit primes for the modular prefilter.
std::vector<std::uint64_t> default_primes();

struct MultimodularRank {
  std::size_t bound = 0;   ///< max over primes of rank mod p; a lower bound on the rank
  bool confirmed = false;  ///< bound proven equal to the exact rank
  std::string certificate; ///< how confirmation was obtained, empty if not
  std::vector<std::pair<std::uint64_t, std::size_t>> per_prime;
};

/// Rank modulo each prime after clearing row denominators. A rank of
/// min(rows, cols) mod p exhibits a full-size minor whose integer
/// determinant is nonzero mod p, hence nonzero; only then is the bound
/// marked confirmed.
MultimodularRank rank_multimodular(const SparseExactMatrix& m, std::span<const std::uint64_t> primes);

enum class RankMethod { exact, multimodular_confirmed };

struct ConfirmedRank {
  std::size_t rank = 0;
  std::size_t modular_bound = 0;
  std::string method;  ///< "full-size-minor" or "exact-elimination"
};

/// Multimodular prefilter followed by exact confirmation when the bound
/// is not already certified by a full-size minor.
ConfirmedRank rank_confirmed(const SparseExactMatrix& m, std::span<const std::uint64_t> primes);

/// Row echelon basis of a growing subspace of Q^n. Rows are stored with a
/// leading coefficient of 1.
class EchelonBasis {
 public:
  /// Residual of v after elimination against the stored rows.
  [[nodiscard]] SparseVector reduce(const SparseVector& v) const;
  /// Adds v; returns false when v is already in the span.
  bool insert(const SparseVector& v);
  [[nodiscard]] bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  [[nodiscard]] std::size_t dimension() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVector> rows_;  // keyed by leading index
};

/// Vectors among `cocycles` completing span(boundaries) to span(cocycles),
/// chosen greedily in input order. Throws InternalError when a boundary is
/// not in span(cocycles).
std::vector<SparseVector> quotient_representatives(std::span<const SparseVector> cocycles,
                                                   std::span<const SparseVector> boundaries);

// Sparse vector helpers.
SparseVector axpy(const Rational& a, const SparseVector& x, const SparseVector& y);  // a*x + y
SparseVector scale(const Rational& a, const SparseVector& x);
SparseVector unit_vector(std::size_t index);

}  // namespace sullivan
