#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/cdga.hpp"

namespace sullivan {

/// A finite-dimensional Lie algebra over Q given by structure constants on an
/// ordered basis. Only pairs i < j are stored; [X_j, X_i] = -[X_i, X_j].
class LiePresentation {
 public:
  using Bracket = std::tuple<std::size_t, std::size_t, SparseVector>;

  /// Brackets may be listed with either index order; listing the same pair
  /// twice, or [X_i, X_i] != 0, is a UsageError. Jacobi failure throws
  /// ValidationError naming the offending triple.
  static LiePresentation make(std::string name, std::vector<std::string> basis, std::vector<Bracket> brackets);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& basis() const { return basis_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] std::size_t index_of(std::string_view name) const;
  /// Nonzero brackets [X_i, X_j] with i < j.
  [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& structure_constants() const {
    return constants_;
  }

  [[nodiscard]] SparseVector bracket(std::size_t i, std::size_t j) const;
  [[nodiscard]] SparseVector bracket(const SparseVector& u, const SparseVector& v) const;
  [[nodiscard]] bool nilpotent() const { return nilpotent_; }

  /// Renders a vector in this basis, e.g. "X_3_1" or "-1/2*X1 + X2".
  [[nodiscard]] std::string format(const SparseVector& v) const;

  friend bool operator==(const LiePresentation&, const LiePresentation&) = default;

 private:
  LiePresentation() = default;

  std::string name_;
  std::vector<std::string> basis_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> constants_;
  bool nilpotent_ = false;
};

/// Strictly lower-triangular n x n matrices with basis X_i_j (1 <= j < i <= n)
/// ordered by off-diagonal k = i - j, then by j.
LiePresentation u_n_presentation(int n);
LiePresentation abelian_lie(int k);

struct CenterResult {
  std::size_t dimension = 0;
  std::vector<SparseVector> basis;
  std::vector<std::string> rendered;
};

/// Exact kernel of v -> ([v, X_b])_b.
CenterResult center(const LiePresentation& lie);

struct CentralSeries {
  std::vector<std::size_t> dimensions;  ///< dim L, dim [L,L], ... ending at 0 when nilpotent
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
};

CentralSeries lower_central_series(const LiePresentation& lie);

/// Exterior algebra on the dual basis, dx_k = -sum_{i<j} c_{ij}^k x_i x_j.
/// Generator names lowercase the first character of each basis name.
Cdga chevalley_eilenberg(const LiePresentation& lie);

struct DualLie {
  LiePresentation lie;
  /// Desuspended degrees |g| - 1, kept as metadata only.
  std::vector<int> degrees;
};

/// Reads brackets off a purely quadratic differential on odd generators. Basis
/// names uppercase the first character of each generator name.
DualLie dual_homotopy_lie(const Cdga& cdga);

}  // namespace sullivan
