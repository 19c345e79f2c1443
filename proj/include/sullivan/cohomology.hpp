#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sullivan/cdga.hpp"

namespace sullivan {

struct BettiTable {
  std::vector<std::size_t> per_degree;  ///< b_0 .. b_N
  std::size_t total = 0;
  /// Set when the model has even generators: per_degree then covers degrees
  /// below the truncation degree, each of them exact.
  std::optional<int> truncated_at;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct CohomologyOptions {
  RankMethod method = RankMethod::exact;
  unsigned jobs = 1;
  std::vector<std::uint64_t> primes = default_primes();
};

/// b_n = |basis(n)| - rank(d_n) - rank(d_{n-1}).
BettiTable betti(const Cdga& cdga, const CohomologyOptions& options = {});

/// Closed elements whose classes form a basis of H^n.
std::vector<Element> representatives(const Cdga& cdga, int n);

struct ClassVerdict {
  bool closed = true;
  bool independent = true;
  bool spanning = true;
  /// Human-readable counterexample for the first failing property.
  std::optional<std::string> closed_witness;
  std::optional<std::string> dependence_witness;
  std::optional<std::string> spanning_witness;
  /// Independent class count found in each degree (index = degree).
  std::vector<std::size_t> classes_per_degree;

  [[nodiscard]] bool ok() const { return closed && independent && spanning; }
};

/// Checks that elems are closed, linearly independent modulo boundaries, and
/// span H*. Elements must be homogeneous; zero elements count as dependent.
ClassVerdict verify_classes(const Cdga& cdga, std::span<const Element> elems);

enum class RenamePolicy {
  strict,           ///< a name clash is a UsageError
  suffix_on_clash,  ///< on any clash, suffix every name with _1 / _2
};

/// Tensor product A (x) B: generators of A then B, differential extending
/// both. Truncation follows the default rule for the combined signature.
Cdga tensor_product(const Cdga& a, const Cdga& b, RenamePolicy policy = RenamePolicy::suffix_on_clash);

/// Re-expresses an element of A (or B) inside A (x) B, with A's generators
/// at offset 0 and B's at offset |A|.
Element embed(const Element& e, const SignaturePtr& target, std::size_t offset);

nlohmann::json to_json(const BettiTable& table);
BettiTable betti_from_json(const nlohmann::json& j);

}  // namespace sullivan
