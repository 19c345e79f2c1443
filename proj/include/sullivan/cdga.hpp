#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sullivan/algebra.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

/// A free graded-commutative algebra with a validated differential. The only
/// way to obtain one is through check_d_squared / make_cdga, so holding a
/// Cdga means d^2 = 0 has been verified.
class Cdga {
 public:
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const SignaturePtr& signature() const { return sig_; }
  [[nodiscard]] const Signature& sig() const { return *sig_; }
  [[nodiscard]] std::size_t size() const { return sig_->size(); }
  [[nodiscard]] const Element& d(std::size_t generator) const { return diff_.at(generator); }
  [[nodiscard]] const Element& d(std::string_view generator) const;
  [[nodiscard]] const std::vector<Element>& differentials() const { return diff_; }

  /// Highest degree whose basis may be enumerated. Unset for purely odd
  /// signatures without an explicit override; otherwise the explicit value
  /// or sum(odd degrees) + 2 * max(even degree).
  [[nodiscard]] std::optional<int> truncation() const { return truncation_; }
  [[nodiscard]] bool explicit_truncation() const { return explicit_truncation_; }
  /// Degree of the top exterior word (purely odd) or the truncation degree.
  [[nodiscard]] int top_degree() const;

  [[nodiscard]] Cdga renamed(std::string name) const;

  friend bool operator==(const Cdga& a, const Cdga& b);

 private:
  friend struct CdgaFactory;
  Cdga() = default;

  std::string name_;
  SignaturePtr sig_;
  std::vector<Element> diff_;
  std::optional<int> truncation_;
  bool explicit_truncation_ = false;
};

struct DSquaredViolation {
  std::size_t generator = 0;
  std::string generator_name;
  Element residue;  ///< d(d(generator)), nonzero
  [[nodiscard]] std::string message() const;
};

using CdgaCheck = std::variant<Cdga, DSquaredViolation>;

/// Default truncation: sum of odd degrees plus twice the largest even degree.
int default_truncation(const Signature& sig);

/// Validates a candidate differential. Throws ValidationError when some d(g)
/// is not homogeneous of degree |g| + 1 or is over another signature; a
/// d^2 != 0 failure is returned, naming the first failing generator.
CdgaCheck check_d_squared(std::string name, SignaturePtr sig, std::vector<Element> differential,
                          std::optional<int> truncation = std::nullopt);

/// check_d_squared, throwing ValidationError on a d^2 violation.
Cdga make_cdga(std::string name, SignaturePtr sig, std::vector<Element> differential,
               std::optional<int> truncation = std::nullopt);

/// d extended as a degree +1 derivation with d(xy) = d(x)y + (-1)^|x| x d(y).
Element apply_d(const Cdga& cdga, const Element& e);

/// Matrix of d: basis(n) -> basis(n + 1), one column per degree-n basis
/// monomial. Throws RangeError when n + 1 exceeds the truncation.
SparseExactMatrix differential_matrix(const Cdga& cdga, int n);

/// Coordinates of a homogeneous element of degree n in basis_of_degree(n).
SparseVector to_coordinates(const Cdga& cdga, const Element& e, int n);
Element from_coordinates(const Cdga& cdga, const SparseVector& v, int n);

namespace detail {
Element apply_derivation(const SignaturePtr& sig, const std::vector<Element>& diff, const Element& e);
Element apply_derivation(const SignaturePtr& sig, const std::vector<Element>& diff, const Monomial& m);
}  // namespace detail

}  // namespace sullivan
