#pragma once

// Free graded-commutative algebras over Q on finitely many named generators.
//
// Odd-degree generators are exterior and live in a 64-bit mask indexed by
// signature position; even-degree generators are polynomial and carry an
// explicit exponent. Every monomial is stored in canonical word order
// (signature declaration order); the Koszul sign produced by reordering is
// absorbed into the coefficient of the owning Element.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sullivan {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kMaxGenerators = 64;

struct GeneratorSpec {
  std::string name;
  int degree = 1;
  std::size_t index = 0;

  [[nodiscard]] bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

class Signature;
using SignaturePtr = std::shared_ptr<const Signature>;

class Signature {
 public:
  /// Validates names (identifiers, unique) and degrees (>= 1).
  static SignaturePtr make(const std::vector<std::pair<std::string, int>>& generators);

  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] bool empty() const { return gens_.empty(); }
  [[nodiscard]] const GeneratorSpec& operator[](std::size_t i) const { return gens_[i]; }
  [[nodiscard]] const std::vector<GeneratorSpec>& generators() const { return gens_; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
  [[nodiscard]] std::size_t index_of(std::string_view name) const;  // throws UsageError

  [[nodiscard]] std::uint64_t odd_mask() const { return odd_mask_; }
  [[nodiscard]] bool has_even() const { return odd_mask_ != full_mask(); }
  [[nodiscard]] bool purely_odd() const { return !has_even(); }
  [[nodiscard]] int sum_odd_degrees() const;
  [[nodiscard]] int max_even_degree() const;  // 0 when there is none

  friend bool operator==(const Signature& a, const Signature& b) { return a.gens_ == b.gens_; }

 private:
  Signature() = default;
  [[nodiscard]] std::uint64_t full_mask() const {
    return gens_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << gens_.size()) - 1);
  }

  std::vector<GeneratorSpec> gens_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::uint64_t odd_mask_ = 0;
};

bool is_identifier(std::string_view s);
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

/// A product of generators in canonical order. The exponent vector alone
/// determines it: odd generators are bits of odd_mask(), even generators
/// appear in even_powers() as (index, exponent > 0) sorted by index.
class Monomial {
 public:
  using EvenPower = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;  // the unit

  static Monomial generator(const Signature& sig, std::size_t index);
  static Monomial from_exponents(const Signature& sig, const std::vector<unsigned>& exponents);

  [[nodiscard]] std::uint64_t odd_mask() const { return odd_; }
  [[nodiscard]] const std::vector<EvenPower>& even_powers() const { return even_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] bool is_unit() const { return odd_ == 0 && even_.empty(); }
  [[nodiscard]] unsigned exponent(std::size_t index) const;
  [[nodiscard]] unsigned word_length() const;
  [[nodiscard]] std::vector<unsigned> exponents(std::size_t n_generators) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded order: degree ascending, then descending lexicographic order of
  /// exponent vectors (so x1x2 precedes x1x3 precedes x2x3).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] std::string to_string(const Signature& sig) const;

 private:
  friend struct MonomialAccess;

  std::uint64_t odd_ = 0;
  std::vector<EvenPower> even_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

/// Product of two monomials: nullopt when an odd generator occurs in both,
/// otherwise the canonical product with sign (-1)^t, t the number of odd
/// transpositions needed to merge the words. Throws UsageError when either
/// monomial does not belong to sig.
std::optional<SignedMonomial> mono_mul(const Signature& sig, const Monomial& a, const Monomial& b);

namespace detail {
std::optional<SignedMonomial> mono_mul_unchecked(const Monomial& a, const Monomial& b);
bool belongs_to(const Signature& sig, const Monomial& m);
}  // namespace detail

class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Element(SignaturePtr sig);

  static Element unit(SignaturePtr sig);
  static Element generator(SignaturePtr sig, std::size_t index);
  static Element generator(SignaturePtr sig, std::string_view name);
  static Element from_monomial(SignaturePtr sig, Monomial m, Rational coefficient = 1);

  [[nodiscard]] const SignaturePtr& signature() const { return sig_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Degree shared by all terms; nullopt for zero or mixed elements.
  [[nodiscard]] std::optional<int> homogeneous_degree() const;
  /// True for zero and for single-degree elements.
  [[nodiscard]] bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b);

  /// Parseable rendering, e.g. "x1*x2 - b*x3", "-1/2*a*t*t", "0".
  [[nodiscard]] std::string to_string() const;

 private:
  void require_same(const Element& other) const;

  SignaturePtr sig_;
  Terms terms_;
};

Element elem_mul(const Element& a, const Element& b);

/// All monomials of total degree n, in descending lexicographic order of
/// exponent vectors.
std::vector<Monomial> basis_of_degree(const Signature& sig, int n);

}  // namespace sullivan
