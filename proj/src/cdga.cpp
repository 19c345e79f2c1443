#include "sullivan/cdga.hpp"

#include <bit>
#include <unordered_map>

#include "sullivan/errors.hpp"

namespace sullivan {

struct CdgaFactory {
  static Cdga make(std::string name, SignaturePtr sig, std::vector<Element> diff, std::optional<int> truncation,
                   bool explicit_truncation) {
    Cdga c;
    c.name_ = std::move(name);
    c.sig_ = std::move(sig);
    c.diff_ = std::move(diff);
    c.truncation_ = truncation;
    c.explicit_truncation_ = explicit_truncation;
    return c;
  }
};

const Element& Cdga::d(std::string_view generator) const { return diff_.at(sig_->index_of(generator)); }

int Cdga::top_degree() const {
  if (truncation_) return *truncation_;
  int total = 0;
  for (const auto& g : sig_->generators()) total += g.degree;
  return total;
}

Cdga Cdga::renamed(std::string name) const {
  Cdga c = *this;
  c.name_ = std::move(name);
  return c;
}

bool operator==(const Cdga& a, const Cdga& b) {
  return a.name_ == b.name_ && same_signature(a.sig_, b.sig_) && a.diff_ == b.diff_ &&
         a.truncation_ == b.truncation_;
}

std::string DSquaredViolation::message() const {
  return "d^2(" + generator_name + ") = " + residue.to_string() + " != 0";
}

int default_truncation(const Signature& sig) { return sig.sum_odd_degrees() + 2 * sig.max_even_degree(); }

namespace detail {

Element apply_derivation(const SignaturePtr& sig, const std::vector<Element>& diff, const Monomial& m) {
  Element out(sig);
  // Walk the canonical word; the prefix parity is the number of odd
  // generators already passed. For g^e (g even) the derivative is
  // e * g^(e-1) * d(g), and g^(e-1) commutes with everything.
  const auto exps = m.exponents(sig->size());
  std::vector<unsigned> prefix(sig->size(), 0);
  int odd_before = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    const Element& dg = diff[i];
    if (!dg.is_zero()) {
      std::vector<unsigned> rest = exps;
      for (std::size_t j = 0; j <= i; ++j) rest[j] = (j == i) ? exps[i] - 1 : 0;
      const Monomial pre = Monomial::from_exponents(*sig, prefix);
      const Monomial post = Monomial::from_exponents(*sig, rest);
      Rational factor = exps[i];
      if (odd_before % 2) factor = -factor;
      for (const auto& [u, c] : dg.terms()) {
        auto left = mono_mul_unchecked(pre, u);
        if (!left) continue;
        auto full = mono_mul_unchecked(left->monomial, post);
        if (!full) continue;
        Rational coef = factor * c;
        if (left->sign * full->sign < 0) coef = -coef;
        out.add_term(full->monomial, coef);
      }
    }
    prefix[i] = exps[i];
    if ((*sig)[i].odd()) ++odd_before;
  }
  return out;
}

Element apply_derivation(const SignaturePtr& sig, const std::vector<Element>& diff, const Element& e) {
  Element out(sig);
  for (const auto& [m, c] : e.terms()) {
    Element dm = apply_derivation(sig, diff, m);
    out += c * dm;
  }
  return out;
}

}  // namespace detail

CdgaCheck check_d_squared(std::string name, SignaturePtr sig, std::vector<Element> differential,
                          std::optional<int> truncation) {
  if (!sig) throw UsageError("check_d_squared: missing signature");
  if (differential.size() != sig->size())
    throw ValidationError("differential must assign a value to each of the " + std::to_string(sig->size()) +
                          " generators");
  for (std::size_t i = 0; i < sig->size(); ++i) {
    const auto& dg = differential[i];
    const auto& g = (*sig)[i];
    if (!same_signature(dg.signature(), sig))
      throw ValidationError("d(" + g.name + ") is over a different signature");
    if (dg.is_zero()) continue;
    const auto deg = dg.homogeneous_degree();
    if (!deg || *deg != g.degree + 1)
      throw ValidationError("d(" + g.name + ") = " + dg.to_string() + " is not homogeneous of degree " +
                            std::to_string(g.degree + 1));
  }
  if (truncation && *truncation < 1) throw RangeError("truncation degree must be >= 1");
  const bool explicit_trunc = truncation.has_value();
  if (!truncation && sig->has_even()) truncation = default_truncation(*sig);

  for (std::size_t i = 0; i < sig->size(); ++i) {
    Element dd = detail::apply_derivation(sig, differential, differential[i]);
    if (!dd.is_zero()) return DSquaredViolation{i, (*sig)[i].name, std::move(dd)};
  }
  return CdgaFactory::make(std::move(name), std::move(sig), std::move(differential), truncation, explicit_trunc);
}

Cdga make_cdga(std::string name, SignaturePtr sig, std::vector<Element> differential,
               std::optional<int> truncation) {
  auto r = check_d_squared(std::move(name), std::move(sig), std::move(differential), truncation);
  if (auto* v = std::get_if<DSquaredViolation>(&r)) throw ValidationError(v->message());
  return std::get<Cdga>(std::move(r));
}

Element apply_d(const Cdga& cdga, const Element& e) {
  if (!same_signature(e.signature(), cdga.signature())) throw UsageError("apply_d: element over another signature");
  return detail::apply_derivation(cdga.signature(), cdga.differentials(), e);
}

SparseExactMatrix differential_matrix(const Cdga& cdga, int n) {
  if (n < 0) throw RangeError("differential_matrix: negative degree");
  if (cdga.truncation() && n + 1 > *cdga.truncation())
    throw RangeError("differential_matrix: degree " + std::to_string(n + 1) + " exceeds truncation " +
                     std::to_string(*cdga.truncation()));
  const auto& sig = cdga.sig();
  const auto source = basis_of_degree(sig, n);
  const auto target = basis_of_degree(sig, n + 1);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  std::vector<Triplet> entries;
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Element image = detail::apply_derivation(cdga.signature(), cdga.differentials(), source[j]);
    for (const auto& [m, c] : image.terms()) entries.push_back({index.at(m), j, c});
  }
  return SparseExactMatrix::from_triplets(target.size(), source.size(), std::move(entries));
}

SparseVector to_coordinates(const Cdga& cdga, const Element& e, int n) {
  if (!same_signature(e.signature(), cdga.signature())) throw UsageError("element over another signature");
  const auto basis = basis_of_degree(cdga.sig(), n);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  SparseVector v;
  for (const auto& [m, c] : e.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw UsageError("element is not homogeneous of degree " + std::to_string(n));
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Element from_coordinates(const Cdga& cdga, const SparseVector& v, int n) {
  const auto basis = basis_of_degree(cdga.sig(), n);
  Element e(cdga.signature());
  for (const auto& [i, c] : v) e.add_term(basis.at(i), c);
  return e;
}

}  // namespace sullivan
