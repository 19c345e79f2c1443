#include "sullivan/algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "sullivan/errors.hpp"

namespace sullivan {

struct MonomialAccess {
  static Monomial make(std::uint64_t odd, std::vector<Monomial::EvenPower> even, int degree) {
    Monomial m;
    m.odd_ = odd;
    m.even_ = std::move(even);
    m.degree_ = degree;
    return m;
  }
};

// --- Signature --------------------------------------------------------------

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

SignaturePtr Signature::make(const std::vector<std::pair<std::string, int>>& generators) {
  if (generators.size() > kMaxGenerators) {
    throw UsageError("signature has " + std::to_string(generators.size()) +
                     " generators; at most 64 are supported");
  }
  std::shared_ptr<Signature> sig(new Signature());
  for (const auto& [name, degree] : generators) {
    if (!is_identifier(name)) throw UsageError("invalid generator name '" + name + "'");
    if (degree < 1) {
      throw UsageError("generator '" + name + "' has degree " + std::to_string(degree) +
                       "; degrees must be >= 1");
    }
    const std::size_t index = sig->gens_.size();
    if (!sig->by_name_.emplace(name, index).second) {
      throw UsageError("duplicate generator '" + name + "'");
    }
    sig->gens_.push_back({name, degree, index});
    if (degree % 2 != 0) sig->odd_mask_ |= std::uint64_t{1} << index;
  }
  return sig;
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UsageError("unknown generator '" + std::string(name) + "'");
}

int Signature::sum_odd_degrees() const {
  int s = 0;
  for (const auto& g : gens_)
    if (g.odd()) s += g.degree;
  return s;
}

int Signature::max_even_degree() const {
  int m = 0;
  for (const auto& g : gens_)
    if (!g.odd()) m = std::max(m, g.degree);
  return m;
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::generator(const Signature& sig, std::size_t index) {
  if (index >= sig.size()) throw UsageError("generator index out of range");
  const auto& g = sig[index];
  if (g.odd()) return MonomialAccess::make(std::uint64_t{1} << index, {}, g.degree);
  return MonomialAccess::make(0, {{static_cast<std::uint32_t>(index), 1u}}, g.degree);
}

Monomial Monomial::from_exponents(const Signature& sig, const std::vector<unsigned>& exponents) {
  if (exponents.size() != sig.size()) throw UsageError("exponent vector length mismatch");
  std::uint64_t odd = 0;
  std::vector<EvenPower> even;
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const unsigned e = exponents[i];
    if (e == 0) continue;
    if (sig[i].odd()) {
      if (e > 1) throw UsageError("odd generator '" + sig[i].name + "' with exponent > 1");
      odd |= std::uint64_t{1} << i;
    } else {
      even.emplace_back(static_cast<std::uint32_t>(i), e);
    }
    degree += static_cast<int>(e) * sig[i].degree;
  }
  return MonomialAccess::make(odd, std::move(even), degree);
}

unsigned Monomial::exponent(std::size_t index) const {
  if (index < 64 && ((odd_ >> index) & 1u)) return 1;
  for (const auto& [i, e] : even_)
    if (i == index) return e;
  return 0;
}

unsigned Monomial::word_length() const {
  unsigned n = static_cast<unsigned>(std::popcount(odd_));
  for (const auto& p : even_) n += p.second;
  return n;
}

std::vector<unsigned> Monomial::exponents(std::size_t n_generators) const {
  std::vector<unsigned> out(n_generators, 0);
  for (std::size_t i = 0; i < n_generators && i < 64; ++i)
    if ((odd_ >> i) & 1u) out[i] = 1;
  for (const auto& [i, e] : even_)
    if (i < n_generators) out[i] = e;
  return out;
}

namespace {

// (index, exponent) pairs in index order.
std::vector<Monomial::EvenPower> entries(const Monomial& m) {
  std::vector<Monomial::EvenPower> out;
  std::uint64_t bits = m.odd_mask();
  auto ev = m.even_powers().begin();
  while (bits != 0 || ev != m.even_powers().end()) {
    const std::uint32_t bit_index = bits ? static_cast<std::uint32_t>(std::countr_zero(bits)) : 64u;
    if (ev != m.even_powers().end() && ev->first < bit_index) {
      out.push_back(*ev++);
    } else {
      out.emplace_back(bit_index, 1u);
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (a.even_.empty() && b.even_.empty()) {
    const std::uint64_t diff = a.odd_ ^ b.odd_;
    if (diff == 0) return std::strong_ordering::equal;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.odd_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto ea = entries(a);
  const auto eb = entries(b);
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first)
      return ea[i].first < eb[i].first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ea[i].second != eb[i].second)
      return ea[i].second > eb[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ea.size() == eb.size()) return std::strong_ordering::equal;
  return ea.size() > eb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t Monomial::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(odd_);
  for (const auto& [i, e] : even_) {
    h ^= std::hash<std::uint64_t>{}((std::uint64_t{i} << 32) | e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string(const Signature& sig) const {
  if (is_unit()) return "1";
  std::string out;
  for (const auto& [i, e] : entries(*this)) {
    for (unsigned k = 0; k < e; ++k) {
      if (!out.empty()) out += '*';
      out += i < sig.size() ? sig[i].name : ("g" + std::to_string(i));
    }
  }
  return out;
}

namespace detail {

bool belongs_to(const Signature& sig, const Monomial& m) {
  if ((m.odd_mask() & ~sig.odd_mask()) != 0) return false;
  int degree = 0;
  for (std::uint64_t bits = m.odd_mask(); bits; bits &= bits - 1)
    degree += sig[static_cast<std::size_t>(std::countr_zero(bits))].degree;
  for (const auto& [i, e] : m.even_powers()) {
    if (i >= sig.size() || sig[i].odd()) return false;
    degree += static_cast<int>(e) * sig[i].degree;
  }
  return degree == m.degree();
}

std::optional<SignedMonomial> mono_mul_unchecked(const Monomial& a, const Monomial& b) {
  const std::uint64_t ao = a.odd_mask();
  const std::uint64_t bo = b.odd_mask();
  if (ao & bo) return std::nullopt;
  // Each odd generator j of b moves left past the odd generators of a with
  // larger index.
  int transpositions = 0;
  for (std::uint64_t bits = bo; bits; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    const std::uint64_t above = ~((std::uint64_t{2} << j) - 1);
    transpositions += std::popcount(ao & above);
  }
  std::vector<Monomial::EvenPower> even;
  const auto& ae = a.even_powers();
  const auto& be = b.even_powers();
  if (!ae.empty() || !be.empty()) {
    even.reserve(ae.size() + be.size());
    std::size_t i = 0, k = 0;
    while (i < ae.size() || k < be.size()) {
      if (k == be.size() || (i < ae.size() && ae[i].first < be[k].first)) {
        even.push_back(ae[i++]);
      } else if (i == ae.size() || be[k].first < ae[i].first) {
        even.push_back(be[k++]);
      } else {
        even.emplace_back(ae[i].first, ae[i].second + be[k].second);
        ++i;
        ++k;
      }
    }
  }
  return SignedMonomial{(transpositions % 2) ? -1 : 1,
                        MonomialAccess::make(ao | bo, std::move(even), a.degree() + b.degree())};
}

}  // namespace detail

std::optional<SignedMonomial> mono_mul(const Signature& sig, const Monomial& a, const Monomial& b) {
  if (!detail::belongs_to(sig, a) || !detail::belongs_to(sig, b))
    throw UsageError("mono_mul: monomial does not belong to the signature");
  return detail::mono_mul_unchecked(a, b);
}

// --- Element ----------------------------------------------------------------

Element::Element(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw UsageError("element requires a signature");
}

Element Element::unit(SignaturePtr sig) { return from_monomial(std::move(sig), Monomial{}); }

Element Element::generator(SignaturePtr sig, std::size_t index) {
  Monomial m = Monomial::generator(*sig, index);
  return from_monomial(std::move(sig), std::move(m));
}

Element Element::generator(SignaturePtr sig, std::string_view name) {
  const std::size_t index = sig->index_of(name);
  return generator(std::move(sig), index);
}

Element Element::from_monomial(SignaturePtr sig, Monomial m, Rational coefficient) {
  Element e(std::move(sig));
  if (!detail::belongs_to(*e.sig_, m)) throw UsageError("monomial does not belong to the signature");
  e.add_term(m, coefficient);
  return e;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Terms are ordered by degree first.
  const int lo = terms_.begin()->first.degree();
  const int hi = terms_.rbegin()->first.degree();
  if (lo != hi) return std::nullopt;
  return lo;
}

bool Element::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::require_same(const Element& other) const {
  if (!same_signature(sig_, other.sig_)) throw UsageError("elements over different signatures");
}

Element& Element::operator+=(const Element& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return elem_mul(a, b); }

bool operator==(const Element& a, const Element& b) {
  return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << m.to_string(*sig_);
    }
  }
  return os.str();
}

Element elem_mul(const Element& a, const Element& b) {
  if (!same_signature(a.signature(), b.signature()))
    throw UsageError("elem_mul: elements over different signatures");
  Element out(a.signature());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto p = detail::mono_mul_unchecked(ma, mb);
      if (!p) continue;
      Rational c = ca * cb;
      if (p->sign < 0) c = -c;
      out.add_term(p->monomial, c);
    }
  }
  return out;
}

// --- basis ------------------------------------------------------------------

std::vector<Monomial> basis_of_degree(const Signature& sig, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  const std::size_t g = sig.size();
  // Largest degree reachable from generators i.. when no even generator
  // remains; -1 marks "unbounded" (an even generator is still available).
  std::vector<int> reach(g + 1, 0);
  for (std::size_t i = g; i-- > 0;) {
    if (reach[i + 1] < 0 || !sig[i].odd()) reach[i] = -1;
    else reach[i] = reach[i + 1] + sig[i].degree;
  }
  std::vector<unsigned> exps(g, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (remaining == 0) {
      out.push_back(Monomial::from_exponents(sig, exps));
      return;
    }
    if (i == g) return;
    if (reach[i] >= 0 && remaining > reach[i]) return;
    const int d = sig[i].degree;
    const int max_e = sig[i].odd() ? std::min(1, remaining / d) : remaining / d;
    for (int e = max_e; e >= 0; --e) {
      exps[i] = static_cast<unsigned>(e);
      rec(i + 1, remaining - e * d);
    }
    exps[i] = 0;
  };
  rec(0, n);
  return out;
}

}  // namespace sullivan
