#include "sullivan/lie.hpp"

#include <bit>
#include <cctype>
#include <set>
#include <sstream>

#include "sullivan/errors.hpp"

namespace sullivan {

namespace {

std::size_t dual_count(const std::vector<std::string>& basis, std::string_view name) {
  std::size_t n = 0;
  for (const auto& b : basis) n += b == name;
  return n;
}

}  // namespace

LiePresentation LiePresentation::make(std::string name, std::vector<std::string> basis,
                                      std::vector<Bracket> brackets) {
  LiePresentation lie;
  lie.name_ = std::move(name);
  for (const auto& b : basis) {
    if (!is_identifier(b)) throw UsageError("invalid basis name '" + b + "'");
    if (dual_count(basis, b) > 1) throw UsageError("duplicate basis element '" + b + "'");
  }
  lie.basis_ = std::move(basis);
  const std::size_t n = lie.basis_.size();

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& [i, j, v] : brackets) {
    if (i >= n || j >= n) throw UsageError("bracket index out of range");
    for (const auto& [k, c] : v) {
      if (k >= n) throw UsageError("bracket value index out of range");
      (void)c;
    }
    if (i == j) {
      if (!v.empty()) throw UsageError("[" + lie.basis_[i] + ", " + lie.basis_[i] + "] must be 0");
      continue;
    }
    const auto key = std::minmax(i, j);
    if (!seen.insert(key).second)
      throw UsageError("bracket [" + lie.basis_[key.first] + ", " + lie.basis_[key.second] + "] given twice");
    SparseVector w = i < j ? v : scale(Rational(-1), v);
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector merged;
    for (const auto& [k, c] : w) merged = axpy(c, unit_vector(k), merged);
    if (!merged.empty()) lie.constants_.emplace(key, std::move(merged));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector s = lie.bracket(unit_vector(i), lie.bracket(j, k));
        s = axpy(1, lie.bracket(unit_vector(j), lie.bracket(k, i)), s);
        s = axpy(1, lie.bracket(unit_vector(k), lie.bracket(i, j)), s);
        if (!s.empty())
          throw ValidationError("Jacobi identity fails on (" + lie.basis_[i] + ", " + lie.basis_[j] + ", " +
                                lie.basis_[k] + "): " + lie.format(s));
      }
  lie.nilpotent_ = lower_central_series(lie).nilpotent;
  return lie;
}

std::size_t LiePresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name) return i;
  throw UsageError("unknown basis element '" + std::string(name) + "'");
}

SparseVector LiePresentation::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const auto it = constants_.find(std::minmax(i, j));
  if (it == constants_.end()) return {};
  return i < j ? it->second : scale(Rational(-1), it->second);
}

SparseVector LiePresentation::bracket(const SparseVector& u, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      const auto w = bracket(i, j);
      if (!w.empty()) out = axpy(a * b, w, out);
    }
  return out;
}

std::string LiePresentation::format(const SparseVector& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag.get_str() << '*';
    os << basis_.at(k);
  }
  return os.str();
}

LiePresentation u_n_presentation(int n) {
  if (n < 2) throw RangeError("u(n) requires n >= 2");
  struct Entry {
    int i, j;
  };
  std::vector<Entry> entries;
  std::vector<std::string> names;
  for (int k = 1; k < n; ++k)
    for (int j = 1; j + k <= n; ++j) {
      entries.push_back({j + k, j});
      names.push_back("X_" + std::to_string(j + k) + "_" + std::to_string(j));
    }
  auto find = [&](int i, int j) {
    for (std::size_t a = 0; a < entries.size(); ++a)
      if (entries[a].i == i && entries[a].j == j) return a;
    throw InternalError("u(n): missing basis element");
  };
  std::vector<LiePresentation::Bracket> brackets;
  for (std::size_t p = 0; p < entries.size(); ++p)
    for (std::size_t q = p + 1; q < entries.size(); ++q) {
      const auto [i, j] = entries[p];
      const auto [s, t] = entries[q];
      if (j == s && i != t) brackets.emplace_back(p, q, SparseVector{{find(i, t), Rational(-1)}});
      else if (i == t && j != s) brackets.emplace_back(p, q, SparseVector{{find(s, j), Rational(1)}});
    }
  return LiePresentation::make("u_" + std::to_string(n), std::move(names), std::move(brackets));
}

LiePresentation abelian_lie(int k) {
  if (k < 0) throw RangeError("abelian Lie algebra requires k >= 0");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("X" + std::to_string(i));
  return LiePresentation::make("abelian_" + std::to_string(k), std::move(names), {});
}

CenterResult center(const LiePresentation& lie) {
  const std::size_t n = lie.dimension();
  // Row (b, k) of the stacked matrix holds the X_k coefficient of [X_a, X_b].
  std::vector<Triplet> entries;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, c] : lie.bracket(a, b)) entries.push_back({b * n + k, a, c});
  const auto m = SparseExactMatrix::from_triplets(n * n, n, std::move(entries));
  CenterResult out;
  out.basis = rank_exact(m).kernel_basis;
  out.dimension = out.basis.size();
  for (const auto& v : out.basis) out.rendered.push_back(lie.format(v));
  return out;
}

CentralSeries lower_central_series(const LiePresentation& lie) {
  CentralSeries out;
  const std::size_t n = lie.dimension();
  std::vector<SparseVector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vector(i));
  out.dimensions.push_back(n);
  while (!current.empty()) {
    EchelonBasis next;
    std::vector<SparseVector> spanning;
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& w : current) {
        auto v = lie.bracket(unit_vector(a), w);
        if (!v.empty() && next.insert(v)) spanning.push_back(std::move(v));
      }
    if (spanning.size() == current.size()) break;  // stabilized above 0
    out.dimensions.push_back(spanning.size());
    current = std::move(spanning);
  }
  out.nilpotent = out.dimensions.back() == 0;
  if (out.nilpotent) out.nilpotency_class = out.dimensions.size() - 1;
  return out;
}

Cdga chevalley_eilenberg(const LiePresentation& lie) {
  if (!lie.nilpotent()) throw UsageError("chevalley_eilenberg: '" + lie.name() + "' is not nilpotent");
  std::vector<std::pair<std::string, int>> gens;
  for (auto name : lie.basis()) {
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    gens.emplace_back(std::move(name), 1);
  }
  const auto sig = Signature::make(gens);
  std::vector<Element> diff(lie.dimension(), Element(sig));
  for (const auto& [ij, v] : lie.structure_constants()) {
    const Element xixj = Element::generator(sig, ij.first) * Element::generator(sig, ij.second);
    for (const auto& [k, c] : v) diff[k] -= Rational(c) * xixj;
  }
  auto checked = check_d_squared("ce_" + lie.name(), sig, std::move(diff));
  if (auto* bad = std::get_if<DSquaredViolation>(&checked))
    throw InternalError("chevalley_eilenberg: " + bad->message() + " for a Jacobi-valid presentation");
  return std::get<Cdga>(std::move(checked));
}

DualLie dual_homotopy_lie(const Cdga& cdga) {
  const auto& sig = cdga.sig();
  if (!sig.purely_odd()) throw UsageError("dual_homotopy_lie: all generators must have odd degree");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& g : sig.generators()) {
    std::string name = g.name;
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    names.push_back(std::move(name));
    degrees.push_back(g.degree - 1);
  }
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> acc;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    for (const auto& [m, c] : cdga.d(k).terms()) {
      if (std::popcount(m.odd_mask()) != 2)
        throw UsageError("dual_homotopy_lie: d(" + sig[k].name + ") = " + cdga.d(k).to_string() +
                         " is not purely quadratic");
      const auto i = static_cast<std::size_t>(std::countr_zero(m.odd_mask()));
      const auto j = static_cast<std::size_t>(63 - std::countl_zero(m.odd_mask()));
      acc[{i, j}] = axpy(Rational(-c), unit_vector(k), acc[{i, j}]);
    }
  }
  std::vector<LiePresentation::Bracket> brackets;
  for (auto& [ij, v] : acc) brackets.emplace_back(ij.first, ij.second, std::move(v));
  return {LiePresentation::make(cdga.name() + "_dual", std::move(names), std::move(brackets)), std::move(degrees)};
}

}  // namespace sullivan
