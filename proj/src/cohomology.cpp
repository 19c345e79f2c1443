#include "sullivan/cohomology.hpp"

#include <map>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "sullivan/errors.hpp"

namespace sullivan {

namespace {

// Highest degree reported by betti() and whether the table is truncated.
std::pair<int, std::optional<int>> reported_range(const Cdga& cdga) {
  int full = 0;
  for (const auto& g : cdga.sig().generators()) full += g.degree;
  if (const auto t = cdga.truncation(); t && (cdga.sig().has_even() || *t <= full)) {
    return {*t - 1, t};
  }
  return {full, std::nullopt};
}

std::string join_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, label] : terms) {
    if (c == 0) continue;
    const bool neg = c < 0;
    Integer mag = neg ? Integer(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (mag != 1) os << mag.get_str() << '*';
    os << '[' << label << ']';
    first = false;
  }
  return os.str();
}

// Scales a rational vector to a primitive integer vector whose first nonzero
// entry is positive.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    out.emplace_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  int sign = 1;
  for (const auto& x : out)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  if (g == 0) return out;
  for (auto& x : out) x = sign * x / g;
  return out;
}

}  // namespace

BettiTable betti(const Cdga& cdga, const CohomologyOptions& options) {
  const auto [last, truncated] = reported_range(cdga);
  BettiTable table;
  table.truncated_at = truncated;
  if (last < 0) return table;

  const std::size_t count = static_cast<std::size_t>(last) + 1;
  std::vector<std::size_t> ranks(count, 0);
  std::vector<std::size_t> dims(count, 0);
  detail::parallel_for(count, options.jobs, [&](std::size_t n) {
    const auto m = differential_matrix(cdga, static_cast<int>(n));
    dims[n] = m.cols();
    if (options.method == RankMethod::exact) ranks[n] = rank(m);
    else ranks[n] = rank_confirmed(m, options.primes).rank;
  });
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t prev = n ? ranks[n - 1] : 0;
    if (ranks[n] + prev > dims[n]) throw InternalError("rank exceeds dimension in degree " + std::to_string(n));
    table.per_degree.push_back(dims[n] - ranks[n] - prev);
    table.total += table.per_degree.back();
  }
  return table;
}

std::vector<Element> representatives(const Cdga& cdga, int n) {
  if (n < 0) return {};
  const auto [last, truncated] = reported_range(cdga);
  if (n > last) {
    if (truncated) throw RangeError("degree " + std::to_string(n) + " is beyond the truncation window");
    return {};
  }
  const auto cocycles = rank_exact(differential_matrix(cdga, n)).kernel_basis;
  std::vector<SparseVector> boundaries;
  if (n > 0) boundaries = differential_matrix(cdga, n - 1).columns();
  const auto reps = quotient_representatives(cocycles, boundaries);
  std::vector<Element> out;
  out.reserve(reps.size());
  for (const auto& v : reps) out.push_back(from_coordinates(cdga, v, n));
  return out;
}

ClassVerdict verify_classes(const Cdga& cdga, std::span<const Element> elems) {
  ClassVerdict verdict;
  const auto table = betti(cdga);
  verdict.classes_per_degree.assign(table.per_degree.size(), 0);
  const int last = static_cast<int>(table.per_degree.size()) - 1;

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Element& e = elems[i];
    if (!same_signature(e.signature(), cdga.signature())) throw UsageError("verify_classes: element over another signature");
    if (e.is_zero()) {
      if (verdict.independent) {
        verdict.independent = false;
        verdict.dependence_witness = "element " + std::to_string(i) + " is zero";
      }
      continue;
    }
    const auto deg = e.homogeneous_degree();
    if (!deg) throw UsageError("verify_classes: element '" + e.to_string() + "' is not homogeneous");
    if (*deg > last) throw RangeError("verify_classes: degree " + std::to_string(*deg) + " outside the computed range");
    const Element de = apply_d(cdga, e);
    if (!de.is_zero()) {
      if (verdict.closed) {
        verdict.closed = false;
        verdict.closed_witness = "d(" + e.to_string() + ") = " + de.to_string();
      }
      continue;
    }
    by_degree[*deg].push_back(i);
  }

  for (const auto& [n, idx] : by_degree) {
    std::vector<SparseVector> boundaries;
    if (n > 0) boundaries = differential_matrix(cdga, n - 1).columns();
    EchelonBasis span;
    for (const auto& b : boundaries) span.insert(b);
    std::vector<SparseVector> vecs;
    std::size_t independent = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      vecs.push_back(to_coordinates(cdga, elems[idx[k]], n));
      if (span.insert(vecs.back())) {
        ++independent;
        continue;
      }
      if (!verdict.independent) continue;
      verdict.independent = false;
      // Witness: a relation among the first k+1 classes modulo boundaries.
      std::vector<SparseVector> cols = vecs;
      cols.insert(cols.end(), boundaries.begin(), boundaries.end());
      const auto basis_size = basis_of_degree(cdga.sig(), n).size();
      const auto kernel = rank_exact(SparseExactMatrix::from_columns(basis_size, cols)).kernel_basis;
      for (const auto& kv : kernel) {
        std::vector<Rational> coeffs(vecs.size(), Rational(0));
        bool touches = false;
        for (const auto& [c, v] : kv)
          if (c < vecs.size()) {
            coeffs[c] = v;
            touches = true;
          }
        if (!touches) continue;
        const auto ints = primitive(coeffs);
        std::vector<std::pair<Integer, std::string>> terms;
        for (std::size_t j = 0; j < ints.size(); ++j) terms.emplace_back(ints[j], elems[idx[j]].to_string());
        verdict.dependence_witness = join_terms(terms) + " = 0 in H^" + std::to_string(n);
        break;
      }
    }
    verdict.classes_per_degree[static_cast<std::size_t>(n)] = independent;
  }

  for (std::size_t n = 0; n < table.per_degree.size(); ++n) {
    if (verdict.classes_per_degree[n] < table.per_degree[n]) {
      verdict.spanning = false;
      verdict.spanning_witness = "degree " + std::to_string(n) + ": " + std::to_string(verdict.classes_per_degree[n]) +
                                 " independent classes, b_" + std::to_string(n) + " = " +
                                 std::to_string(table.per_degree[n]);
      break;
    }
  }
  return verdict;
}

Element embed(const Element& e, const SignaturePtr& target, std::size_t offset) {
  const auto& src = *e.signature();
  if (offset + src.size() > target->size()) throw UsageError("embed: target signature too small");
  Element out(target);
  for (const auto& [m, c] : e.terms()) {
    std::vector<unsigned> exps(target->size(), 0);
    const auto local = m.exponents(src.size());
    for (std::size_t i = 0; i < local.size(); ++i) exps[offset + i] = local[i];
    out.add_term(Monomial::from_exponents(*target, exps), c);
  }
  return out;
}

Cdga tensor_product(const Cdga& a, const Cdga& b, RenamePolicy policy) {
  std::set<std::string> left;
  for (const auto& g : a.sig().generators()) left.insert(g.name);
  bool clash = false;
  for (const auto& g : b.sig().generators()) clash = clash || left.count(g.name) > 0;
  if (clash && policy == RenamePolicy::strict) throw UsageError("tensor_product: generator names clash");
  const std::string sa = clash ? "_1" : "";
  const std::string sb = clash ? "_2" : "";
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& g : a.sig().generators()) gens.emplace_back(g.name + sa, g.degree);
  for (const auto& g : b.sig().generators()) gens.emplace_back(g.name + sb, g.degree);
  SignaturePtr sig;
  try {
    sig = Signature::make(gens);
  } catch (const UsageError& e) {
    throw UsageError(std::string("tensor_product: ") + e.what());
  }
  std::vector<Element> diff;
  for (const auto& dg : a.differentials()) diff.push_back(embed(dg, sig, 0));
  for (const auto& dg : b.differentials()) diff.push_back(embed(dg, sig, a.size()));
  return make_cdga(a.name() + "_x_" + b.name(), sig, std::move(diff));
}

nlohmann::json to_json(const BettiTable& table) {
  nlohmann::json j;
  j["per_degree"] = table.per_degree;
  j["total"] = table.total;
  j["truncated_at"] = table.truncated_at ? nlohmann::json(*table.truncated_at) : nlohmann::json(nullptr);
  return j;
}

BettiTable betti_from_json(const nlohmann::json& j) {
  BettiTable t;
  t.per_degree = j.at("per_degree").get<std::vector<std::size_t>>();
  t.total = j.at("total").get<std::size_t>();
  if (!j.at("truncated_at").is_null()) t.truncated_at = j.at("truncated_at").get<int>();
  return t;
}

}  // namespace sullivan
