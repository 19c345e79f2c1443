#include "sullivan/models.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "sullivan/errors.hpp"

namespace sullivan {

namespace {

std::string xij(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }

// Rewrites e over `target`, sending generator s to map[s]. Terms touching an
// unmapped generator are dropped. The map must preserve order.
Element remap(const Element& e, const SignaturePtr& target, const std::vector<std::optional<std::size_t>>& map) {
  Element out(target);
  const std::size_t n = e.signature()->size();
  for (const auto& [m, c] : e.terms()) {
    const auto exps = m.exponents(n);
    std::vector<unsigned> t(target->size(), 0);
    bool keep = true;
    for (std::size_t s = 0; s < n && keep; ++s) {
      if (exps[s] == 0) continue;
      if (!map[s]) keep = false;
      else t[*map[s]] = exps[s];
    }
    if (keep) out.add_term(Monomial::from_exponents(*target, t), c);
  }
  return out;
}

// Sub-CDGA (or quotient) on the generators selected by `keep`.
Cdga restrict_to(const Cdga& cdga, const std::vector<bool>& keep, std::string name) {
  std::vector<std::pair<std::string, int>> gens;
  std::vector<std::optional<std::size_t>> map(cdga.size());
  for (std::size_t i = 0; i < cdga.size(); ++i) {
    if (!keep[i]) continue;
    map[i] = gens.size();
    gens.emplace_back(cdga.sig()[i].name, cdga.sig()[i].degree);
  }
  const auto sig = Signature::make(gens);
  std::vector<Element> diff;
  for (std::size_t i = 0; i < cdga.size(); ++i)
    if (keep[i]) diff.push_back(remap(cdga.d(i), sig, map));
  return make_cdga(std::move(name), sig, std::move(diff));
}

}  // namespace

Cdga upper_tri_model(int n) {
  if (n < 2) throw RangeError("upper_tri_model requires n >= 2");
  std::vector<std::pair<std::string, int>> gens;
  for (int k = 1; k < n; ++k)
    for (int j = 1; j + k <= n; ++j) gens.emplace_back(xij(j + k, j), 1);
  if (gens.size() > kMaxGenerators) throw RangeError("upper_tri_model: too many generators");
  const auto sig = Signature::make(gens);
  std::vector<Element> diff;
  for (const auto& [name, deg] : gens) {
    (void)deg;
    const auto pos = name.find('_', 2);
    const int i = std::stoi(name.substr(2, pos - 2));
    const int j = std::stoi(name.substr(pos + 1));
    Element d(sig);
    for (int l = j + 1; l < i; ++l) d -= Element::generator(sig, xij(l, j)) * Element::generator(sig, xij(i, l));
    diff.push_back(std::move(d));
  }
  return make_cdga("upper_tri_" + std::to_string(n), sig, std::move(diff));
}

Cdga xr_model(int r) {
  if (r < 0) throw RangeError("xr_model requires r >= 0");
  if (r + 2 > static_cast<int>(kMaxGenerators)) throw RangeError("xr_model: too many generators");
  std::vector<std::pair<std::string, int>> gens{{"a", 1}, {"b", 1}};
  for (int i = 1; i <= r; ++i) gens.emplace_back("x" + std::to_string(i), 1);
  const auto sig = Signature::make(gens);
  const Element a = Element::generator(sig, 0);
  std::vector<Element> diff(2, Element(sig));
  for (int i = 1; i <= r; ++i)
    diff.push_back(i == 1 ? a * Element::generator(sig, 1) : a * Element::generator(sig, std::size_t(i)));
  return make_cdga("xr_" + std::to_string(r), sig, std::move(diff));
}

Cdga torus_model(int k) {
  if (k < 0 || k > static_cast<int>(kMaxGenerators)) throw RangeError("torus_model requires 0 <= k <= 64");
  std::vector<std::pair<std::string, int>> gens;
  for (int i = 1; i <= k; ++i) gens.emplace_back("x" + std::to_string(i), 1);
  const auto sig = Signature::make(gens);
  return make_cdga("torus_" + std::to_string(k), sig, std::vector<Element>(gens.size(), Element(sig)));
}

FibrationTriple split_at_k(int n, int k) {
  if (n < 2 || k < 2 || k > n) throw RangeError("split_at_k requires 2 <= k <= n");
  Cdga total = upper_tri_model(n);
  std::vector<bool> in_base, in_fiber;
  std::vector<std::string> base_names, fiber_names;
  for (int kk = 1; kk < n; ++kk)
    for (int j = 1; j + kk <= n; ++j) {
      const bool base = kk < k - 1;
      in_base.push_back(base);
      in_fiber.push_back(!base);
      (base ? base_names : fiber_names).push_back(xij(j + kk, j));
    }
  const std::string suffix = std::to_string(n) + "_" + std::to_string(k);
  Cdga base = restrict_to(total, in_base, "split_base_" + suffix);
  // The base is a sub-CDGA: restricting must not have dropped any term.
  for (std::size_t i = 0, b = 0; i < total.size(); ++i) {
    if (!in_base[i]) continue;
    if (base.d(b).size() != total.d(i).size()) throw InternalError("split_at_k: base is not closed under d");
    ++b;
  }
  Cdga fiber = restrict_to(total, in_fiber, "split_fiber_" + suffix);
  return {std::move(base), std::move(total), std::move(fiber), std::move(base_names), std::move(fiber_names)};
}

Cdga degree_shift(const Cdga& cdga, int kappa) {
  if (kappa < 0) throw RangeError("degree_shift requires kappa >= 0");
  static const std::regex pattern(R"(x_(\d+)_(\d+))");
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& g : cdga.sig().generators()) {
    std::smatch m;
    if (!std::regex_match(g.name, m, pattern))
      throw UsageError("degree_shift: generator '" + g.name + "' is not of the form x_i_j");
    const long i = std::stol(m[1].str());
    const long j = std::stol(m[2].str());
    if (i <= j) throw UsageError("degree_shift: generator '" + g.name + "' needs i > j");
    const long deg = (i - j) * 2L * kappa + 1;
    if (deg > 1'000'000) throw RangeError("degree_shift: degree too large");
    gens.emplace_back(g.name, static_cast<int>(deg));
  }
  const auto sig = Signature::make(gens);
  std::vector<std::optional<std::size_t>> map(cdga.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  std::vector<Element> diff;
  for (const auto& dg : cdga.differentials()) diff.push_back(remap(dg, sig, map));
  return make_cdga(kappa == 0 ? cdga.name() : cdga.name() + "_shift_" + std::to_string(kappa), sig, std::move(diff));
}

Cdga borel_twist(const Cdga& cdga, std::string_view generator, std::string t_name, std::optional<int> truncation) {
  const std::size_t g = cdga.sig().index_of(generator);
  const int tdeg = cdga.sig()[g].degree + 1;
  if (tdeg % 2 != 0) throw UsageError("borel_twist: |" + std::string(generator) + "| + 1 must be even");
  if (cdga.sig().find(t_name)) throw UsageError("borel_twist: generator '" + t_name + "' already exists");
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& s : cdga.sig().generators()) gens.emplace_back(s.name, s.degree);
  gens.emplace_back(t_name, tdeg);
  const auto sig = Signature::make(gens);
  std::vector<Element> diff;
  for (const auto& dg : cdga.differentials()) diff.push_back(embed(dg, sig, 0));
  diff[g] += Element::generator(sig, cdga.size());
  diff.emplace_back(sig);
  return make_cdga(cdga.name() + "_borel_" + std::string(generator), sig, std::move(diff), truncation);
}

WindowComparison compare_window(const Cdga& model, const Cdga& reference, const CohomologyOptions& options) {
  if (!model.truncation()) throw UsageError("compare_window: model is not truncated");
  WindowComparison out;
  out.window_max = *model.truncation() - 2;
  const auto a = betti(model, options);
  const auto b = betti(reference, options);
  if (b.truncated_at && static_cast<int>(b.per_degree.size()) <= out.window_max)
    throw RangeError("compare_window: reference truncation is below the comparison window");
  for (int n = 0; n <= out.window_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    out.model.push_back(idx < a.per_degree.size() ? a.per_degree[idx] : 0);
    out.reference.push_back(idx < b.per_degree.size() ? b.per_degree[idx] : 0);
  }
  out.agree = out.model == out.reference;
  return out;
}

ObstructionReport principal_obstruction(const Cdga& cdga, const std::vector<std::string>& fiber_gens, int rank,
                                        int twist_degree) {
  if (rank < 1) throw RangeError("principal_obstruction requires rank >= 1");
  if (twist_degree < 1) throw RangeError("principal_obstruction requires twist degree >= 1");
  const auto& sig = cdga.sig();
  for (const auto& f : fiber_gens) (void)sig.index_of(f);
  if (sig.size() + static_cast<std::size_t>(rank) > kMaxGenerators)
    throw RangeError("principal_obstruction: too many generators");

  std::vector<std::pair<std::string, int>> gens;
  for (const auto& s : sig.generators()) gens.emplace_back(s.name, s.degree);
  for (int m = 1; m <= rank; ++m) {
    const std::string t = "t" + std::to_string(m);
    if (sig.find(t)) throw UsageError("principal_obstruction: generator '" + t + "' already exists");
    gens.emplace_back(t, twist_degree);
  }
  const auto ext = Signature::make(gens);
  std::vector<Element> dext;
  for (const auto& dg : cdga.differentials()) dext.push_back(embed(dg, ext, 0));

  ObstructionReport report;
  report.rank = rank;
  report.twist_degree = twist_degree;
  std::vector<ObstructionParameter> params;
  std::vector<std::size_t> param_gen;
  for (std::size_t g = 0; g < sig.size(); ++g) {
    if (sig[g].degree + 1 != twist_degree) continue;
    for (int m = 1; m <= rank; ++m) {
      params.push_back({sig[g].name, m});
      param_gen.push_back(g);
    }
  }
  report.ansatz_dimension = params.size();

  // d'^2(y) = D_lambda(d y), where D_lambda is the derivation g -> lambda_g.
  std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
  std::vector<Triplet> entries;
  for (std::size_t p = 0; p < params.size(); ++p) {
    std::vector<Element> der(ext->size(), Element(ext));
    der[param_gen[p]] = Element::generator(ext, sig.size() + static_cast<std::size_t>(params[p].twist - 1));
    for (std::size_t y = 0; y < sig.size(); ++y) {
      const Element v = detail::apply_derivation(ext, der, dext[y]);
      for (const auto& [mono, c] : v.terms()) {
        const auto [it, fresh] = rows.emplace(std::make_pair(y, mono), rows.size());
        (void)fresh;
        entries.push_back({it->second, p, c});
      }
    }
  }
  const auto kernel =
      rank_exact(SparseExactMatrix::from_triplets(rows.size(), params.size(), std::move(entries))).kernel_basis;
  report.solution_dimension = kernel.size();
  std::vector<bool> free(params.size(), false);
  for (const auto& v : kernel)
    for (const auto& [p, c] : v) free[p] = free[p] || c != 0;
  for (std::size_t p = 0; p < params.size(); ++p) {
    (free[p] ? report.free : report.forced_zero).push_back(params[p]);
    if (!free[p]) continue;
    const auto& name = params[p].generator;
    if (report.free_generators.empty() || report.free_generators.back() != name) report.free_generators.push_back(name);
    if (!fiber_gens.empty() && std::find(fiber_gens.begin(), fiber_gens.end(), name) == fiber_gens.end())
      report.fiber_free = false;
  }
  return report;
}

std::int64_t d_formula(std::int64_t n, std::int64_t k) {
  if (k < 2 || k > n || n > 3'000'000) throw RangeError("d(n,k) requires 2 <= k <= n");
  return (n - k + 1) * (n - k + 2) / 2;
}

std::int64_t c_formula(std::int64_t n, std::int64_t k) {
  const std::int64_t c = n * (n - 1) / 2 - d_formula(n, k);
  if (c != (2 - k) * (-1 + k - 2 * n) / 2) throw InternalError("c(n,k) closed forms disagree");
  return c;
}

}  // namespace sullivan
