#include "sullivan/trc.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/models.hpp"
#include "parallel.hpp"

namespace sullivan {

namespace {

void check_range(int n, int k) {
  if (k < 2 || k > n) throw RangeError("requires 2 <= k <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  if (n > 100000) throw RangeError("n too large");
}

Integer pow2(std::int64_t e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return p;
}

Integer product(unsigned lo, unsigned hi) {  // lo * (lo+1) * ... * hi
  if (lo > hi) return 1;
  if (hi - lo < 8) {
    Integer p = 1;
    for (unsigned i = lo; i <= hi; ++i) p *= i;
    return p;
  }
  const unsigned mid = lo + (hi - lo) / 2;
  return product(lo, mid) * product(mid + 1, hi);
}

Integer pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

}  // namespace

int default_k(int n) { return (n + 1) / 2 + 1; }

Integer factorial_iterative(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer factorial_split(unsigned n) { return product(1, n); }

bool stirling_threshold(int n, int k) {
  check_range(n, k);
  const std::int64_t m = n - k;
  Integer rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n), 2UL * static_cast<unsigned long>(n));
  return pow2(m * m) >= rhs;
}

TrcCertificate trc_inequality(int n, int k) {
  check_range(n, k);
  TrcCertificate c;
  c.n = n;
  c.k = k;
  c.d_nk = d_formula(n, k);
  c.fiber_rank = c.d_nk;
  c.factorial = factorial_iterative(static_cast<unsigned>(n));
  c.power = pow2(c.d_nk);
  c.inequality_holds = c.factorial < c.power;
  c.stirling_threshold_holds = stirling_threshold(n, k);
  return c;
}

CrossoverScan minimal_crossover(int max_n) {
  if (max_n < 2) throw RangeError("crossover scan needs max_n >= 2");
  CrossoverScan s;
  s.max_n = max_n;
  std::vector<bool> holds(static_cast<std::size_t>(max_n) + 1, false);
  for (int n = 2; n <= max_n; ++n) {
    holds[static_cast<std::size_t>(n)] = trc_inequality(n, default_k(n)).inequality_holds;
    if (holds[static_cast<std::size_t>(n)]) s.holding.push_back(n);
  }
  if (!s.holding.empty()) s.first_holding = s.holding.front();
  for (int n = max_n; n >= 2 && holds[static_cast<std::size_t>(n)]; --n) s.holds_from = n;
  return s;
}

std::vector<RatioEntry> ratio_table(int n_from, int n_to) {
  if (n_from < 2 || n_to < n_from) throw RangeError("ratio_table requires 2 <= from <= to");
  std::vector<RatioEntry> out(static_cast<std::size_t>(n_to - n_from + 1));
  detail::parallel_for(out.size(), std::max(1u, std::thread::hardware_concurrency()), [&](std::size_t i) {
    RatioEntry& e = out[i];
    e.n = n_from + static_cast<int>(i);
    e.k = default_k(e.n);
    e.d = d_formula(e.n, e.k);
    e.ratio = Rational(factorial_iterative(static_cast<unsigned>(e.n)), pow2(e.d));
    e.ratio.canonicalize();
  });
  return out;
}

bool strictly_decreasing(const std::vector<RatioEntry>& table, std::size_t step) {
  if (step == 0) throw UsageError("step must be positive");
  for (std::size_t i = step; i < table.size(); ++i)
    if (!(table[i].ratio < table[i - step].ratio)) return false;
  return true;
}

std::string decimal_string(const Rational& q, int digits) {
  if (digits < 1) throw UsageError("decimal_string needs at least one digit");
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  const Integer& num = a.get_num();
  const Integer& den = a.get_den();
  // Exponent e with 10^e <= a < 10^(e+1), starting from a digit-count guess.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto at_least = [&](long x) {  // a >= 10^x
    return x >= 0 ? num >= den * pow10(x) : num * pow10(-x) >= den;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;
  // floor(a * 10^(digits-1-e))
  const long shift = digits - 1 - e;
  Integer scaled = shift >= 0 ? Integer(num * pow10(shift) / den) : Integer(num / (den * pow10(-shift)));
  std::string m = scaled.get_str();
  std::string out = negative ? "-" : "";
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

XrCertificate certificate_xr_product(const std::vector<int>& factors, const CohomologyOptions& options) {
  if (factors.empty()) throw UsageError("certificate needs at least one factor");
  XrCertificate c;
  c.factors = factors;
  std::optional<Cdga> model;
  for (int r : factors) {
    if (r < 0) throw RangeError("X_r requires r >= 0");
    c.fiber_rank += r;
    Cdga x = xr_model(r);
    model = model ? tensor_product(*model, x) : x;
  }
  c.total_betti = betti(*model, options).total;
  c.power = pow2(c.fiber_rank);
  c.verdict = Integer(static_cast<unsigned long>(c.total_betti)) < c.power;
  return c;
}

XrCertificate certificate_xr(int r, const CohomologyOptions& options) { return certificate_xr_product({r}, options); }

nlohmann::json to_json(const TrcCertificate& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["d_nk"] = c.d_nk;
  j["fiber_rank"] = c.fiber_rank;
  j["factorial"] = c.factorial.get_str();
  j["power"] = c.power.get_str();
  j["inequality_holds"] = c.inequality_holds;
  j["stirling_threshold_holds"] = c.stirling_threshold_holds;
  j["computed_total_betti"] = c.computed_total_betti ? nlohmann::json(*c.computed_total_betti) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const CrossoverScan& s) {
  nlohmann::json j;
  j["max_n"] = s.max_n;
  j["first_holding"] = s.first_holding ? nlohmann::json(*s.first_holding) : nlohmann::json();
  j["holds_from"] = s.holds_from ? nlohmann::json(*s.holds_from) : nlohmann::json();
  j["holding"] = s.holding;
  return j;
}

nlohmann::json to_json(const XrCertificate& c) {
  nlohmann::json j;
  j["factors"] = c.factors;
  j["fiber_rank"] = c.fiber_rank;
  j["total_betti"] = c.total_betti;
  j["power"] = c.power.get_str();
  j["verdict"] = c.verdict;
  return j;
}

nlohmann::json to_json(const RatioEntry& e) {
  nlohmann::json j;
  j["n"] = e.n;
  j["k"] = e.k;
  j["d"] = e.d;
  j["ratio"] = e.ratio.get_str();
  j["decimal"] = decimal_string(e.ratio);
  return j;
}

}  // namespace sullivan
