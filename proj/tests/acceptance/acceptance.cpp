// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed below; every check is exact.
//
//   acceptance [--slow] [--golden-dir DIR]

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "random_models.hpp"
#include "sullivan/builtins.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/dsl.hpp"
#include "sullivan/lie.hpp"
#include "sullivan/models.hpp"
#include "sullivan/trc.hpp"

#ifndef SULLIVAN_GOLDEN_DIR
#define SULLIVAN_GOLDEN_DIR "tests/golden"
#endif

using namespace sullivan;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitXrTotals = 60;
constexpr double kLimitX5 = 10;
constexpr double kLimitFactorial = 120;
constexpr double kLimitFactorialSlow = 30 * 60;
constexpr double kLimitSplit = 10;
constexpr double kLimitCertificates = 5;
constexpr double kLimitCrossover = 10;
constexpr double kLimitNonRealizable = 30;
constexpr double kLimitBorel = 30;
constexpr double kLimitProperties = 120;
constexpr double kLimitRatio = 10;

// Reference totals of H*(X_r), r = 1..9, and the listed r = 0 value.
const std::vector<std::size_t> kXrTotals{6, 8, 12, 16, 26, 40, 64, 104, 180};
constexpr std::size_t kXrTotalR0 = 3;

// The 26 classes listed for H*(X_5).
const std::vector<std::string> kX5Classes{
    "1", "a", "b", "b*x1", "x1*x2 - b*x3", "b*x1*x2", "x2*x3 - x1*x4 + b*x5", "a*x5", "a*x2*x3",
    "b*x2*x3 - b*x1*x4", "x1*x2*x3 - b*x2*x4 + b*x1*x5", "a*x3*x4", "b*x1*x2*x3", "a*x4*x5",
    "b*x1*x3*x4 - b*x1*x2*x5", "a*x2*x3*x4", "x1*x2*x3*x4 - b*x2*x3*x5 + b*x1*x4*x5", "a*x2*x3*x5",
    "a*x1*x2*x3*x4", "b*x1*x2*x3*x4", "a*x3*x4*x5", "a*x1*x2*x4*x5", "a*x2*x3*x4*x5", "a*x1*x2*x3*x4*x5",
    "b*x1*x2*x3*x4*x5", "a*b*x1*x2*x3*x4*x5"};
const std::vector<std::size_t> kX5PerDegree{1, 2, 4, 6, 6, 4, 2, 1};

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { detail.push_back(s); }
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < limit, "time limit " + std::to_string(limit) + " s");
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << std::fixed;
  std::cout.precision(3);
  std::cout << secs << " s, limit " << limit << " s)\n";
  for (const auto& d : out.detail) std::cout << "        " << d << '\n';
}

bool zero_differential(const Cdga& c) {
  for (const auto& d : c.differentials())
    if (!d.is_zero()) return false;
  return true;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Cdga> constructor_outputs() {
  std::vector<Cdga> out;
  for (int r = 0; r <= 9; ++r) out.push_back(xr_model(r));
  for (int k = 1; k <= 5; ++k) out.push_back(torus_model(k));
  for (int n = 2; n <= 6; ++n) out.push_back(upper_tri_model(n));
  for (int n = 2; n <= 7; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto s = split_at_k(n, k);
      if (s.base.size() > 0 && s.base.size() <= 15) out.push_back(s.base);
      if (s.fiber.size() <= 15) out.push_back(s.fiber);
    }
  for (int n = 2; n <= 5; ++n)
    for (int kappa = 1; kappa <= 2; ++kappa) out.push_back(degree_shift(upper_tri_model(n), kappa));
  for (int r = 1; r <= 5; ++r) out.push_back(chevalley_eilenberg(dual_homotopy_lie(xr_model(r)).lie));
  for (const auto& spec : builtin_examples()) {
    const Cdga c = builtin_cdga(spec);
    if (!c.truncation()) out.push_back(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  std::string golden_dir = SULLIVAN_GOLDEN_DIR;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else if (std::strcmp(argv[i], "--golden-dir") == 0 && i + 1 < argc) {
      golden_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--slow] [--golden-dir DIR]\n";
      return 2;
    }
  }

  if (slow) {
    criterion("3 (slow)", "u(6): total 720, multimodular prefilter then exact confirmation", kLimitFactorialSlow,
              [](Outcome& o) {
                const Cdga ce = chevalley_eilenberg(u_n_presentation(6));
                CohomologyOptions mm;
                mm.method = RankMethod::multimodular_confirmed;
                const auto pre = betti(ce, mm);
                const auto exact = betti(ce);
                o.note("per degree " + join(exact.per_degree) + ", total " + std::to_string(exact.total));
                o.require(pre == exact, "prefilter and exact tables agree");
                o.require(exact.total == 720, "total 720");
              });
    std::cout << (failures ? "FAILED" : "ALL PASSED") << '\n';
    return failures ? 1 : 0;
  }

  criterion("1", "total Betti numbers of X_1..X_9", kLimitXrTotals, [](Outcome& o) {
    std::vector<std::size_t> got;
    for (int r = 1; r <= 9; ++r) got.push_back(betti(xr_model(r)).total);
    o.note("computed " + join(got));
    o.require(got == kXrTotals, "equals 6,8,12,16,26,40,64,104,180");
    const auto r0 = betti(xr_model(0)).total;
    o.note("r=0: computed " + std::to_string(r0) + ", reference table lists " + std::to_string(kXrTotalR0) +
           " (reported, not part of the check)");
  });

  criterion("2", "H*(X_5): listed classes form a basis with Betti numbers 1,2,4,6,6,4,2,1", kLimitX5, [](Outcome& o) {
    const Cdga x5 = xr_model(5);
    std::vector<Element> elems;
    std::vector<std::size_t> counted(8, 0);
    for (const auto& s : kX5Classes) {
      elems.push_back(dsl::parse_expression(x5.signature(), s));
      const auto deg = elems.back().homogeneous_degree();
      o.require(deg && *deg >= 0 && *deg <= 7, "'" + s + "' homogeneous of degree <= 7");
      if (deg && *deg >= 0 && *deg <= 7) ++counted[static_cast<std::size_t>(*deg)];
    }
    o.require(elems.size() == 26, "26 listed classes");
    o.require(counted == kX5PerDegree, "counted from the list: " + join(counted));
    const auto b = betti(x5);
    o.require(b.per_degree == kX5PerDegree, "computed: " + join(b.per_degree));
    const auto v = verify_classes(x5, elems);
    o.require(v.closed, "all closed");
    o.require(v.independent, "independent");
    o.require(v.spanning, "spanning");
  });

  criterion("3", "n! law for u(n), n = 2..5", kLimitFactorial, [](Outcome& o) {
    std::vector<std::size_t> got;
    for (int n = 2; n <= 5; ++n) got.push_back(betti(chevalley_eilenberg(u_n_presentation(n))).total);
    o.note("computed " + join(got) + " (n = 6 runs in the slow suite)");
    o.require(got == std::vector<std::size_t>{2, 6, 24, 120}, "equals 2,6,24,120");
  });

  criterion("4", "fiber split: zero differential and 2^d(n,k) above the threshold, nonzero at (5,3)", kLimitSplit,
            [](Outcome& o) {
              for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 4}, {6, 4}, {7, 5}, {8, 5}}) {
                const auto s = split_at_k(n, k);
                const auto total = betti(s.fiber).total;
                const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
                o.require(zero_differential(s.fiber), tag + " zero fiber differential");
                o.require(total == (std::size_t{1} << d_formula(n, k)), tag + " total 2^d");
                o.note(tag + ": d = " + std::to_string(d_formula(n, k)) + ", total " + std::to_string(total));
              }
              o.require(!zero_differential(split_at_k(5, 3).fiber), "(5,3) nonzero fiber differential");
            });

  criterion("5", "counterexample certificates", kLimitCertificates, [](Outcome& o) {
    const auto c = trc_inequality(49, 26);
    o.require(c.inequality_holds, "49! < 2^d(49,26)");
    o.note("stirling_threshold(49,26): 2^(23^2) >= 49^98 is " + std::string(c.stirling_threshold_holds ? "true" : "false") +
           "; first n with it true at k = ceil(n/2)+1 is " + [] {
             for (int n = 2; n <= 200; ++n)
               if (stirling_threshold(n, default_k(n))) return std::to_string(n);
             return std::string("none <= 200");
           }());
    o.require(c.stirling_threshold_holds, "stirling_threshold(49, 26)");
    std::vector<int> holding;
    for (int r = 0; r <= 9; ++r)
      if (certificate_xr(r).verdict) holding.push_back(r);
    o.require(holding == std::vector<int>{5, 6, 7, 8, 9}, "verdicts true exactly for r = 5..9 (got " + join(holding) + ")");
    const auto p = certificate_xr_product({5, 5});
    o.require(p.total_betti == 676 && p.power == 1024 && p.verdict, "X_5 (x) X_5: 676 < 1024");
  });

  criterion("6", "exact crossover scan over n <= 60, stable and equal to the golden file", kLimitCrossover,
            [&golden_dir](Outcome& o) {
              const auto a = to_json(minimal_crossover(60));
              const auto b = to_json(minimal_crossover(60));
              o.require(a == b, "two scans agree");
              std::ifstream in(golden_dir + "/crossover_60.json");
              o.require(static_cast<bool>(in), "golden file readable at " + golden_dir);
              if (!in) return;
              const auto golden = nlohmann::json::parse(in)["outputs"]["scan"];
              o.require(a == golden, "scan equals golden");
              o.note("first n holding " + a["first_holding"].dump() + ", holds for every n from " +
                     a["holds_from"].dump() + " to 60");
            });

  criterion("7", "non-realizability: obstruction forcing and centers", kLimitNonRealizable, [](Outcome& o) {
    for (int r = 2; r <= 5; ++r) {
      const auto rep = principal_obstruction(xr_model(r), {}, 1);
      const std::string top = "x" + std::to_string(r);
      o.require(rep.free.size() == 1 && rep.free[0].generator == top, "X_" + std::to_string(r) + " only " + top + " free");
      o.require(rep.forced_zero.size() == static_cast<std::size_t>(r + 1), "X_" + std::to_string(r) + " all others forced");
    }
    for (int n = 2; n <= 8; ++n) {
      const auto c = center(u_n_presentation(n));
      o.require(c.dimension == 1 && c.rendered == std::vector<std::string>{"X_" + std::to_string(n) + "_1"},
                "center of u(" + std::to_string(n) + ")");
    }
    for (int r = 1; r <= 9; ++r) {
      const auto c = center(dual_homotopy_lie(xr_model(r)).lie);
      o.require(c.dimension == 1 && c.rendered == std::vector<std::string>{"X" + std::to_string(r)},
                "center of the dual of X_" + std::to_string(r));
    }
  });

  criterion("8", "Borel twist of X_5 at x5 matches X_4 below truncation - 1", kLimitBorel, [](Outcome& o) {
    const Cdga twisted = borel_twist(xr_model(5), "x5", "t", 11);
    const auto w = compare_window(twisted, xr_model(4));
    o.note("degrees 0.." + std::to_string(w.window_max) + ": twisted " + join(w.model) + ", X_4 " + join(w.reference));
    o.require(w.agree, "windows agree");
  });

  criterion("9", "property suites", kLimitProperties, [](Outcome& o) {
    const auto models = constructor_outputs();
    std::size_t checked = 0;
    for (const auto& c : models) {
      const int top = c.truncation() ? *c.truncation() - 2 : c.top_degree() - 1;
      for (int n = 0; n <= top; ++n)
        o.require((differential_matrix(c, n + 1) * differential_matrix(c, n)).is_zero(), "d^2 = 0 on " + c.name());
      const auto b = betti(c).per_degree;
      long chi = 0;
      for (std::size_t n = 0; n < b.size(); ++n) chi += (n % 2 ? -1L : 1L) * static_cast<long>(b[n]);
      if (c.size() > 0) o.require(chi == 0, "Euler characteristic of " + c.name());
      for (std::size_t n = 0; n < b.size(); ++n) o.require(b[n] == b[b.size() - 1 - n], "Poincare duality on " + c.name());
      if (c.size() <= 8) {
        o.require(b == oracle::betti(c), "oracle on " + c.name());
        ++checked;
      }
    }
    std::mt19937 rng(20261016);
    for (int t = 0; t < 40; ++t) {
      const Cdga c = testing_support::random_model(rng, 1 + t % 8, t % 3 == 0);
      o.require(betti(c).per_degree == oracle::betti(c), "oracle on random model " + std::to_string(t));
      ++checked;
    }
    for (int t = 0; t < 12; ++t) {
      const Cdga a = testing_support::random_model(rng, 2 + t % 4, t % 2 == 0);
      const Cdga b = testing_support::random_model(rng, 2 + t % 3, false);
      o.require(betti(tensor_product(a, b)).per_degree == convolve(betti(a).per_degree, betti(b).per_degree),
                "Kunneth on random product " + std::to_string(t));
    }
    for (int n = 2; n <= 5; ++n) {
      const auto base = betti(upper_tri_model(n)).total;
      for (int kappa = 0; kappa <= 2; ++kappa)
        o.require(betti(degree_shift(upper_tri_model(n), kappa)).total == base, "degree shift total");
    }
    for (const auto& spec : builtin_examples()) {
      const Cdga c = builtin_cdga(spec);
      const auto r = dsl::parse(dsl::serialize(c));
      o.require(r.ok() && std::get<Cdga>(dsl::to_cdga(*r.document)) == c, "round trip " + spec);
    }
    std::uniform_int_distribution<int> byte(0, 255), len(0, 300);
    for (int t = 0; t < 2000; ++t) {
      std::string s(static_cast<std::size_t>(len(rng)), '\0');
      for (auto& ch : s) ch = static_cast<char>(byte(rng));
      const auto r = dsl::parse(s);
      o.require(r.ok() || !r.diagnostics.empty(), "fuzz input yields a document or diagnostics");
    }
    o.note(std::to_string(models.size()) + " constructor outputs, " + std::to_string(checked) + " oracle comparisons");
  });

  criterion("ratio", "n!/2^d(n,k) strictly decreasing on n = 50..80", kLimitRatio, [](Outcome& o) {
    const auto t = ratio_table(50, 80);
    const bool step1 = strictly_decreasing(t, 1);
    const bool step2 = strictly_decreasing(t, 2);
    o.note("step 2 (same parity of n): " + std::string(step2 ? "decreasing" : "not decreasing"));
    o.note("n = 49: " + decimal_string(ratio_table(49, 49)[0].ratio, 6));
    for (std::size_t i = 1; i < t.size() && !step1; ++i)
      if (!(t[i].ratio < t[i - 1].ratio)) {
        o.note("first increase: n = " + std::to_string(t[i].n) + " (k and d unchanged, ratio gains a factor " +
               std::to_string(t[i].n) + ")");
        break;
      }
    o.require(step1, "strictly decreasing from each n to n + 1");
  });

  std::cout << (failures ? std::to_string(failures) + " criterion line(s) FAILED" : std::string("ALL PASSED")) << '\n';
  return failures ? 1 : 0;
}
