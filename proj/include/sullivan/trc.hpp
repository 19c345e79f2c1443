#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sullivan/algebra.hpp"
#include "sullivan/cohomology.hpp"

namespace sullivan {

struct TrcCertificate {
  int n = 0;
  int k = 0;
  std::int64_t d_nk = 0;
  Integer factorial;
  Integer power;  ///< 2^d(n,k)
  bool inequality_holds = false;  ///< n! < 2^d(n,k)
  bool stirling_threshold_holds = false;
  std::int64_t fiber_rank = 0;
  std::optional<std::size_t> computed_total_betti;
};

/// ceil(n/2) + 1.
int default_k(int n);

TrcCertificate trc_inequality(int n, int k);

/// 2^((n-k)^2) >= n^(2n), exactly.
bool stirling_threshold(int n, int k);

struct CrossoverScan {
  int max_n = 0;
  std::optional<int> first_holding;   ///< least n in [2, max_n] with n! < 2^d(n, default_k(n))
  std::optional<int> holds_from;      ///< least m such that it holds for every n in [m, max_n]
  std::vector<int> holding;           ///< every n in range where it holds
};

CrossoverScan minimal_crossover(int max_n = 60);

struct RatioEntry {
  int n = 0;
  int k = 0;
  std::int64_t d = 0;
  Rational ratio;  ///< n! / 2^d(n,k)
};

std::vector<RatioEntry> ratio_table(int n_from, int n_to);
/// Each entry strictly below the previous one (step 1, or `step` apart).
bool strictly_decreasing(const std::vector<RatioEntry>& table, std::size_t step = 1);

/// Scientific notation with `digits` significant digits, truncated toward
/// zero, computed with integer arithmetic only (e.g. "1.234e-5").
std::string decimal_string(const Rational& q, int digits = 30);

struct XrCertificate {
  std::vector<int> factors;  ///< r values of the X_r factors
  int fiber_rank = 0;        ///< sum of factors
  std::size_t total_betti = 0;
  Integer power;  ///< 2^fiber_rank
  bool verdict = false;  ///< total_betti < 2^fiber_rank
};

XrCertificate certificate_xr(int r, const CohomologyOptions& options = {});
/// Certificate for X_{r1} (x) X_{r2} (x) ...
XrCertificate certificate_xr_product(const std::vector<int>& factors, const CohomologyOptions& options = {});

Integer factorial_iterative(unsigned n);
Integer factorial_split(unsigned n);

nlohmann::json to_json(const TrcCertificate& c);
nlohmann::json to_json(const CrossoverScan& s);
nlohmann::json to_json(const XrCertificate& c);
nlohmann::json to_json(const RatioEntry& e);

}  // namespace sullivan
