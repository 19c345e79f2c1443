#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/cdga.hpp"
#include "sullivan/cohomology.hpp"

namespace sullivan {

/// Generators x_i_j (1 <= j < i <= n), degree 1, ordered as in
/// u_n_presentation; dx_i_j = -sum_{j<l<i} x_l_j * x_i_l.
Cdga upper_tri_model(int n);

/// a, b, x1..xr of degree 1 with da = db = 0, dx1 = a*b, dxi = a*x(i-1).
Cdga xr_model(int r);

/// x1..xk of degree 1 with zero differential.
Cdga torus_model(int k);

struct FibrationTriple {
  Cdga base;
  Cdga total;
  Cdga fiber;
  std::vector<std::string> base_generators;
  std::vector<std::string> fiber_generators;
};

/// Base on 1 <= i-j < k-1, fiber on i-j >= k-1 with the base generators
/// sent to zero. Defined for all 2 <= k <= n.
FibrationTriple split_at_k(int n, int k);

/// Regrades every x_i_j to degree (i-j)*2*kappa + 1. Throws UsageError when
/// a generator name is not of the form x_i_j.
Cdga degree_shift(const Cdga& cdga, int kappa);

/// Appends an even generator t of degree |g|+1 with dt = 0 and d(g) += t.
Cdga borel_twist(const Cdga& cdga, std::string_view generator, std::string t_name = "t",
                 std::optional<int> truncation = std::nullopt);

struct WindowComparison {
  int window_max = 0;  ///< degrees 0..window_max are compared
  std::vector<std::size_t> model;
  std::vector<std::size_t> reference;
  bool agree = false;
};

/// Compares truncated Betti numbers of `model` with those of `reference` in
/// every degree <= truncation(model) - 2.
WindowComparison compare_window(const Cdga& model, const Cdga& reference, const CohomologyOptions& options = {});

struct ObstructionParameter {
  std::string generator;
  int twist = 0;  ///< index m of t_m, 1-based
  [[nodiscard]] std::string label() const { return generator + ":t" + std::to_string(twist); }
};

struct ObstructionReport {
  int rank = 0;
  int twist_degree = 2;
  std::size_t ansatz_dimension = 0;
  std::vector<ObstructionParameter> forced_zero;
  std::vector<ObstructionParameter> free;
  std::size_t solution_dimension = 0;
  /// Generators with at least one free parameter, in signature order.
  std::vector<std::string> free_generators;
  /// Whether every free parameter sits on a listed fiber generator (true
  /// when no fiber generators were given).
  bool fiber_free = true;
};

/// Twists every generator g with |g| + 1 = twist_degree by an unknown linear
/// form in t_1..t_rank and solves d^2 = 0 for the coefficients exactly.
ObstructionReport principal_obstruction(const Cdga& cdga, const std::vector<std::string>& fiber_gens, int rank,
                                        int twist_degree = 2);

/// (n-k+1)(n-k+2)/2 and n(n-1)/2 - d(n,k), for 2 <= k <= n.
std::int64_t d_formula(std::int64_t n, std::int64_t k);
std::int64_t c_formula(std::int64_t n, std::int64_t k);

}  // namespace sullivan
