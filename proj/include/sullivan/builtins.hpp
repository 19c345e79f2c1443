#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sullivan/cdga.hpp"
#include "sullivan/lie.hpp"

namespace sullivan {

/// Builtin models addressed as family:params.
///   xr:R  upper-tri:N  torus:K  split:N,K (fiber)  split-base:N,K
///   split-total:N,K  shift:N,KAPPA  borel-xr:R  ce:LIE  A*B (tensor product)
/// Throws UsageError for unknown names or malformed parameters and
/// RangeError for out-of-range parameters.
Cdga builtin_cdga(std::string_view spec);

/// upper-tri-lie:N  xr-lie:R  abelian-lie:K
LiePresentation builtin_lie(std::string_view spec);

bool is_lie_builtin(std::string_view spec);

/// Family names with their parameter syntax, for help text.
std::vector<std::string> builtin_families();

/// A representative instance of every family, used by round-trip tests.
std::vector<std::string> builtin_examples();

}  // namespace sullivan
