#include "sullivan/builtins.hpp"

#include <charconv>

#include "sullivan/cohomology.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/models.hpp"

namespace sullivan {

namespace {

struct Spec {
  std::string family;
  std::vector<int> params;
};

Spec split_spec(std::string_view text) {
  Spec s;
  const auto colon = text.find(':');
  s.family = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) return s;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto part = rest.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw UsageError("builtin '" + std::string(text) + "': parameter '" + std::string(part) + "' is not an integer");
    s.params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return s;
}

void arity(const Spec& s, std::size_t n, std::string_view usage) {
  if (s.params.size() != n) throw UsageError("builtin '" + s.family + "' expects " + std::string(usage));
}

}  // namespace

bool is_lie_builtin(std::string_view spec) {
  const auto family = spec.substr(0, spec.find(':'));
  return family == "upper-tri-lie" || family == "xr-lie" || family == "abelian-lie";
}

LiePresentation builtin_lie(std::string_view spec) {
  const Spec s = split_spec(spec);
  if (s.family == "upper-tri-lie") {
    arity(s, 1, "upper-tri-lie:N");
    return u_n_presentation(s.params[0]);
  }
  if (s.family == "xr-lie") {
    arity(s, 1, "xr-lie:R");
    return dual_homotopy_lie(xr_model(s.params[0])).lie;
  }
  if (s.family == "abelian-lie") {
    arity(s, 1, "abelian-lie:K");
    return abelian_lie(s.params[0]);
  }
  throw UsageError("unknown Lie builtin '" + std::string(spec) + "'");
}

Cdga builtin_cdga(std::string_view spec) {
  if (spec.empty()) throw UsageError("empty builtin name");
  if (const auto star = spec.find('*'); star != std::string_view::npos)
    return tensor_product(builtin_cdga(spec.substr(0, star)), builtin_cdga(spec.substr(star + 1)));
  if (spec.substr(0, 3) == "ce:") return chevalley_eilenberg(builtin_lie(spec.substr(3)));
  const Spec s = split_spec(spec);
  if (s.family == "xr") {
    arity(s, 1, "xr:R");
    return xr_model(s.params[0]);
  }
  if (s.family == "upper-tri") {
    arity(s, 1, "upper-tri:N");
    return upper_tri_model(s.params[0]);
  }
  if (s.family == "torus") {
    arity(s, 1, "torus:K");
    return torus_model(s.params[0]);
  }
  if (s.family == "split" || s.family == "split-fiber" || s.family == "split-base" || s.family == "split-total") {
    arity(s, 2, s.family + ":N,K");
    auto triple = split_at_k(s.params[0], s.params[1]);
    if (s.family == "split-base") return triple.base;
    if (s.family == "split-total") return triple.total;
    return triple.fiber;
  }
  if (s.family == "shift") {
    arity(s, 2, "shift:N,KAPPA");
    return degree_shift(upper_tri_model(s.params[0]), s.params[1]);
  }
  if (s.family == "borel-xr") {
    arity(s, 1, "borel-xr:R");
    if (s.params[0] < 1) throw RangeError("borel-xr requires R >= 1");
    return borel_twist(xr_model(s.params[0]), "x" + std::to_string(s.params[0]));
  }
  if (is_lie_builtin(spec))
    throw UsageError("'" + std::string(spec) + "' is a Lie algebra; use ce:" + std::string(spec) + " for its CDGA");
  throw UsageError("unknown builtin '" + std::string(spec) + "'");
}

std::vector<std::string> builtin_families() {
  return {"xr:R",          "upper-tri:N", "torus:K",     "split:N,K",     "split-base:N,K",
          "split-total:N,K", "shift:N,KAPPA", "borel-xr:R", "ce:LIE",        "A*B",
          "upper-tri-lie:N", "xr-lie:R",    "abelian-lie:K"};
}

std::vector<std::string> builtin_examples() {
  return {"xr:0",          "xr:3",        "xr:5",       "upper-tri:2",    "upper-tri:4",  "torus:3",
          "split:5,4",     "split:5,3",   "split-base:6,4", "split-total:5,4", "shift:4,1", "shift:3,2",
          "borel-xr:5",    "ce:upper-tri-lie:3", "ce:xr-lie:2", "xr:2*torus:1", "xr:1*xr:1"};
}

}  // namespace sullivan
