// sullivan: command-line front end for the model, cohomology and certificate
// computations. Exit codes: 0 ok, 1 violated expectation, 2 usage or input
// error, 3 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "report.hpp"
#include "sullivan/builtins.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/dsl.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/lie.hpp"
#include "sullivan/models.hpp"
#include "sullivan/trc.hpp"

using namespace sullivan;
using nlohmann::json;

namespace {

constexpr std::size_t kMaxGeneratorsSafe = 24;
constexpr int kMaxTruncationSafe = 40;
constexpr int kMaxTable1Safe = 9;

struct Globals {
  std::string format;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool unsafe_large = false;
  bool no_timing = false;
};

cli::Format resolve_format(const std::string& flag) {
  std::string f = flag;
  if (f.empty()) {
    const char* env = std::getenv("SULLIVAN_FORMAT");
    f = env && *env ? env : "json";
  }
  if (f == "json") return cli::Format::json;
  if (f == "csv") return cli::Format::csv;
  if (f == "md") return cli::Format::md;
  throw UsageError("unknown output format '" + f + "' (expected json, csv or md)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::SourceDocument parse_file(const std::string& path) {
  auto result = dsl::parse(read_file(path));
  if (!result.ok()) {
    std::string msg = "failed to parse '" + path + "'";
    for (const auto& d : result.diagnostics) msg += "\n" + path + ":" + d.to_string();
    throw UsageError(msg);
  }
  return std::move(*result.document);
}

Cdga load_cdga(const std::string& file, const std::string& builtin) {
  if (file.empty() == builtin.empty()) throw UsageError("give exactly one of FILE or --builtin");
  if (!builtin.empty()) return builtin_cdga(builtin);
  auto checked = dsl::to_cdga(parse_file(file));
  if (auto* bad = std::get_if<DSquaredViolation>(&checked))
    throw UsageError("'" + file + "' does not define a differential: " + bad->message());
  return std::get<Cdga>(std::move(checked));
}

LiePresentation load_lie(const std::string& file, const std::string& builtin) {
  if (file.empty() == builtin.empty()) throw UsageError("give exactly one of FILE or --builtin");
  if (!builtin.empty()) {
    if (is_lie_builtin(builtin)) return builtin_lie(builtin);
    return dual_homotopy_lie(builtin_cdga(builtin)).lie;
  }
  const auto doc = parse_file(file);
  if (!doc.lies.empty()) return dsl::to_lie(doc);
  auto checked = dsl::to_cdga(doc);
  if (auto* bad = std::get_if<DSquaredViolation>(&checked)) throw UsageError(bad->message());
  return dual_homotopy_lie(std::get<Cdga>(checked)).lie;
}

void enforce_ceilings(const Cdga& c, const Globals& g) {
  if (g.unsafe_large) return;
  if (c.size() > kMaxGeneratorsSafe)
    throw UsageError("model has " + std::to_string(c.size()) + " generators (ceiling " +
                     std::to_string(kMaxGeneratorsSafe) + "); pass --unsafe-large to override");
  if (c.truncation() && *c.truncation() > kMaxTruncationSafe)
    throw UsageError("truncation " + std::to_string(*c.truncation()) + " exceeds the ceiling " +
                     std::to_string(kMaxTruncationSafe) + "; pass --unsafe-large to override");
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

CohomologyOptions options_for(const Globals& g, const std::string& method) {
  CohomologyOptions o;
  o.jobs = g.jobs;
  if (method == "exact") o.method = RankMethod::exact;
  else if (method == "multimodular") o.method = RankMethod::multimodular_confirmed;
  else throw UsageError("unknown method '" + method + "'");
  return o;
}

// --- subcommands -------------------------------------------------------------

struct CohomologyArgs {
  std::string file, builtin, method = "exact";
  bool representatives = false;
  std::optional<int> truncate;
};

cli::Report cmd_cohomology(const CohomologyArgs& a, const Globals& g) {
  Cdga c = load_cdga(a.file, a.builtin);
  if (a.truncate) {
    if (*a.truncate < 0) throw RangeError("--truncate must be >= 0");
    c = make_cdga(c.name(), c.signature(), c.differentials(), *a.truncate);
  }
  enforce_ceilings(c, g);
  const auto table = betti(c, options_for(g, a.method));
  cli::Report r;
  r.inputs = {{"model", c.name()}, {"source", a.builtin.empty() ? a.file : "builtin:" + a.builtin},
              {"generators", c.size()}, {"method", a.method}};
  r.outputs["betti"] = to_json(table);
  r.table.headers = {"degree", "betti"};
  if (a.representatives) r.table.headers.push_back("representatives");
  json reps = json::object();
  for (std::size_t n = 0; n < table.per_degree.size(); ++n) {
    std::vector<std::string> row{std::to_string(n), std::to_string(table.per_degree[n])};
    if (a.representatives) {
      std::vector<std::string> items;
      for (const auto& e : representatives(c, static_cast<int>(n))) items.push_back(e.to_string());
      reps[std::to_string(n)] = items;
      row.push_back(join(items, "; "));
    }
    r.table.rows.push_back(std::move(row));
  }
  if (a.representatives) r.outputs["representatives"] = reps;
  r.table.rows.push_back({"total", std::to_string(table.total)});
  if (a.representatives) r.table.rows.back().push_back("");
  if (table.truncated_at)
    r.notes.push_back("truncated at degree " + std::to_string(*table.truncated_at) +
                      "; every listed degree is exact, higher degrees are not computed");
  return r;
}

cli::Report cmd_table1(int max_r, const Globals& g) {
  if (max_r < 1) throw RangeError("--max-r must be >= 1");
  if (max_r > kMaxTable1Safe && !g.unsafe_large)
    throw UsageError("--max-r above " + std::to_string(kMaxTable1Safe) + " needs --unsafe-large");
  cli::Report r;
  r.inputs = {{"max_r", max_r}};
  r.table.headers = {"r", "2^r", "dim H*(X_r)", "counterexample"};
  json rows = json::array();
  CohomologyOptions o;
  o.jobs = g.jobs;
  for (int k = 1; k <= max_r; ++k) {
    const auto cert = certificate_xr(k, o);
    rows.push_back({{"r", k}, {"power", cert.power.get_str()}, {"total_betti", cert.total_betti},
                    {"counterexample", cert.verdict}});
    r.table.rows.push_back(
        {std::to_string(k), cert.power.get_str(), std::to_string(cert.total_betti), cert.verdict ? "yes" : "no"});
  }
  r.outputs["rows"] = rows;
  const std::size_t x0 = betti(xr_model(0), o).total;
  r.outputs["r0"] = {{"computed_total_betti", x0}, {"reference_value", 3}};
  r.notes.push_back("r=0: the model on a, b with zero differential has total Betti number " + std::to_string(x0) +
                    " (1,2,1); the reference table lists 3. The computed value is reported.");
  return r;
}

cli::Report cmd_trc(std::optional<int> n, std::optional<int> k, bool scan, int max_n) {
  cli::Report r;
  r.notes.push_back("p-local rank statements and torsion bounds are out of scope; only the rational rank n! is compared");
  if (scan) {
    if (n || k) throw UsageError("--scan-min cannot be combined with --n/--k");
    const auto s = minimal_crossover(max_n);
    r.inputs = {{"scan_min", true}, {"max_n", max_n}, {"k_rule", "ceil(n/2)+1"}};
    r.outputs["scan"] = to_json(s);
    r.table.headers = {"max_n", "first_holding", "holds_from"};
    r.table.rows.push_back({std::to_string(max_n), s.first_holding ? std::to_string(*s.first_holding) : "none",
                            s.holds_from ? std::to_string(*s.holds_from) : "none"});
    return r;
  }
  if (!n) throw UsageError("trc needs --n N (and optionally --k K) or --scan-min");
  const int kk = k ? *k : default_k(*n);
  const auto c = trc_inequality(*n, kk);
  r.inputs = {{"n", *n}, {"k", kk}};
  r.outputs["certificate"] = to_json(c);
  r.table.headers = {"n", "k", "d(n,k)", "n!", "2^d", "n! < 2^d", "stirling_threshold"};
  r.table.rows.push_back({std::to_string(c.n), std::to_string(c.k), std::to_string(c.d_nk), c.factorial.get_str(),
                          c.power.get_str(), c.inequality_holds ? "true" : "false",
                          c.stirling_threshold_holds ? "true" : "false"});
  return r;
}

cli::Report cmd_ratio(int from, int to) {
  const auto table = ratio_table(from, to);
  cli::Report r;
  r.inputs = {{"from", from}, {"to", to}, {"k_rule", "ceil(n/2)+1"}};
  json entries = json::array();
  r.table.headers = {"n", "k", "d", "ratio"};
  for (const auto& e : table) {
    entries.push_back(to_json(e));
    r.table.rows.push_back({std::to_string(e.n), std::to_string(e.k), std::to_string(e.d), decimal_string(e.ratio)});
  }
  r.outputs["entries"] = entries;
  r.outputs["strictly_decreasing"] = strictly_decreasing(table, 1);
  r.outputs["strictly_decreasing_step2"] = strictly_decreasing(table, 2);
  return r;
}

cli::Report cmd_split(int n, int k, const Globals& g) {
  const auto t = split_at_k(n, k);
  bool zero = true;
  for (const auto& d : t.fiber.differentials()) zero = zero && d.is_zero();
  enforce_ceilings(t.fiber, g);
  CohomologyOptions o;
  o.jobs = g.jobs;
  const auto fb = betti(t.fiber, o);
  const auto d = d_formula(n, k);
  cli::Report r;
  r.inputs = {{"n", n}, {"k", k}};
  r.outputs = {{"base_generators", t.base_generators},
               {"fiber_generators", t.fiber_generators},
               {"fiber_differential_zero", zero},
               {"fiber_betti", to_json(fb)},
               {"d_nk", d},
               {"c_nk", c_formula(n, k)},
               {"power", Integer(Integer(1) << static_cast<mp_bitcnt_t>(d)).get_str()},
               {"abelian_threshold", 2 * k >= n + 2}};
  r.table.headers = {"part", "generators", "differential"};
  auto rows = [&](const std::string& part, const Cdga& c) {
    for (std::size_t i = 0; i < c.size(); ++i) r.table.rows.push_back({part, c.sig()[i].name, c.d(i).to_string()});
  };
  rows("base", t.base);
  rows("fiber", t.fiber);
  r.notes.push_back("fiber Betti total " + std::to_string(fb.total) + ", 2^d(n,k) = 2^" + std::to_string(d));
  return r;
}

cli::Report cmd_obstruction(const std::string& file, const std::string& builtin, int rank, const std::string& fiber,
                            int twist_degree) {
  const Cdga c = load_cdga(file, builtin);
  const auto rep = principal_obstruction(c, split_list(fiber), rank, twist_degree);
  auto labels = [](const std::vector<ObstructionParameter>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.label());
    return out;
  };
  cli::Report r;
  r.inputs = {{"model", c.name()}, {"rank", rank}, {"fiber", split_list(fiber)}, {"twist_degree", twist_degree}};
  r.outputs = {{"ansatz_dimension", rep.ansatz_dimension}, {"forced_zero", labels(rep.forced_zero)},
               {"free", labels(rep.free)},                 {"solution_dimension", rep.solution_dimension},
               {"free_generators", rep.free_generators},   {"fiber_free", rep.fiber_free}};
  r.table.headers = {"parameter", "status"};
  for (const auto& p : rep.forced_zero) r.table.rows.push_back({p.label(), "forced zero"});
  for (const auto& p : rep.free) r.table.rows.push_back({p.label(), "free"});
  r.notes.push_back("solution dimension " + std::to_string(rep.solution_dimension));
  return r;
}

cli::Report cmd_center(const std::string& file, const std::string& builtin) {
  const auto lie = load_lie(file, builtin);
  const auto c = center(lie);
  const auto lcs = lower_central_series(lie);
  cli::Report r;
  r.inputs = {{"lie", lie.name()}, {"dimension", lie.dimension()}};
  r.outputs = {{"center_dimension", c.dimension},
               {"center_basis", c.rendered},
               {"lower_central_series", lcs.dimensions},
               {"nilpotent", lcs.nilpotent},
               {"nilpotency_class", lcs.nilpotency_class ? json(*lcs.nilpotency_class) : json()}};
  r.table.headers = {"center basis"};
  for (const auto& s : c.rendered) r.table.rows.push_back({s});
  return r;
}

cli::Report cmd_shift(int n, int kappa, const Globals& g) {
  const Cdga base = upper_tri_model(n);
  const Cdga shifted = degree_shift(base, kappa);
  enforce_ceilings(shifted, g);
  CohomologyOptions o;
  o.jobs = g.jobs;
  const auto b0 = betti(base, o);
  const auto b1 = betti(shifted, o);
  cli::Report r;
  r.inputs = {{"n", n}, {"kappa", kappa}};
  json degrees = json::object();
  for (const auto& gen : shifted.sig().generators()) degrees[gen.name] = gen.degree;
  r.outputs = {{"degrees", degrees}, {"original", to_json(b0)}, {"shifted", to_json(b1)},
               {"totals_equal", b0.total == b1.total}};
  r.table.headers = {"model", "total", "nonzero degrees"};
  auto nz = [](const BettiTable& t) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < t.per_degree.size(); ++i)
      if (t.per_degree[i]) v.push_back(std::to_string(i) + ":" + std::to_string(t.per_degree[i]));
    return join(v, " ");
  };
  r.table.rows.push_back({base.name(), std::to_string(b0.total), nz(b0)});
  r.table.rows.push_back({shifted.name(), std::to_string(b1.total), nz(b1)});
  if (b0.total != b1.total) r.exit_code = 1;
  return r;
}

cli::Report cmd_borel(int rr, const Globals& g) {
  if (rr < 1) throw RangeError("--r must be >= 1");
  const Cdga twisted = borel_twist(xr_model(rr), "x" + std::to_string(rr));
  enforce_ceilings(twisted, g);
  const Cdga reference = xr_model(rr - 1);
  CohomologyOptions o;
  o.jobs = g.jobs;
  const auto w = compare_window(twisted, reference, o);
  cli::Report r;
  r.inputs = {{"r", rr}, {"twisted", twisted.name()}, {"reference", reference.name()},
              {"truncation", *twisted.truncation()}};
  r.outputs = {{"window_max", w.window_max}, {"twisted", w.model}, {"reference", w.reference}, {"agree", w.agree}};
  r.table.headers = {"degree", twisted.name(), reference.name()};
  for (std::size_t i = 0; i < w.model.size(); ++i)
    r.table.rows.push_back({std::to_string(i), std::to_string(w.model[i]), std::to_string(w.reference[i])});
  if (!w.agree) r.exit_code = 1;
  return r;
}

cli::Report cmd_certificate(const std::string& factors, const Globals& g) {
  std::vector<int> rs;
  for (const auto& s : split_list(factors)) {
    try {
      std::size_t used = 0;
      rs.push_back(std::stoi(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw UsageError("--r expects comma-separated integers");
    }
  }
  if (rs.empty()) throw UsageError("--r expects at least one value");
  for (int v : rs)
    if (v < 0 || (v > kMaxTable1Safe && !g.unsafe_large)) throw RangeError("each r must lie in 0..9");
  CohomologyOptions o;
  o.jobs = g.jobs;
  const auto c = certificate_xr_product(rs, o);
  cli::Report r;
  r.inputs = {{"factors", rs}};
  r.outputs["certificate"] = to_json(c);
  r.table.headers = {"factors", "fiber_rank", "total_betti", "2^rank", "total < 2^rank"};
  std::vector<std::string> fs;
  for (int v : rs) fs.push_back(std::to_string(v));
  r.table.rows.push_back({join(fs, "x"), std::to_string(c.fiber_rank), std::to_string(c.total_betti),
                          c.power.get_str(), c.verdict ? "true" : "false"});
  return r;
}

cli::Report cmd_verify(const std::string& file, const std::string& builtin, const std::string& classes) {
  const Cdga c = load_cdga(file, builtin);
  std::vector<Element> elems;
  std::istringstream in(read_file(classes));
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      elems.push_back(dsl::parse_expression(c.signature(), line));
    } catch (const UsageError& e) {
      throw UsageError(classes + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  const auto v = verify_classes(c, elems);
  auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(); };
  cli::Report r;
  r.inputs = {{"model", c.name()}, {"elements", elems.size()}};
  r.outputs = {{"closed", v.closed},
               {"independent", v.independent},
               {"spanning", v.spanning},
               {"closed_witness", opt(v.closed_witness)},
               {"dependence_witness", opt(v.dependence_witness)},
               {"spanning_witness", opt(v.spanning_witness)},
               {"classes_per_degree", v.classes_per_degree}};
  r.table.headers = {"property", "holds", "witness"};
  r.table.rows.push_back({"closed", v.closed ? "true" : "false", v.closed_witness.value_or("")});
  r.table.rows.push_back({"independent", v.independent ? "true" : "false", v.dependence_witness.value_or("")});
  r.table.rows.push_back({"spanning", v.spanning ? "true" : "false", v.spanning_witness.value_or("")});
  if (!v.ok()) r.exit_code = 1;
  return r;
}

void emit(const cli::Report& r, cli::Format f, double ms, bool no_timing) {
  switch (f) {
    case cli::Format::json:
      std::cout << cli::render_json(r, no_timing ? json() : json(ms)).dump(2) << '\n';
      break;
    case cli::Format::csv: std::cout << cli::render_csv(r.table); break;
    case cli::Format::md: std::cout << cli::render_md(r.table, r.notes); break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational models, cohomology and toral-rank certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format: json, csv or md (default $SULLIVAN_FORMAT or json)");
  app.add_option("--jobs", g.jobs, "Degree-level worker threads (default: all cores)")->check(CLI::Range(1u, 1024u));
  app.add_flag("--unsafe-large", g.unsafe_large, "Lift the generator/truncation resource ceilings");
  app.add_flag("--no-timing", g.no_timing, "Emit wall_time_ms as null (byte-stable output)");

  CohomologyArgs coh;
  auto* c_coh = app.add_subcommand("cohomology", "Betti numbers of a model");
  c_coh->add_option("file", coh.file, ".cdga file");
  c_coh->add_option("--builtin", coh.builtin, "Builtin model, e.g. xr:5");
  c_coh->add_flag("--representatives", coh.representatives, "List cocycle representatives");
  c_coh->add_option("--truncate", coh.truncate, "Override the truncation degree");
  c_coh->add_option("--method", coh.method, "exact or multimodular")->check(CLI::IsMember({"exact", "multimodular"}));

  int max_r = kMaxTable1Safe;
  auto* c_t1 = app.add_subcommand("table1", "Total Betti numbers of X_r against 2^r");
  c_t1->add_option("--max-r", max_r, "Largest r");

  std::optional<int> trc_n, trc_k;
  bool scan = false;
  int max_n = 60;
  auto* c_trc = app.add_subcommand("trc", "Exact n! < 2^d(n,k) certificate");
  c_trc->add_option("--n", trc_n, "n");
  c_trc->add_option("--k", trc_k, "k (default ceil(n/2)+1)");
  c_trc->add_flag("--scan-min", scan, "Scan for the least n with n! < 2^d(n, ceil(n/2)+1)");
  c_trc->add_option("--max-n", max_n, "Upper end of the scan");

  int from = 50, to = 80;
  auto* c_ratio = app.add_subcommand("ratio", "Exact ratios n!/2^d(n, ceil(n/2)+1)");
  c_ratio->add_option("--from", from, "First n");
  c_ratio->add_option("--to", to, "Last n");

  int split_n = 0, split_k = 0;
  auto* c_split = app.add_subcommand("split", "Base/fiber split of the upper triangular model");
  c_split->add_option("--n", split_n, "n")->required();
  c_split->add_option("--k", split_k, "k")->required();

  std::string ob_file, ob_builtin, ob_fiber;
  int ob_rank = 1, ob_degree = 2;
  auto* c_ob = app.add_subcommand("obstruction", "Solve the principal twist ansatz");
  c_ob->add_option("file", ob_file, ".cdga file");
  c_ob->add_option("--builtin", ob_builtin, "Builtin model");
  c_ob->add_option("--rank", ob_rank, "Number of twist generators t1..tR");
  c_ob->add_option("--fiber", ob_fiber, "Comma-separated fiber generators");
  c_ob->add_option("--twist-degree", ob_degree, "Degree of the twist generators");

  std::string ce_file, ce_builtin;
  auto* c_center = app.add_subcommand("center", "Center and lower central series of a Lie algebra");
  c_center->add_option("file", ce_file, "file with a lie block (or an algebra to dualize)");
  c_center->add_option("--builtin", ce_builtin, "Lie builtin, or a CDGA builtin to dualize");

  int sh_n = 0, sh_kappa = 0;
  auto* c_shift = app.add_subcommand("shift", "Regrade the upper triangular model");
  c_shift->add_option("--n", sh_n, "n")->required();
  c_shift->add_option("--kappa", sh_kappa, "kappa")->required();

  int borel_r = 5;
  auto* c_borel = app.add_subcommand("borel", "Twist X_r by t at x_r and compare with X_(r-1)");
  c_borel->add_option("--r", borel_r, "r");

  std::string cert_r = "5";
  auto* c_cert = app.add_subcommand("certificate", "Total Betti number of X_r1 (x) X_r2 ... against 2^(sum r)");
  c_cert->add_option("--r", cert_r, "Comma-separated r values, e.g. 5,5");

  std::string vf_file, vf_builtin, vf_classes;
  auto* c_verify = app.add_subcommand("verify-classes", "Check that elements give a basis of cohomology");
  c_verify->add_option("file", vf_file, ".cdga file");
  c_verify->add_option("--builtin", vf_builtin, "Builtin model");
  c_verify->add_option("--classes", vf_classes, "File with one element per line")->required();

  std::string se_builtin;
  auto* c_ser = app.add_subcommand("serialize", "Print a builtin in the .cdga text format");
  c_ser->add_option("--builtin", se_builtin, "Builtin model or Lie algebra")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const cli::Format format = resolve_format(g.format);
    const auto start = std::chrono::steady_clock::now();
    if (*c_ser) {
      std::cout << (is_lie_builtin(se_builtin) ? dsl::serialize(builtin_lie(se_builtin))
                                               : dsl::serialize(builtin_cdga(se_builtin)));
      return 0;
    }
    cli::Report report;
    if (*c_coh) report = cmd_cohomology(coh, g);
    else if (*c_t1) report = cmd_table1(max_r, g);
    else if (*c_trc) report = cmd_trc(trc_n, trc_k, scan, max_n);
    else if (*c_ratio) report = cmd_ratio(from, to);
    else if (*c_split) report = cmd_split(split_n, split_k, g);
    else if (*c_ob) report = cmd_obstruction(ob_file, ob_builtin, ob_rank, ob_fiber, ob_degree);
    else if (*c_center) report = cmd_center(ce_file, ce_builtin);
    else if (*c_shift) report = cmd_shift(sh_n, sh_kappa, g);
    else if (*c_borel) report = cmd_borel(borel_r, g);
    else if (*c_cert) report = cmd_certificate(cert_r, g);
    else if (*c_verify) report = cmd_verify(vf_file, vf_builtin, vf_classes);
    report.command = app.get_subcommands().front()->get_name();
    for (int i = 1; i < argc; ++i) report.argv.emplace_back(argv[i]);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, format, ms, g.no_timing);
    return report.exit_code;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
