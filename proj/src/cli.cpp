#include "etaricci/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "etaricci/io.hpp"
#include "etaricci/oracle.hpp"
#include "etaricci/parse.hpp"
#include "etaricci/solutions.hpp"

namespace etaricci {

namespace {

struct RunConfig {
  int grid_n = kDefaultGrid;
  double tol_flat = kDefaultTolFlat;
  double tol_soliton = kDefaultTolSoliton;
  double fd_step = kDefaultFdStep;
  std::string output = "text";

  bool json() const { return output == "json"; }
  SolitonOptions soliton() const { return {grid_n, tol_soliton}; }
};

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

std::string domain_text(const DomainBox& box) {
  std::ostringstream out;
  for (Axis a : kAxes) {
    const Interval& iv = box.interval(a);
    if (a != Axis::X1) out << " x ";
    out << "[" << fmt(iv.lo) << ", " << fmt(iv.hi) << "]";
  }
  return out.str();
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

bool is_soliton_spec(const Json& j) { return j.is_object() && j.contains("metric"); }

// ---- curvature -------------------------------------------------------------

int cmd_curvature(const std::string& path, bool verify, const RunConfig& cfg, std::ostream& out) {
  const DiagonalMetric m = metric_from_json(read_json_file(path), path);
  m.check_nonvanishing(cfg.grid_n);
  const FrameMatrix ric = ricci_frame(m);
  const std::vector<Point> points = m.domain().grid(cfg.grid_n);

  Json entries = Json::object();
  std::vector<std::string> lines;
  for (const auto& [i, j] : kEquationPairs) {
    const SampleStats s = sample(ric[i - 1][j - 1], points);
    const std::string key = std::to_string(i) + std::to_string(j);
    entries[key] = {{"min", s.min}, {"max", s.max}};
    lines.push_back("  Ric(E" + std::to_string(i) + ",E" + std::to_string(j) + ")  min " +
                    fmt(s.min) + "  max " + fmt(s.max));
  }
  const double sup = riemann_sup_norm(m, cfg.grid_n);

  Json report{{"case", to_string(classify(m))},
              {"grid", cfg.grid_n},
              {"domain", metric_to_json(m)["domain"]},
              {"ricci", entries},
              {"riemann_sup", sup}};
  int code = kExitPass;
  OracleComparison cmp;
  if (verify) {
    cmp = compare_ricci(m, cfg.grid_n, 1e-4, cfg.fd_step);
    report["verify"] = {{"points", cmp.points},
                        {"max_abs_diff", cmp.max_abs_diff},
                        {"agrees", cmp.agrees}};
    if (!cmp.agrees) code = kExitVerdictFail;
  }

  if (cfg.json()) {
    dump(out, report);
    return code;
  }
  out << "case: " << to_string(classify(m)) << "\n";
  out << "grid: " << cfg.grid_n << "^3 on " << domain_text(m.domain()) << "\n";
  out << "Ricci tensor in the frame basis:\n";
  for (const std::string& l : lines) out << l << "\n";
  out << "max |R(Ei,Ej)Ek|: " << fmt(sup) << "\n";
  if (verify)
    out << "coordinate oracle: " << cmp.points << " points, max diff " << fmt(cmp.max_abs_diff)
        << (cmp.agrees ? " (agrees)" : " (DISAGREES)") << "\n";
  return code;
}

// ---- flatness --------------------------------------------------------------

int cmd_flatness(const std::string& path, const std::string& as_case, const RunConfig& cfg,
                 std::ostream& out) {
  const DiagonalMetric m = metric_from_json(read_json_file(path), path);
  FlatnessOptions opts;
  if (!as_case.empty()) opts.as_case = case_tag_from_string(as_case);
  opts.grid_n = cfg.grid_n;
  opts.tol_flat = cfg.tol_flat;
  const FlatnessVerdict v = flatness_criterion(m, opts);
  const int code = v.agrees.value_or(true) ? kExitPass : kExitVerdictFail;
  if (cfg.json()) {
    dump(out, to_json(v));
    return code;
  }
  out << "case: " << to_string(v.tag) << "\n";
  out << "criterion: " << v.criterion_description << "\n";
  if (v.criterion_holds)
    out << "criterion holds: " << (*v.criterion_holds ? "yes (flat)" : "no (curved)") << "\n";
  out << "max |R(Ei,Ej)Ek| on grid: " << fmt(v.numeric_sup) << "\n";
  if (v.agrees) out << "numeric verdict agrees: " << (*v.agrees ? "yes" : "NO") << "\n";
  return code;
}

// ---- check-soliton ---------------------------------------------------------

void print_report(std::ostream& out, const ResidualReport& r) {
  out << "equation    max_abs         rms             normalized\n";
  for (const EquationResidual& e : r.equations)
    out << "(" << e.i << "," << e.j << ")       " << std::left << std::setw(16) << fmt(e.max_abs)
        << std::setw(16) << fmt(e.rms) << fmt(e.normalized) << std::right << "\n";
  out << "scale (1 + max |Ric|): " << fmt(r.scale) << "\n";
  out << "tolerance: " << fmt(r.tol) << " on " << r.grid_n << "^3 grid\n";
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";
}

int cmd_check_soliton(const std::string& path, const std::string& specialize,
                      const RunConfig& cfg, std::ostream& out) {
  const SolitonData s = soliton_from_json(read_json_file(path), path);
  ResidualReport r;
  if (specialize.empty()) {
    r = residual(s, cfg.soliton());
  } else {
    const Specialization which = specialize == "V3"     ? Specialization::V3
                                 : specialize == "ETA3" ? Specialization::ETA3
                                                        : Specialization::BOTH;
    r = residual_specialized(s, which, cfg.soliton());
  }
  const std::string kind = to_string(soliton_kind(s, cfg.grid_n));
  if (cfg.json()) {
    Json j = to_json(r);
    j["kind"] = kind;
    dump(out, j);
  } else {
    print_report(out, r);
    out << "kind: " << kind << "\n";
  }
  return r.verdict ? kExitPass : kExitVerdictFail;
}

// ---- solve -----------------------------------------------------------------

std::map<std::string, std::string> parse_sets(const std::vector<std::string>& sets) {
  std::map<std::string, std::string> params;
  for (const std::string& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw PreconditionError("--set expects key=value, got '" + s + "'");
    params[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return params;
}

int cmd_solve(const std::string& path, const std::string& theorem,
              const std::vector<std::string>& sets, const std::string& output_path,
              const RunConfig& cfg, std::ostream& out) {
  const DiagonalMetric m = metric_from_json(read_json_file(path), path);
  const SolitonData s = solve_by_name(m, theorem, parse_sets(sets), cfg.grid_n);
  const ResidualReport r = residual(s, cfg.soliton());
  const Json spec = soliton_to_json(s);
  if (output_path.empty()) {
    dump(out, spec);
  } else {
    std::ofstream file(output_path);
    if (!file) throw SpecError(output_path, "cannot write file");
    dump(file, spec);
    out << "wrote " << output_path << " (theorem " << theorem << ", residual "
        << (r.verdict ? "PASS" : "FAIL") << ", max " << fmt(r.worst().max_abs) << ")\n";
  }
  return r.verdict ? kExitPass : kExitVerdictFail;
}

// ---- examples --------------------------------------------------------------

int cmd_examples(const RunConfig& cfg, std::ostream& out) {
  Json rows = Json::array();
  bool all = true;
  if (!cfg.json())
    out << std::left << std::setw(18) << "name" << std::setw(8) << "verdict" << std::setw(14)
        << "max residual" << "kind\n";
  for (const CatalogueEntry& e : builtin_examples()) {
    const ResidualReport r = residual(e.soliton, cfg.soliton());
    const SolitonKind kind = soliton_kind(e.soliton, cfg.grid_n);
    const bool ok = r.verdict && kind == e.kind;
    all = all && ok;
    if (cfg.json()) {
      rows.push_back({{"name", e.name},
                      {"description", e.description},
                      {"verdict", r.verdict},
                      {"max_residual", r.worst().max_abs},
                      {"kind", to_string(kind)},
                      {"expected_kind", to_string(e.kind)},
                      {"pass", ok}});
    } else {
      out << std::setw(18) << e.name << std::setw(8) << (ok ? "pass" : "FAIL") << std::setw(14)
          << fmt(r.worst().max_abs) << to_string(kind) << "\n";
    }
  }
  out << std::right;
  if (cfg.json()) dump(out, rows);
  return all ? kExitPass : kExitVerdictFail;
}

// ---- verify ----------------------------------------------------------------

struct VerifyTarget {
  std::string name;
  DiagonalMetric metric;
  std::optional<VectorField> v;
};

int cmd_verify(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  std::vector<VerifyTarget> targets;
  if (path.empty()) {
    for (const CatalogueEntry& e : builtin_examples())
      targets.push_back({e.name, e.soliton.metric, e.soliton.v});
  } else {
    const Json j = read_json_file(path);
    if (is_soliton_spec(j)) {
      const SolitonData s = soliton_from_json(j, path);
      targets.push_back({path, s.metric, s.v});
    } else {
      targets.push_back({path, metric_from_json(j, path), std::nullopt});
    }
  }

  Json rows = Json::array();
  bool all = true;
  for (const VerifyTarget& t : targets) {
    t.metric.check_nonvanishing(cfg.grid_n);
    const OracleComparison ric = compare_ricci(t.metric, cfg.grid_n, 1e-4, cfg.fd_step);
    const OracleComparison br = compare_brackets(t.metric, cfg.grid_n, 1e-6, cfg.fd_step);
    std::optional<OracleComparison> lie;
    if (t.v) lie = compare_lie_derivative(t.metric, *t.v, cfg.grid_n, 1e-4, cfg.fd_step);
    const bool ok = ric.agrees && br.agrees && (!lie || lie->agrees);
    all = all && ok;
    if (cfg.json()) {
      Json row{{"name", t.name},
               {"ricci_max_diff", ric.max_abs_diff},
               {"bracket_max_diff", br.max_abs_diff},
               {"pass", ok}};
      row["lie_max_diff"] = lie ? Json(lie->max_abs_diff) : Json(nullptr);
      rows.push_back(row);
    } else {
      out << std::left << std::setw(20) << t.name << std::right << " ricci " << fmt(ric.max_abs_diff)
          << "  brackets " << fmt(br.max_abs_diff);
      if (lie) out << "  lie " << fmt(lie->max_abs_diff);
      out << "  " << (ok ? "pass" : "FAIL") << "\n";
    }
  }
  if (cfg.json()) dump(out, rows);
  return all ? kExitPass : kExitVerdictFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature, flatness and almost eta-Ricci solitons of diagonal 3-metrics",
               "etaricci"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--grid", cfg.grid_n, "Grid points per axis")
      ->check(CLI::Range(3, 1000))
      ->capture_default_str();
  app.add_option("--tol-flat", cfg.tol_flat, "Flatness tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-soliton", cfg.tol_soliton, "Soliton residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--fd-step", cfg.fd_step, "Finite-difference step for oracles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file;
  bool verify = false;
  auto* curvature = app.add_subcommand("curvature", "Ricci tensor and Riemann sup-norm");
  curvature->add_option("metric", file, "Metric spec (JSON)")->required();
  curvature->add_flag("--verify", verify, "Compare with the coordinate oracle");

  auto* flatness = app.add_subcommand("flatness", "Flatness criterion vs numeric curvature");
  flatness->add_option("metric", file, "Metric spec (JSON)")->required();
  std::string as_case;
  flatness->add_option("--case", as_case, "Use this case's criterion (the metric must fit it)")
      ->check(CLI::IsMember({"SEP", "BOTH3", "X1X3", "BOTH2", "X2X1", "X2X3"}));

  std::string specialize;
  auto* check = app.add_subcommand("check-soliton", "Residuals of the soliton equation");
  check->add_option("soliton", file, "Soliton spec (JSON)")->required();
  check->add_option("--specialize", specialize, "Use the reduced system for pinned V/eta")
      ->check(CLI::IsMember({"V3", "ETA3", "BOTH"}));

  std::string theorem;
  std::vector<std::string> sets;
  std::string output_path;
  auto* solve = app.add_subcommand("solve", "Construct a soliton for a metric");
  solve->add_option("metric", file, "Metric spec (JSON)")->required();
  solve->add_option("--theorem", theorem, "Construction to use")
      ->required()
      ->check(CLI::IsMember(theorem_names()));
  solve->add_option("--set", sets, "Parameter key=value (repeatable)")->allow_extra_args(false);
  solve->add_option("-o,--out", output_path, "Write the soliton spec here");

  auto* examples = app.add_subcommand("examples", "Check the built-in catalogue");

  auto* verify_cmd = app.add_subcommand("verify", "Finite-difference oracle cross-checks");
  verify_cmd->add_option("spec", file, "Metric or soliton spec; default: the catalogue");

  for (CLI::App* sub : {curvature, flatness, check, solve, examples, verify_cmd})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*curvature) return cmd_curvature(file, verify, cfg, out);
    if (*flatness) return cmd_flatness(file, as_case, cfg, out);
    if (*check) return cmd_check_soliton(file, specialize, cfg, out);
    if (*solve) return cmd_solve(file, theorem, sets, output_path, cfg, out);
    if (*examples) return cmd_examples(cfg, out);
    if (*verify_cmd) return cmd_verify(file, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace etaricci
