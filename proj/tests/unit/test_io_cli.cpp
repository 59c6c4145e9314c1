#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "etaricci/cli.hpp"
#include "etaricci/io.hpp"
#include "etaricci/parse.hpp"
#include "etaricci/solutions.hpp"

using namespace etaricci;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(ETARICCI_SPECS_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("etaricci-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

bool keys_sorted(const Json& j) {
  if (j.is_object()) {
    std::string prev;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() < prev) return false;
      prev = it.key();
      if (!keys_sorted(it.value())) return false;
    }
  } else if (j.is_array()) {
    for (const Json& e : j)
      if (!keys_sorted(e)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("metric JSON round trip") {
  const Json j = parse_json_text(R"js({"f1": "exp(-x3)", "f2": 2, "domain": {"x2": [0.5, 2]}})js");
  const DiagonalMetric m = metric_from_json(j);
  CHECK(m.domain().interval(Axis::X2).lo == 0.5);
  CHECK(m.domain().interval(Axis::X1).lo == -1.0);
  CHECK(m.f2().is_literal(2.0));
  const DiagonalMetric back = metric_from_json(metric_to_json(m));
  CHECK(back.f1().to_string() == m.f1().to_string());
  CHECK(back.domain().interval(Axis::X2).hi == 2.0);
}

TEST_CASE("soliton JSON round trip for the whole catalogue") {
  const Point p{0.3, 0.7, -0.2};
  for (const CatalogueEntry& e : builtin_examples()) {
    CAPTURE(e.name);
    const SolitonData back = soliton_from_json(parse_json_text(soliton_to_json(e.soliton).dump()));
    for (int k = 0; k < 3; ++k) {
      CHECK(eval(back.v.frame[k], p) == doctest::Approx(eval(e.soliton.v.frame[k], p)).epsilon(1e-14));
      CHECK(eval(back.eta.frame[k], p) ==
            doctest::Approx(eval(e.soliton.eta.frame[k], p)).epsilon(1e-14));
    }
    CHECK(eval(back.mu, p) == doctest::Approx(eval(e.soliton.mu, p)).epsilon(1e-14));
    CHECK(residual(back).verdict);
  }
}

TEST_CASE("coordinate basis in soliton specs") {
  const SolitonData s = soliton_from_json(read_json_file(spec("sol3_soliton.json")));
  const Point p{0.1, 0.2, 0.5};
  CHECK(eval(s.v.frame[0], p) == doctest::Approx(std::exp(0.5)));  // V^1 = v^1 / f1
  CHECK(eval(s.eta.frame[2], p) == 1.0);
  CHECK(residual(s).verdict);
}

TEST_CASE("spec errors name the file and field") {
  TempDir dir;
  const std::string broken = dir.write("broken.json", "{\n  \"f1\": \"1\",\n  \"f2\": \n}\n");
  try {
    read_json_file(broken);
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find(broken + ":4:") != std::string::npos);
  }
  CHECK_THROWS_AS(metric_from_json(parse_json_text(R"js({"f1": "1"})js")), SpecError);
  CHECK_THROWS_AS(metric_from_json(parse_json_text(R"js({"f1": "1", "f2": "x1 +"})js")), Error);
  CHECK_THROWS_AS(metric_from_json(parse_json_text(R"js({"f1": 1, "f2": 1, "domain": {"x4": [0, 1]}})js")),
                  SpecError);
  CHECK_THROWS_AS(read_json_file(dir.file("missing.json")), SpecError);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"curvature", spec("sol3.json")}).code == kExitPass);
  CHECK(cli({"curvature", spec("sol3.json"), "--verify"}).code == kExitPass);
  CHECK(cli({"flatness", spec("flat_reciprocal.json")}).code == kExitPass);
  CHECK(cli({"flatness", spec("sol3.json")}).code == kExitPass);
  CHECK(cli({"check-soliton", spec("sol3_soliton.json")}).code == kExitPass);
  CHECK(cli({"check-soliton", spec("h2xr_soliton.json"), "--specialize", "BOTH"}).code == kExitPass);
  CHECK(cli({"examples"}).code == kExitPass);
  CHECK(cli({"verify"}).code == kExitPass);

  CHECK(cli({}).code == kExitInputError);
  CHECK(cli({"bogus"}).code == kExitInputError);
  CHECK(cli({"curvature", spec("no_such_file.json")}).code == kExitInputError);
  CHECK(cli({"--grid", "2", "examples"}).code == kExitInputError);
  CHECK(cli({"solve", spec("h2xr.json"), "--theorem", "nb"}).code == kExitInputError);
  CHECK(cli({"solve", spec("sol3.json"), "--theorem", "gs", "--set", "nonsense"}).code ==
        kExitInputError);
  const CliResult r = cli({"check-soliton", spec("sol3_soliton.json"), "--specialize", "V3"});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("check-soliton fails on a perturbed soliton") {
  TempDir dir;
  Json j = read_json_file(spec("sol3_soliton.json"));
  j["mu"] = "2.1";
  const std::string path = dir.write("perturbed.json", j.dump());
  const CliResult r = cli({"--output", "json", "check-soliton", path});
  CHECK(r.code == kExitVerdictFail);
  const Json report = Json::parse(r.out);
  CHECK_FALSE(report["verdict"].get<bool>());
  CHECK(report["equations"][2]["equation"] == Json::array({3, 3}));
  CHECK(report["equations"][2]["max_abs"].get<double>() == doctest::Approx(0.1));
}

TEST_CASE("json output has sorted keys") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--output", "json", "curvature", spec("sol3.json"), "--verify"},
        std::vector<std::string>{"--output", "json", "flatness", spec("h2xr.json")},
        std::vector<std::string>{"--output", "json", "check-soliton", spec("sol3_soliton.json")},
        std::vector<std::string>{"--output", "json", "examples"}}) {
    const CliResult r = cli(args);
    CHECK(r.code == kExitPass);
    CHECK(keys_sorted(Json::parse(r.out)));
  }
}

TEST_CASE("solve then check-soliton round trip for the catalogue") {
  TempDir dir;
  for (const CatalogueEntry& e : builtin_examples()) {
    if (e.theorem.empty()) continue;
    CAPTURE(e.name);
    const std::string metric_path = dir.write(e.name + "_metric.json",
                                              metric_to_json(e.soliton.metric).dump());
    std::vector<std::string> args{"solve", metric_path, "--theorem", e.theorem};
    for (const auto& [k, v] : e.theorem_params) {
      args.push_back("--set");
      args.push_back(k + "=" + v);
    }
    const std::string out_path = dir.file(e.name + "_soliton.json");
    args.push_back("-o");
    args.push_back(out_path);
    const CliResult solved = cli(args);
    CHECK(solved.code == kExitPass);
    CHECK(solved.out.find("PASS") != std::string::npos);
    const CliResult checked = cli({"check-soliton", out_path});
    CHECK(checked.code == kExitPass);
    CHECK(checked.out.find("verdict: PASS") != std::string::npos);
  }
}
