#include "etaricci/io.hpp"

#include <fstream>
#include <sstream>

#include "etaricci/parse.hpp"

namespace etaricci {

namespace {

// 1-based line and column of a byte offset.
std::string position_text(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

ScalarExpr expr_field(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw SpecError(where, "expected an expression string or a number");
  const std::string text = j.get<std::string>();
  try {
    return parse_expr(text);
  } catch (const ParseError& e) {
    throw SpecError(where, std::string("cannot parse `") + text + "`: " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SpecError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Interval interval_field(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SpecError(where, "expected [lo, hi]");
  const Interval iv{j[0].get<double>(), j[1].get<double>()};
  if (!(iv.lo < iv.hi)) throw SpecError(where, "interval needs lo < hi");
  return iv;
}

std::array<ScalarExpr, 3> triple_field(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw SpecError(where, "expected three components");
  return {expr_field(j[0], where + "[0]"), expr_field(j[1], where + "[1]"),
          expr_field(j[2], where + "[2]")};
}

std::string basis_field(const Json& j, const std::string& where) {
  const Json& b = require(j, "basis", where);
  if (!b.is_string() || (b != "frame" && b != "coordinate"))
    throw SpecError(where + ".basis", "expected \"frame\" or \"coordinate\"");
  return b.get<std::string>();
}

Json triple_json(const FrameVector& v) {
  return Json::array({v[0].to_string(), v[1].to_string(), v[2].to_string()});
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw SpecError(source + ":" + position_text(text, byte), "invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

DiagonalMetric metric_from_json(const Json& j, const std::string& source) {
  const ScalarExpr f1 = expr_field(require(j, "f1", source), source + ": f1");
  const ScalarExpr f2 = expr_field(require(j, "f2", source), source + ": f2");
  std::array<Interval, 3> sides{Interval{-1.0, 1.0}, Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
  if (auto it = j.find("domain"); it != j.end()) {
    if (!it->is_object()) throw SpecError(source + ": domain", "expected an object");
    for (const auto& [key, value] : it->items()) {
      if (key != "x1" && key != "x2" && key != "x3")
        throw SpecError(source + ": domain", "unknown axis \"" + key + "\"");
      sides[key[1] - '1'] = interval_field(value, source + ": domain." + key);
    }
  }
  return DiagonalMetric(f1, f2, DomainBox(sides[0], sides[1], sides[2]));
}

Json metric_to_json(const DiagonalMetric& m) {
  Json domain = Json::object();
  for (Axis a : kAxes) {
    const Interval& iv = m.domain().interval(a);
    domain["x" + std::to_string(number(a))] = Json::array({iv.lo, iv.hi});
  }
  return Json{{"f1", m.f1().to_string()}, {"f2", m.f2().to_string()}, {"domain", domain}};
}

SolitonData soliton_from_json(const Json& j, const std::string& source) {
  const DiagonalMetric m = metric_from_json(require(j, "metric", source), source + ": metric");

  const Json& jv = require(j, "V", source);
  const std::string vb = basis_field(jv, source + ": V");
  const auto vc = triple_field(require(jv, "components", source + ": V"), source + ": V.components");
  const VectorField v = vb == "frame" ? VectorField{vc} : VectorField::from_coordinates(vc, m);

  OneForm eta = OneForm::zero();
  if (auto it = j.find("eta"); it != j.end() && !it->is_null()) {
    const std::string eb = basis_field(*it, source + ": eta");
    const auto ec =
        triple_field(require(*it, "components", source + ": eta"), source + ": eta.components");
    eta = eb == "frame" ? OneForm{ec} : OneForm::from_coordinates(ec, m);
  }
  const ScalarExpr lambda = expr_field(require(j, "lambda", source), source + ": lambda");
  ScalarExpr mu = 0.0;
  if (auto it = j.find("mu"); it != j.end()) mu = expr_field(*it, source + ": mu");
  return SolitonData{m, v, eta, lambda, mu};
}

Json soliton_to_json(const SolitonData& s) {
  return Json{{"metric", metric_to_json(s.metric)},
              {"V", {{"basis", "frame"}, {"components", triple_json(s.v.frame)}}},
              {"eta", {{"basis", "frame"}, {"components", triple_json(s.eta.frame)}}},
              {"lambda", s.lambda.to_string()},
              {"mu", s.mu.to_string()}};
}

Json to_json(const ResidualReport& r) {
  Json eqs = Json::array();
  for (const EquationResidual& e : r.equations)
    eqs.push_back({{"equation", {e.i, e.j}},
                   {"max_abs", e.max_abs},
                   {"rms", e.rms},
                   {"normalized", e.normalized}});
  return Json{{"equations", eqs},     {"scale", r.scale},       {"grid", r.grid_n},
              {"tolerance", r.tol},   {"verdict", r.verdict},   {"warnings", r.warnings}};
}

Json to_json(const FlatnessVerdict& v) {
  Json out{{"case", to_string(v.tag)},
           {"criterion", v.criterion_description},
           {"numeric_sup", v.numeric_sup}};
  out["criterion_holds"] = v.criterion_holds ? Json(*v.criterion_holds) : Json(nullptr);
  out["agrees"] = v.agrees ? Json(*v.agrees) : Json(nullptr);
  return out;
}

}  // namespace etaricci
