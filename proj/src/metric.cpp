#include "etaricci/metric.hpp"

#include <cmath>
#include <sstream>

namespace etaricci {

DiagonalMetric::DiagonalMetric(ScalarExpr f1, ScalarExpr f2, DomainBox domain)
    : f1_(std::move(f1)), f2_(std::move(f2)), domain_(domain) {}

ScalarExpr DiagonalMetric::scale(Axis axis) const {
  switch (axis) {
    case Axis::X1:
      return f1_;
    case Axis::X2:
      return f2_;
    case Axis::X3:
      return 1.0;
  }
  return 1.0;
}

ScalarExpr DiagonalMetric::frame_derivative(Axis axis, const ScalarExpr& phi) const {
  return scale(axis) * diff(phi, axis);
}

void DiagonalMetric::check_nonvanishing(int grid_n) const {
  for (const Point& p : domain_.grid(grid_n)) {
    for (int i = 0; i < 2; ++i) {
      const ScalarExpr& f = i == 0 ? f1_ : f2_;
      const double v = eval(f, p);
      if (!(std::fabs(v) > kNonzeroThreshold)) {
        std::ostringstream msg;
        msg << "f" << i + 1 << " vanishes at (" << p[0] << ", " << p[1] << ", " << p[2] << ")";
        throw PreconditionError(msg.str());
      }
    }
  }
}

StructureFunctions structure_functions(const DiagonalMetric& m) {
  const ScalarExpr& f1 = m.f1();
  const ScalarExpr& f2 = m.f2();
  return {
      f2 / f1 * diff(f1, Axis::X2),
      ScalarExpr(1.0) / f1 * diff(f1, Axis::X3),
      f1 / f2 * diff(f2, Axis::X1),
      ScalarExpr(1.0) / f2 * diff(f2, Axis::X3),
  };
}

FrameVector LieBracketTable::bracket(Axis i, Axis j) const {
  if (i == j) return {0.0, 0.0, 0.0};
  const bool flip = index(i) > index(j);
  const Axis lo = flip ? j : i;
  const Axis hi = flip ? i : j;
  const FrameVector* v = nullptr;
  if (lo == Axis::X1 && hi == Axis::X2)
    v = &e1e2;
  else if (lo == Axis::X1 && hi == Axis::X3)
    v = &e1e3;
  else
    v = &e2e3;
  if (!flip) return *v;
  return {-(*v)[0], -(*v)[1], -(*v)[2]};
}

LieBracketTable lie_bracket_table(const DiagonalMetric& m) {
  const auto [a, b, c, d] = structure_functions(m);
  return {
      {-a, c, 0.0},
      {-b, 0.0, 0.0},
      {0.0, -d, 0.0},
  };
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::SEP:
      return "SEP";
    case CaseTag::BOTH3:
      return "BOTH3";
    case CaseTag::X1X3:
      return "X1X3";
    case CaseTag::BOTH2:
      return "BOTH2";
    case CaseTag::X2X1:
      return "X2X1";
    case CaseTag::X2X3:
      return "X2X3";
    case CaseTag::GENERAL:
      return "GENERAL";
  }
  return "GENERAL";
}

CaseTag case_tag_from_string(const std::string& name) {
  for (CaseTag t : {CaseTag::SEP, CaseTag::BOTH3, CaseTag::X1X3, CaseTag::BOTH2, CaseTag::X2X1,
                    CaseTag::X2X3, CaseTag::GENERAL})
    if (to_string(t) == name) return t;
  throw PreconditionError("unknown case tag '" + name + "'");
}

bool fits_case(const DiagonalMetric& m, CaseTag tag) {
  const AxisSet s1 = m.f1().free_axes();
  const AxisSet s2 = m.f2().free_axes();
  auto on = [&](Axis a1, Axis a2) {
    return s1.subset_of(AxisSet{a1}) && s2.subset_of(AxisSet{a2});
  };
  switch (tag) {
    case CaseTag::SEP:
      return on(Axis::X1, Axis::X2);
    case CaseTag::BOTH3:
      return on(Axis::X3, Axis::X3);
    case CaseTag::X1X3:
      return on(Axis::X1, Axis::X3);
    case CaseTag::BOTH2:
      return on(Axis::X2, Axis::X2);
    case CaseTag::X2X1:
      return on(Axis::X2, Axis::X1);
    case CaseTag::X2X3:
      return on(Axis::X2, Axis::X3);
    case CaseTag::GENERAL:
      return true;
  }
  return true;
}

CaseTag classify(const DiagonalMetric& m) {
  for (CaseTag t : {CaseTag::SEP, CaseTag::BOTH3, CaseTag::X1X3, CaseTag::BOTH2, CaseTag::X2X1,
                    CaseTag::X2X3})
    if (fits_case(m, t)) return t;
  return CaseTag::GENERAL;
}

VectorField VectorField::from_coordinates(const CoordinateTriple& coords,
                                          const DiagonalMetric& m) {
  return {FrameVector{coords[0] / m.f1(), coords[1] / m.f2(), coords[2]}};
}

OneForm OneForm::from_coordinates(const CoordinateTriple& coords, const DiagonalMetric& m) {
  return {FrameVector{coords[0] * m.f1(), coords[1] * m.f2(), coords[2]}};
}

CoordinateTriple to_coordinate_components(const VectorField& v, const DiagonalMetric& m) {
  return {v.frame[0] * m.f1(), v.frame[1] * m.f2(), v.frame[2]};
}

CoordinateTriple to_coordinate_components(const OneForm& eta, const DiagonalMetric& m) {
  return {eta.frame[0] / m.f1(), eta.frame[1] / m.f2(), eta.frame[2]};
}

std::array<double, 3> evaluate(const FrameVector& v, const Point& p) {
  return {eval(v[0], p), eval(v[1], p), eval(v[2], p)};
}

}  // namespace etaricci
