#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plab/errors.hpp"
#include "plab/multi_poly.hpp"

namespace plab {

struct DegenerateElimination : Error {
  using Error::Error;
};

/// Point of P^2 over Q(rho), normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(Eis x0, Eis x1, Eis x2);
  explicit ProjectivePoint(const std::array<Eis, 3>& c) : ProjectivePoint(c[0], c[1], c[2]) {}

  const std::array<Eis, 3>& coords() const { return coords_; }
  const Eis& operator[](std::size_t i) const { return coords_[i]; }
  std::vector<Eis> vec() const { return {coords_.begin(), coords_.end()}; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& x, const ProjectivePoint& y) { return x.coords_ <=> y.coords_; }

  /// `(1 : 0 : rho)`
  std::string str() const;

 private:
  std::array<Eis, 3> coords_;
};

/// Parses `a:b:c` where each part is a constant of the scalar grammar.
ProjectivePoint parse_point(std::string_view text);

/// Plane projective curve: nonzero homogeneous polynomial in 3 variables.
class PlaneCurve {
 public:
  explicit PlaneCurve(MultiPoly equation);

  const MultiPoly& equation() const { return equation_; }
  int degree() const { return degree_; }
  bool lambda_free() const { return equation_.lambda_free(); }
  PlaneCurve specialize(const Eis& lambda) const { return PlaneCurve(equation_.specialize_lambda(lambda)); }
  bool contains(const ProjectivePoint& p) const;

 private:
  MultiPoly equation_;
  int degree_;
};

enum class SingularityKind { Node, Cusp, Tacnode, Ordinary, Unclassified };

struct SingularityRecord {
  ProjectivePoint point;
  int multiplicity = 0;
  SingularityKind kind = SingularityKind::Unclassified;
  /// Exact for classified kinds; a lower bound when kind is Unclassified.
  int delta = 0;
  /// Milnor number; 0 when unknown (Unclassified).
  int milnor = 0;

  /// `A1`, `A2`, `A3`, `ordinary-3`, `unclassified`.
  std::string kind_name() const;
  /// Contribution to d(d-1) - class: mu + m - 1 (2 for a node, 3 for a cusp,
  /// 4 for a tacnode, i.e. a tacnode counts as two nodes).
  int class_drop() const { return milnor + multiplicity - 1; }
};

struct SingularLocus {
  std::vector<ProjectivePoint> points;
  /// False when some candidate coordinates do not lie in Q(rho).
  bool complete = true;
  std::vector<std::string> notes;
};

/// Common zeros of the three partials with coordinates in Q(rho).
/// The curve must be lambda-free (DomainError otherwise).
SingularLocus singular_locus(const PlaneCurve& c);

/// Multiplicity and type of a singular point.  Throws DomainError when the
/// point is not on the curve or is a smooth point.
SingularityRecord classify_singularity(const PlaneCurve& c, const ProjectivePoint& p);

std::vector<SingularityRecord> classify_all(const PlaneCurve& c, const SingularLocus& locus);

/// det of the matrix of second partials; degree 3(d - 2).
MultiPoly hessian(const PlaneCurve& c);

struct FlexResult {
  /// Flexes whose coordinates lie in Q(rho).
  std::vector<ProjectivePoint> points;
  /// Intersection number of the curve with its Hessian away from the
  /// singular points.
  int count_with_multiplicity = 0;
  /// The count is exact (the singular locus was fully resolved).
  bool complete = true;
  /// Every flex appears in `points`.
  bool points_complete = true;
  std::vector<std::string> notes;
};

/// Curve/Hessian intersection at smooth points.  DomainError when the
/// Hessian vanishes identically or shares a component with the curve.
FlexResult flexes(const PlaneCurve& c);

struct DualCurveResult {
  PlaneCurve curve;
  /// Class d(d-1) - sum(mu + m - 1) when every singularity was classified.
  std::optional<int> predicted_class{};
  std::vector<std::string> notes{};
};

/// Dual curve in the variables u0, u1, u2 (x0, x1, x2 when the input already
/// uses u-variables).  Degree 2..4 only.
DualCurveResult dual_curve_report(const PlaneCurve& c);
PlaneCurve dual_curve(const PlaneCurve& c);

struct GenusResult {
  int genus = 0;
  /// Negative genus: the curve cannot be irreducible.
  bool reducibility_warning = false;
};

/// (d-1)(d-2)/2 - sum of delta invariants.
GenusResult geometric_genus(const PlaneCurve& c, const std::vector<SingularityRecord>& sings);

/// d(d-1) - sum of class drops.
int predicted_class(int degree, const std::vector<SingularityRecord>& sings);

/// Everything `curve analyze` reports.
struct CurveAnalysis {
  PlaneCurve curve;
  SingularLocus locus{};
  std::vector<SingularityRecord> singularities{};
  std::optional<FlexResult> flex{};
  GenusResult genus{};
  int nodes = 0;  // tacnodes counted as two nodes
  int cusps = 0;
  std::vector<std::string> notes{};
};

CurveAnalysis analyze_curve(const PlaneCurve& c);

}  // namespace plab
