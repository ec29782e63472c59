#pragma once

#include <array>
#include <string>
#include <vector>

#include "plab/curve.hpp"
#include "plab/roots.hpp"

namespace plab {

/// Invertible 3x3 matrix over Q(rho) up to scalars; the first nonzero entry
/// of the stored matrix is 1.
class ProjectiveTransform {
 public:
  using Matrix = std::array<std::array<Eis, 3>, 3>;

  explicit ProjectiveTransform(Matrix m);
  static ProjectiveTransform identity();

  const Matrix& matrix() const { return m_; }
  ProjectivePoint apply(const ProjectivePoint& p) const;
  ProjectiveTransform inverse() const;
  bool is_identity() const { return *this == identity(); }

  /// (g * h)(p) = g(h(p))
  friend ProjectiveTransform operator*(const ProjectiveTransform& g, const ProjectiveTransform& h);
  friend bool operator==(const ProjectiveTransform&, const ProjectiveTransform&) = default;
  friend auto operator<=>(const ProjectiveTransform& x, const ProjectiveTransform& y) { return x.m_ <=> y.m_; }

  /// `[[0, 1, 0], [0, 0, 1], [1, 0, 0]]`
  std::string str() const;

 private:
  Matrix m_;
};

ProjectiveTransform heisenberg_sigma();
ProjectiveTransform heisenberg_tau();
ProjectiveTransform heisenberg_iota();

/// Closure of {sigma, tau, iota} modulo scalars, sorted.
const std::vector<ProjectiveTransform>& enumerate_group();

/// Order of g in the projective group.
int element_order(const ProjectiveTransform& g);

/// Curve equation transformed by g: f o g^-1.
MultiPoly act_on_poly(const ProjectiveTransform& g, const MultiPoly& f);

struct Orbit {
  std::vector<ProjectivePoint> points;  // sorted
  std::size_t size() const { return points.size(); }
  bool contains(const ProjectivePoint& p) const;
};

Orbit orbit(const ProjectivePoint& p);

struct FixedLine {
  std::string name;  // l_ji
  MultiPoly equation;
};

struct FixedLocus {
  std::vector<FixedLine> lines;                                 // 9
  std::vector<std::pair<std::string, ProjectivePoint>> points;  // the 9 y_ji
  std::vector<ProjectivePoint> triple_points;                   // 12, sorted
};

FixedLocus fixed_locus();

/// Representatives of the orbits of size 3 in table order: (1:0:0), (1:1:1),
/// (1:1:rho), (1:1:rho^2).
std::vector<ProjectivePoint> small_orbit_representatives();

/// Label such as `O(1:1:rho)`.
std::string orbit_label(const ProjectivePoint& rep);

struct OrbitObstruction {
  std::string label;
  Orbit orbit;
  /// Value of the curve at each orbit point.
  std::vector<LambdaPoly> values{};
  /// Monic gcd of the values; zero when the orbit lies on the curve for all
  /// lambda, 1 when it never does.
  LambdaPoly obstruction{};
  /// Q(rho) roots of the obstruction (empty when it is zero or constant).
  RootSet exceptional{};
  bool identically_zero() const { return obstruction.is_zero(); }
};

/// For each orbit of size 3, the lambda values for which it lies on c.
/// With use_quadratic_map, c is in y0, y1, y2 and is first composed with
/// quadratic_map().
std::vector<OrbitObstruction> curve_orbit_obstruction(const MultiPoly& c, bool use_quadratic_map);

}  // namespace plab
