#include "plab/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace plab {

namespace {

ProjectiveTransform::Matrix mul(const ProjectiveTransform::Matrix& a, const ProjectiveTransform::Matrix& b) {
  ProjectiveTransform::Matrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Eis det3(const ProjectiveTransform::Matrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ProjectiveTransform::ProjectiveTransform(Matrix m) : m_(std::move(m)) {
  if (det3(m_).is_zero()) throw DomainError("singular matrix is not a projective transformation");
  const Eis* first = nullptr;
  for (auto& row : m_)
    for (auto& x : row)
      if (!first && !x.is_zero()) first = &x;
  Eis inv = first->inverse();
  for (auto& row : m_)
    for (auto& x : row) x *= inv;
}

ProjectiveTransform ProjectiveTransform::identity() { return ProjectiveTransform({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

ProjectivePoint ProjectiveTransform::apply(const ProjectivePoint& p) const {
  std::array<Eis, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m_[i][j] * p[j];
  return ProjectivePoint(r);
}

ProjectiveTransform ProjectiveTransform::inverse() const {
  Matrix adj{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
    }
  return ProjectiveTransform(adj);
}

ProjectiveTransform operator*(const ProjectiveTransform& g, const ProjectiveTransform& h) {
  return ProjectiveTransform(mul(g.m_, h.m_));
}

std::string ProjectiveTransform::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + m_[i][j].str();
    s += "]";
  }
  return s + "]";
}

ProjectiveTransform heisenberg_sigma() { return ProjectiveTransform({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}); }

ProjectiveTransform heisenberg_tau() {
  return ProjectiveTransform({{{1, 0, 0}, {0, Eis::rho(), 0}, {0, 0, Eis::rho_pow(2)}}});
}

ProjectiveTransform heisenberg_iota() { return ProjectiveTransform({{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}); }

const std::vector<ProjectiveTransform>& enumerate_group() {
  static const std::vector<ProjectiveTransform> group = [] {
    const std::vector<ProjectiveTransform> gens{heisenberg_sigma(), heisenberg_tau(), heisenberg_iota()};
    std::set<ProjectiveTransform> seen{ProjectiveTransform::identity()};
    std::deque<ProjectiveTransform> queue{ProjectiveTransform::identity()};
    while (!queue.empty()) {
      ProjectiveTransform g = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        ProjectiveTransform h = s * g;
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
    return std::vector<ProjectiveTransform>(seen.begin(), seen.end());
  }();
  return group;
}

int element_order(const ProjectiveTransform& g) {
  ProjectiveTransform p = g;
  int k = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++k;
  }
  return k;
}

MultiPoly act_on_poly(const ProjectiveTransform& g, const MultiPoly& f) {
  if (f.nvars() != 3) throw ArityMismatch("group acts on polynomials in three variables");
  const auto inv = g.inverse().matrix();
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    MultiPoly row(f.vars());
    for (int j = 0; j < 3; ++j) row += MultiPoly::variable(f.vars(), j) * inv[i][j];
    images.push_back(row);
  }
  return substitute(f, images);
}

bool Orbit::contains(const ProjectivePoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

Orbit orbit(const ProjectivePoint& p) {
  std::set<ProjectivePoint> pts;
  for (const auto& g : enumerate_group()) pts.insert(g.apply(p));
  return Orbit{{pts.begin(), pts.end()}};
}

FixedLocus fixed_locus() {
  const auto X = xvars();
  auto x = [&](int i) { return MultiPoly::variable(X, i); };
  FixedLocus fl;
  // l_1i: x1 = rho^i x0, l_2i: x2 = rho^i x1, l_3i: x0 = rho^i x2
  const int lhs[3] = {1, 2, 0}, rhs[3] = {0, 1, 2};
  std::vector<std::array<Eis, 3>> coeffs;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      fl.lines.push_back({"l" + std::to_string(j + 1) + std::to_string(i), x(lhs[j]) - x(rhs[j]) * Eis::rho_pow(i)});
      std::array<Eis, 3> c{};
      c[lhs[j]] = 1;
      c[rhs[j]] = -Eis::rho_pow(i);
      coeffs.push_back(c);
    }
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      Eis r = -Eis::rho_pow(i);
      std::array<Eis, 3> p{};
      if (j == 0) p = {1, r, 0};
      if (j == 1) p = {0, 1, r};
      if (j == 2) p = {r, 0, 1};
      fl.points.emplace_back("y" + std::to_string(j + 1) + std::to_string(i), ProjectivePoint(p));
    }
  std::set<ProjectivePoint> meets;
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    for (std::size_t b = a + 1; b < coeffs.size(); ++b) {
      const auto& u = coeffs[a];
      const auto& v = coeffs[b];
      std::array<Eis, 3> w{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      if (!(w[0].is_zero() && w[1].is_zero() && w[2].is_zero())) meets.insert(ProjectivePoint(w));
    }
  for (const auto& p : meets) {
    int incidence = 0;
    for (const auto& c : coeffs)
      if ((c[0] * p[0] + c[1] * p[1] + c[2] * p[2]).is_zero()) ++incidence;
    if (incidence == 3) fl.triple_points.push_back(p);
  }
  return fl;
}

std::vector<ProjectivePoint> small_orbit_representatives() {
  return {ProjectivePoint(1, 0, 0), ProjectivePoint(1, 1, 1), ProjectivePoint(1, 1, Eis::rho()),
          ProjectivePoint(1, 1, Eis::rho_pow(2))};
}

std::string orbit_label(const ProjectivePoint& rep) {
  auto c = [](const Eis& x) {
    if (x == Eis::rho_pow(2)) return std::string("rho^2");
    return x.str();
  };
  return "O(" + c(rep[0]) + ":" + c(rep[1]) + ":" + c(rep[2]) + ")";
}

std::vector<OrbitObstruction> curve_orbit_obstruction(const MultiPoly& c, bool use_quadratic_map) {
  if (c.nvars() != 3) throw ArityMismatch("curve must be in three variables");
  if (c.is_zero() || !c.is_homogeneous()) throw DegreeError("curve equation is not homogeneous");
  MultiPoly f = c;
  if (use_quadratic_map) {
    if (c.vars() != yvars()) throw ArityMismatch("the quadratic map expects a polynomial in y0, y1, y2");
    f = substitute(c, quadratic_map());
  }
  std::vector<OrbitObstruction> out;
  for (const auto& rep : small_orbit_representatives()) {
    OrbitObstruction ob{orbit_label(rep), orbit(rep)};
    for (const auto& p : ob.orbit.points) {
      ob.values.push_back(evaluate(f, p.vec()));
      ob.obstruction = gcd(ob.obstruction, ob.values.back());
    }
    if (ob.obstruction.degree() > 0) ob.exceptional = lambda_roots(ob.obstruction);
    out.push_back(std::move(ob));
  }
  return out;
}

}  // namespace plab
