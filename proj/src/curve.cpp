#include "plab/curve.hpp"

#include <algorithm>
#include <set>

#include "plab/roots.hpp"

namespace plab {

namespace {

MultiPoly cst(const std::vector<std::string>& vars, const Eis& v) { return MultiPoly::constant(vars, LambdaPoly(v)); }

MultiPoly var(const std::vector<std::string>& vars, std::size_t i) { return MultiPoly::variable(vars, i); }

Eis value(const MultiPoly& p, const std::vector<Eis>& pt) {
  LambdaPoly v = evaluate(p, pt);
  if (v.degree() > 0) throw DomainError("polynomial depends on lambda; specialize it first");
  return v.constant_term();
}

void require_specialized(const PlaneCurve& c) {
  if (!c.lambda_free()) throw DomainError("curve depends on symbolic lambda; specialize it first");
}

std::vector<MultiPoly> gradient(const MultiPoly& f) {
  return {partial_derivative(f, std::size_t{0}), partial_derivative(f, std::size_t{1}),
          partial_derivative(f, std::size_t{2})};
}

// gcd of the nonzero members; zero when all vanish.
UniPoly gcd_all(const std::vector<UniPoly>& ps) {
  UniPoly g;
  for (const auto& p : ps) g = gcd(g, p);
  return g;
}

// Restrictions of the partials to the affine line x = base + t * dir in the
// univariate variable t.
std::vector<UniPoly> restrict_to_line(const std::vector<MultiPoly>& fs, const std::array<Eis, 3>& base,
                                      const std::array<Eis, 3>& dir) {
  const auto& vars = fs.front().vars();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(cst(vars, base[i]) + var(vars, 0) * dir[i]);
  std::vector<UniPoly> out;
  for (const auto& f : fs) out.push_back(substitute(f, images).to_univariate(0));
  return out;
}

// Univariate eliminant in x1 of two polynomials in (x1, x2) living in a
// three-variable ring.
UniPoly eliminant(const MultiPoly& h1, const MultiPoly& h2) {
  if (h1.is_zero() || h2.is_zero()) return UniPoly();
  int d1 = h1.degree_in(std::size_t{2});
  int d2 = h2.degree_in(std::size_t{2});
  if (d1 == 0 && d2 == 0) return gcd(h1.to_univariate(1), h2.to_univariate(1));
  if (d1 == 0) return h1.to_univariate(1);
  if (d2 == 0) return h2.to_univariate(1);
  return resultant(h1, h2, std::size_t{2}).to_univariate(1);
}

}  // namespace

ProjectivePoint::ProjectivePoint(Eis x0, Eis x1, Eis x2) : coords_{std::move(x0), std::move(x1), std::move(x2)} {
  std::size_t k = 0;
  while (k < 3 && coords_[k].is_zero()) ++k;
  if (k == 3) throw DomainError("projective point with all coordinates zero");
  Eis inv = coords_[k].inverse();
  for (auto& x : coords_) x *= inv;
}

std::string ProjectivePoint::str() const {
  return "(" + coords_[0].str() + " : " + coords_[1].str() + " : " + coords_[2].str() + ")";
}

ProjectivePoint parse_point(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw ArityMismatch("point needs three coordinates separated by ':'");
  std::array<Eis, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly v = parse_poly(parts[i], {});
    if (!v.lambda_free()) throw DomainError("point coordinates must not involve lambda");
    c[i] = v.is_zero() ? Eis() : v.leading_coefficient().constant_term();
  }
  return ProjectivePoint(c);
}

PlaneCurve::PlaneCurve(MultiPoly equation) : equation_(std::move(equation)) {
  if (equation_.nvars() != 3) throw ArityMismatch("plane curve needs exactly three variables");
  if (equation_.is_zero()) throw DomainError("curve equation is zero");
  if (!equation_.is_homogeneous()) throw DegreeError("curve equation is not homogeneous");
  degree_ = equation_.total_degree();
  if (degree_ < 1) throw DegreeError("curve equation is constant");
}

bool PlaneCurve::contains(const ProjectivePoint& p) const { return evaluate(equation_, p.vec()).is_zero(); }

std::string SingularityRecord::kind_name() const {
  switch (kind) {
    case SingularityKind::Node: return "A1";
    case SingularityKind::Cusp: return "A2";
    case SingularityKind::Tacnode: return "A3";
    case SingularityKind::Ordinary: return "ordinary-" + std::to_string(multiplicity);
    case SingularityKind::Unclassified: break;
  }
  return "unclassified";
}

SingularLocus singular_locus(const PlaneCurve& c) {
  require_specialized(c);
  const auto& vars = c.equation().vars();
  auto F = gradient(c.equation());
  SingularLocus out;
  std::set<ProjectivePoint> found;

  auto solve = [&](const UniPoly& p) -> std::vector<Eis> {
    RootSet rs = lambda_roots(p);
    if (!rs.complete()) {
      out.complete = false;
      for (const auto& [f, k] : rs.unresolved)
        out.notes.push_back("unresolved factor of degree " + std::to_string(f.degree()));
    }
    return rs.values();
  };
  auto nonreduced = [] { return DomainError("partials share a curve; the input is not reduced"); };

  // Chart x0 = 1.
  std::vector<MultiPoly> chart{cst(vars, 1), var(vars, 1), var(vars, 2)};
  std::vector<MultiPoly> g;
  for (const auto& f : F) g.push_back(substitute(f, chart));
  auto combo = [&](long k) { return g[0] + g[1] * Eis(k) + g[2] * Eis(k * k); };
  UniPoly cand;
  int found_pairs = 0;
  for (long k1 = 1; k1 <= 6 && found_pairs < 2; ++k1) {
    for (long k2 = k1 + 1; k2 <= 7 && found_pairs < 2; ++k2) {
      UniPoly e = eliminant(combo(k1), combo(k2));
      if (e.is_zero()) continue;
      cand = gcd(cand, e);
      ++found_pairs;
    }
  }
  if (found_pairs == 0) throw nonreduced();
  if (cand.degree() > 0) {
    for (const Eis& a : solve(cand)) {
      std::vector<UniPoly> fibre = restrict_to_line(F, {Eis(1), a, Eis(0)}, {Eis(0), Eis(0), Eis(1)});
      UniPoly u = gcd_all(fibre);
      if (u.is_zero()) throw nonreduced();
      if (u.degree() <= 0) continue;
      for (const Eis& b : solve(u)) found.insert(ProjectivePoint(1, a, b));
    }
  }

  // Line x0 = 0, chart x1 = 1.
  {
    UniPoly u = gcd_all(restrict_to_line(F, {Eis(0), Eis(1), Eis(0)}, {Eis(0), Eis(0), Eis(1)}));
    if (u.is_zero()) throw nonreduced();
    if (u.degree() > 0)
      for (const Eis& b : solve(u)) found.insert(ProjectivePoint(0, 1, b));
  }

  // The point (0:0:1).
  {
    std::vector<Eis> pt{0, 0, 1};
    if (std::all_of(F.begin(), F.end(), [&](const MultiPoly& f) { return value(f, pt).is_zero(); }))
      found.insert(ProjectivePoint(0, 0, 1));
  }

  for (const auto& p : found) {
    for (const auto& f : F)
      if (!value(f, p.vec()).is_zero()) throw Error("internal: singular point candidate fails re-evaluation");
    out.points.push_back(p);
  }
  return out;
}

SingularityRecord classify_singularity(const PlaneCurve& c, const ProjectivePoint& p) {
  require_specialized(c);
  if (!c.contains(p)) throw DomainError("point " + p.str() + " is not on the curve");

  std::size_t k = 0;
  while (p[k].is_zero()) ++k;
  std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  if (i > j) std::swap(i, j);
  const std::vector<std::string> st{"s", "t"};
  std::vector<MultiPoly> images(3);
  images[k] = cst(st, 1);
  images[i] = cst(st, p[i]) + var(st, 0);
  images[j] = cst(st, p[j]) + var(st, 1);
  MultiPoly f = substitute(c.equation(), images);

  int m = f.total_degree();
  for (const auto& [mono, coef] : f.terms()) m = std::min<int>(m, mono[0] + mono[1]);
  if (m <= 1) throw DomainError("point " + p.str() + " is a smooth point of the curve");

  SingularityRecord rec{p};
  rec.multiplicity = m;

  // Tangent cone J_m(s, t) as a polynomial in s after t = 1.
  std::vector<Eis> jet(m + 1);
  for (const auto& [mono, coef] : f.terms())
    if (static_cast<int>(mono[0] + mono[1]) == m) jet[mono[0]] = coef.constant_term();
  UniPoly js(jet);
  int t_mult = m - js.degree();
  bool squarefree = t_mult <= 1 && (js.degree() <= 1 || gcd(js, js.derivative()).degree() == 0);
  if (squarefree) {
    rec.kind = m == 2 ? SingularityKind::Node : SingularityKind::Ordinary;
    rec.delta = m * (m - 1) / 2;
    rec.milnor = (m - 1) * (m - 1);
    return rec;
  }
  if (m == 2) {
    // J = (alpha s + beta t)^2; move the tangent onto Y = 0.
    const std::vector<std::string> xy{"X", "Y"};
    std::vector<MultiPoly> align(2);
    const Eis& A = jet[2];
    if (!A.is_zero()) {
      Eis shift = jet[1] / (Eis(2) * A);
      align[0] = var(xy, 1) - var(xy, 0) * shift;
      align[1] = var(xy, 0);
    } else {
      align[0] = var(xy, 0);
      align[1] = var(xy, 1);
    }
    MultiPoly h = substitute(f, align);
    auto co = [&](unsigned a, unsigned b) { return h.coefficient({a, b}).constant_term(); };
    if (!co(3, 0).is_zero()) {
      rec.kind = SingularityKind::Cusp;
      rec.delta = 1;
      rec.milnor = 2;
      return rec;
    }
    // Weighted-degree-4 part: a Y^2 + b X^2 Y + c X^4 must be a non-square.
    Eis a = co(0, 2), b = co(2, 1), cc = co(4, 0);
    if (!(b * b - Eis(4) * a * cc).is_zero() && !cc.is_zero()) {
      rec.kind = SingularityKind::Tacnode;
      rec.delta = 2;
      rec.milnor = 3;
      return rec;
    }
    rec.kind = SingularityKind::Unclassified;
    rec.delta = 2;
    return rec;
  }
  rec.kind = SingularityKind::Unclassified;
  rec.delta = m * (m - 1) / 2;
  return rec;
}

std::vector<SingularityRecord> classify_all(const PlaneCurve& c, const SingularLocus& locus) {
  std::vector<SingularityRecord> out;
  for (const auto& p : locus.points) out.push_back(classify_singularity(c, p));
  return out;
}

MultiPoly hessian(const PlaneCurve& c) {
  auto g = gradient(c.equation());
  std::vector<std::vector<MultiPoly>> m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i].push_back(partial_derivative(g[i], j));
  return determinant(std::move(m));
}

namespace {

std::vector<std::pair<long, long>> centers() {
  std::vector<std::pair<long, long>> out;
  for (long s = 0; s <= 6; ++s)
    for (long a = -s; a <= s; ++a)
      for (long b = -s; b <= s; ++b)
        if (std::max(std::abs(a), std::abs(b)) == s) out.emplace_back(a, b);
  return out;
}

// Restriction of f to the line {x0' = tau * x2'} (or x2' = 0 when tau is
// empty) parametrized by x1' = t.
UniPoly on_line(const MultiPoly& f, const std::optional<Eis>& tau) {
  const auto& vars = f.vars();
  std::vector<MultiPoly> im{tau ? cst(vars, *tau) : cst(vars, 1), var(vars, 0), tau ? cst(vars, 1) : cst(vars, 0)};
  return substitute(f, im).to_univariate(0);
}

}  // namespace

FlexResult flexes(const PlaneCurve& c) {
  require_specialized(c);
  MultiPoly H = hessian(c);
  if (H.is_zero()) throw DomainError("Hessian vanishes identically; the curve is a union of lines or degenerate");
  FlexResult out;
  if (H.is_constant()) return out;

  SingularLocus locus = singular_locus(c);
  out.complete = locus.complete;
  out.notes = locus.notes;
  const auto& vars = c.equation().vars();
  int total = c.degree() * H.total_degree();

  for (auto [alpha, beta] : centers()) {
    std::vector<Eis> P{Eis(alpha), Eis(1), Eis(beta)};
    if (value(c.equation(), P).is_zero() || value(H, P).is_zero()) continue;
    std::vector<MultiPoly> shear{var(vars, 0) + var(vars, 1) * Eis(alpha), var(vars, 1),
                                 var(vars, 2) + var(vars, 1) * Eis(beta)};
    MultiPoly c1 = substitute(c.equation(), shear);
    MultiPoly h1 = substitute(H, shear);
    std::vector<MultiPoly> affine{var(vars, 0), var(vars, 1), cst(vars, 1)};
    MultiPoly R3 = resultant(substitute(c1, affine), substitute(h1, affine), std::size_t{1});
    if (R3.is_zero()) throw DomainError("curve shares a component with its Hessian (line component?)");
    UniPoly R = R3.to_univariate(0);
    int at_infinity = total - R.degree();

    auto single_point_line = [&](const std::optional<Eis>& tau, const Eis& t0) {
      UniPoly g = gcd(on_line(c1, tau), on_line(h1, tau));
      if (g.is_zero()) return false;
      return g == (UniPoly::variable() - UniPoly(t0)).pow(g.degree());
    };

    bool ok = true;
    int removed = 0;
    UniPoly smooth = R;
    bool inf_singular = false;
    for (const auto& p : locus.points) {
      Eis q0 = p[0] - Eis(alpha) * p[1], q1 = p[1], q2 = p[2] - Eis(beta) * p[1];
      if (!q2.is_zero()) {
        Eis tau = q0 / q2;
        int mult = root_multiplicity(R, tau);
        if (!single_point_line(tau, q1 / q2)) { ok = false; break; }
        removed += mult;
        smooth = exact_quotient(smooth, (UniPoly::variable() - UniPoly(tau)).pow(mult));
      } else {
        if (!single_point_line(std::nullopt, q1 / q0)) { ok = false; break; }
        removed += at_infinity;
        inf_singular = true;
      }
    }
    if (!ok) continue;
    out.count_with_multiplicity = total - removed;

    std::set<ProjectivePoint> pts;
    auto unshear = [&](const Eis& y0, const Eis& y1, const Eis& y2) {
      return ProjectivePoint(y0 + Eis(alpha) * y1, y1, y2 + Eis(beta) * y1);
    };
    auto collect = [&](const std::optional<Eis>& tau) {
      UniPoly g = gcd(on_line(c1, tau), on_line(h1, tau));
      RootSet rs = lambda_roots(g);
      if (!rs.complete()) out.points_complete = false;
      for (const Eis& t : rs.values()) pts.insert(tau ? unshear(*tau, t, 1) : unshear(1, t, 0));
    };
    if (smooth.degree() > 0) {
      RootSet rs = lambda_roots(smooth);
      if (!rs.complete()) out.points_complete = false;
      for (const Eis& tau : rs.values()) collect(tau);
    }
    if (at_infinity > 0 && !inf_singular) collect(std::nullopt);
    for (const auto& p : pts)
      if (std::find(locus.points.begin(), locus.points.end(), p) == locus.points.end()) out.points.push_back(p);
    if (!out.complete) out.points_complete = false;
    return out;
  }
  throw DomainError("no admissible projection center found for the flex computation");
}

int predicted_class(int degree, const std::vector<SingularityRecord>& sings) {
  int m = degree * (degree - 1);
  for (const auto& s : sings) m -= s.class_drop();
  return m;
}

namespace {

// f restricted to the line a + s*b is squarefree of full degree.
bool squarefree_on_line(const MultiPoly& f, const std::array<Eis, 3>& a, const std::array<Eis, 3>& b) {
  const auto& vars = f.vars();
  std::vector<MultiPoly> im;
  for (std::size_t i = 0; i < 3; ++i) im.push_back(cst(vars, a[i]) + var(vars, 0) * b[i]);
  UniPoly r = substitute(f, im).to_univariate(0);
  if (r.degree() != f.total_degree()) return false;
  return r.degree() <= 1 || gcd(r, r.derivative()).degree() == 0;
}

}  // namespace

DualCurveResult dual_curve_report(const PlaneCurve& c) {
  require_specialized(c);
  int d = c.degree();
  if (d < 2 || d > 4) throw DegreeError("dual curve supports degrees 2 to 4, got " + std::to_string(d));

  std::vector<std::string> outv = c.equation().vars() == uvars() ? xvars() : uvars();
  std::vector<std::string> ring{"t", outv[0], outv[1], outv[2]};
  DualCurveResult res{c};

  SingularLocus locus = singular_locus(c);
  auto sings = classify_all(c, locus);
  bool classified = locus.complete && std::none_of(sings.begin(), sings.end(), [](const SingularityRecord& s) {
                      return s.kind == SingularityKind::Unclassified;
                    });
  if (classified) res.predicted_class = predicted_class(d, sings);
  if (!locus.complete) res.notes.push_back("singular locus not fully resolved; class not certified");

  const std::array<std::array<std::size_t, 3>, 6> orders{
      {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}, {2, 1, 0}, {0, 2, 1}, {1, 0, 2}}};
  for (auto [k, i, j] : orders) {
    // Points of the line u.x = 0 with u_k != 0: x_i = u_k t, x_j = u_k, x_k = -(u_i t + u_j).
    MultiPoly t = var(ring, 0);
    auto u = [&](std::size_t n) { return var(ring, n + 1); };
    std::vector<MultiPoly> im(3);
    im[i] = u(k) * t;
    im[j] = u(k);
    im[k] = -(u(i) * t + u(j));
    MultiPoly g = substitute(c.equation(), im);
    if (g.degree_in(std::size_t{0}) != d) continue;
    MultiPoly disc = discriminant(g, std::size_t{0});
    if (disc.is_zero()) continue;
    MultiPoly D = disc.with_vars(outv);
    MultiPoly uk = MultiPoly::variable(outv, k);
    while (auto q = try_divide(D, uk)) D = *q;
    for (const auto& p : locus.points) {
      MultiPoly L = MultiPoly::variable(outv, 0) * p[0] + MultiPoly::variable(outv, 1) * p[1] +
          MultiPoly::variable(outv, 2) * p[2];
      while (auto q = try_divide(D, L)) D = *q;
    }
    if (D.is_constant())
      throw DegenerateElimination("degenerate elimination: spurious factors exhaust the discriminant");
    D = D.normalized();
    bool certified = false;
    for (long s = 1; s <= 8 && !certified; ++s)
      certified = squarefree_on_line(D, {Eis(1), Eis(s), Eis(s * s + 2)}, {Eis(s + 3), Eis(-1), Eis(2 * s - 1)});
    if (!certified) throw DegenerateElimination("degenerate elimination: dual equation is not squarefree");
    if (res.predicted_class && D.total_degree() != *res.predicted_class)
      throw DegenerateElimination("degenerate elimination: dual degree " + std::to_string(D.total_degree()) +
                                  " differs from class " + std::to_string(*res.predicted_class));
    res.curve = PlaneCurve(D);
    return res;
  }
  throw DegenerateElimination("degenerate elimination: no admissible line parametrization");
}

PlaneCurve dual_curve(const PlaneCurve& c) { return dual_curve_report(c).curve; }

GenusResult geometric_genus(const PlaneCurve& c, const std::vector<SingularityRecord>& sings) {
  int d = c.degree();
  int g = (d - 1) * (d - 2) / 2;
  for (const auto& s : sings) g -= s.delta;
  return {g, g < 0};
}

CurveAnalysis analyze_curve(const PlaneCurve& c) {
  CurveAnalysis a{c};
  a.locus = singular_locus(c);
  a.singularities = classify_all(c, a.locus);
  a.notes = a.locus.notes;
  for (const auto& s : a.singularities) {
    if (s.kind == SingularityKind::Node) a.nodes += 1;
    if (s.kind == SingularityKind::Tacnode) a.nodes += 2;
    if (s.kind == SingularityKind::Cusp) a.cusps += 1;
    if (s.kind == SingularityKind::Unclassified) a.notes.push_back("unclassified singularity at " + s.point.str());
  }
  a.genus = geometric_genus(c, a.singularities);
  if (a.genus.reducibility_warning) a.notes.push_back("negative genus: the curve is reducible");
  try {
    a.flex = flexes(c);
  } catch (const DomainError& e) {
    a.notes.push_back(std::string("flexes skipped: ") + e.what());
  }
  return a;
}

}  // namespace plab
