#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "plab/heisenberg.hpp"
#include "support.hpp"

using namespace plab;
using namespace testing;

namespace {

ProjectivePoint pt(Eis a, Eis b, Eis c) { return ProjectivePoint(a, b, c); }
const Eis r = Eis::rho();
const Eis r2 = Eis::rho_pow(2);

std::set<ProjectivePoint> as_set(const Orbit& o) { return {o.points.begin(), o.points.end()}; }

}  // namespace

TEST_CASE("group has 18 elements and contains the identity") {
  const auto& g = enumerate_group();
  CHECK(g.size() == 18);
  CHECK(std::find(g.begin(), g.end(), ProjectiveTransform::identity()) != g.end());
  CHECK(std::is_sorted(g.begin(), g.end()));
}

TEST_CASE("word closure oracle") {
  // all words of length <= 6 in the generators, multiplied as matrices
  std::vector<ProjectiveTransform> gens{heisenberg_sigma(), heisenberg_tau(), heisenberg_iota()};
  std::set<ProjectiveTransform> words{ProjectiveTransform::identity()};
  std::vector<ProjectiveTransform> layer{ProjectiveTransform::identity()};
  for (int len = 1; len <= 6; ++len) {
    std::vector<ProjectiveTransform> next;
    for (const auto& w : layer)
      for (const auto& s : gens) next.push_back(w * s);
    for (const auto& w : next) words.insert(w);
    layer = next;
  }
  const auto& g = enumerate_group();
  CHECK(words == std::set<ProjectiveTransform>(g.begin(), g.end()));
}

TEST_CASE("generator relations") {
  auto s = heisenberg_sigma(), t = heisenberg_tau(), i = heisenberg_iota();
  CHECK((s * s * s).is_identity());
  CHECK((t * t * t).is_identity());
  CHECK((i * i).is_identity());
  CHECK(i * s * i == s * s);
  CHECK(i * t * i == t * t);
  CHECK(s * t == t * s);  // commute modulo scalars
  CHECK(s * s.inverse() == ProjectiveTransform::identity());
}

TEST_CASE("closure and element orders") {
  const auto& g = enumerate_group();
  std::set<ProjectiveTransform> all(g.begin(), g.end());
  for (const auto& a : g)
    for (const auto& b : g) CHECK(all.count(a * b) == 1);
  std::map<int, int> orders;
  for (const auto& a : g) {
    int k = element_order(a);
    CHECK(6 % k == 0);
    ++orders[k];
  }
  CHECK(orders[1] == 1);
  CHECK(orders[3] == 8);
  CHECK(orders[2] == 9);
}

TEST_CASE("orbit examples") {
  Orbit a = orbit(pt(1, 0, 0));
  CHECK(a.size() == 3);
  CHECK(as_set(a) == std::set<ProjectivePoint>{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  Orbit b = orbit(pt(1, 1, r));
  CHECK(as_set(b) == std::set<ProjectivePoint>{pt(1, 1, r), pt(1, r, 1), pt(r, 1, 1)});
  CHECK(orbit(pt(1, 2, 3)).size() == 18);
}

TEST_CASE("the four orbits of order three") {
  CHECK(as_set(orbit(pt(1, 1, 1))) == std::set<ProjectivePoint>{pt(1, 1, 1), pt(1, r, r2), pt(1, r2, r)});
  CHECK(as_set(orbit(pt(1, 1, r2))) == std::set<ProjectivePoint>{pt(1, 1, r2), pt(1, r2, 1), pt(r2, 1, 1)});
  auto reps = small_orbit_representatives();
  CHECK(reps.size() == 4);
  CHECK(orbit_label(reps[2]) == "O(1:1:rho)");
  CHECK(orbit_label(reps[3]) == "O(1:1:rho^2)");
}

TEST_CASE("orbit sizes divide 18") {
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    Orbit o = orbit(pt(random_eis(rng, 2, 1), random_eis(rng, 2, 1), 1));
    CHECK(18 % o.size() == 0);
    for (const auto& g : enumerate_group())
      for (const auto& p : o.points) CHECK(o.contains(g.apply(p)));
  }
}

TEST_CASE("fixed locus") {
  FixedLocus f = fixed_locus();
  REQUIRE(f.lines.size() == 9);
  CHECK(f.lines[0].name == "l10");
  CHECK(f.lines[0].equation == parse_poly("x1 - x0", xvars()));
  CHECK(f.lines[4].equation == parse_poly("x2 - rho*x1", xvars()));
  CHECK(f.lines[8].equation == parse_poly("x0 - rho^2*x2", xvars()));
  REQUIRE(f.points.size() == 9);
  CHECK(f.points[0].second == pt(1, -1, 0));
  CHECK(f.points[1].second == pt(1, -r, 0));
  CHECK(f.points[3].second == pt(0, 1, -1));
  CHECK(f.points[8].second == pt(-r2, 0, 1));
  REQUIRE(f.triple_points.size() == 12);
  std::set<std::set<ProjectivePoint>> orbits;
  for (const auto& p : f.triple_points) orbits.insert(as_set(orbit(p)));
  CHECK(orbits.size() == 4);
  for (const auto& o : orbits) CHECK(o.size() == 3);
  for (const auto& rep : small_orbit_representatives()) CHECK(orbits.count(as_set(orbit(rep))) == 1);
}

TEST_CASE("fixed lines and points have nontrivial stabilizers") {
  FixedLocus f = fixed_locus();
  for (const auto& l : f.lines) {
    bool stabilized = false;
    for (const auto& g : enumerate_group()) {
      if (g.is_identity()) continue;
      MultiPoly moved = act_on_poly(g, l.equation);
      if (moved.normalized() == l.equation.normalized()) stabilized = true;
    }
    CHECK(stabilized);
  }
  for (const auto& [name, p] : f.points) {
    int stab = 0;
    for (const auto& g : enumerate_group())
      if (g.apply(p) == p) ++stab;
    CHECK(stab > 1);
    CHECK(orbit(p).size() == 9);
  }
}

TEST_CASE("obstruction examples") {
  auto lin = curve_orbit_obstruction(parse_poly("x0", xvars()), false);
  CHECK(lin[0].label == "O(1:0:0)");
  CHECK(lin[0].obstruction == LambdaPoly(1));
  auto prod = curve_orbit_obstruction(parse_poly("x0*x1*x2", xvars()), false);
  CHECK(prod[0].identically_zero());
  CHECK_THROWS_AS(curve_orbit_obstruction(parse_poly("x0^2 + x1", xvars()), false), DegreeError);
  CHECK_THROWS_AS(curve_orbit_obstruction(parse_poly("x0", xvars()), true), ArityMismatch);
}

TEST_CASE("obstructions of the composed sextic") {
  auto obs = curve_orbit_obstruction(bl2_sextic(), true);
  REQUIRE(obs.size() == 4);
  for (const auto& o : obs) {
    CHECK_FALSE(o.identically_zero());
    CHECK(o.exceptional.complete());
  }
  // the orbit (1:0:0) maps to (3:0:0), where the sextic is 729
  for (const auto& v : obs[0].values) CHECK(v == LambdaPoly(729));
  UniPoly lam = UniPoly::variable();
  CHECK(obs[1].obstruction == (lam - UniPoly(1)).pow(10));
  CHECK(obs[2].obstruction == (lam - UniPoly(r2)).pow(10));
  CHECK(obs[3].obstruction == (lam - UniPoly(r)).pow(10));
}

TEST_CASE("invariant curves have orbit-constant values") {
  MultiPoly composed = substitute(bl2_sextic(), quadratic_map());
  for (const auto& g : enumerate_group()) {
    CHECK(act_on_poly(g, hesse_cubic()).normalized() == hesse_cubic().normalized());
    CHECK(act_on_poly(g, composed).normalized() == composed.normalized());
  }
  for (const auto& o : curve_orbit_obstruction(bl2_sextic(), true))
    for (const auto& v : o.values) CHECK(gcd(v, o.values[0]) == o.values[0].monic());
}
