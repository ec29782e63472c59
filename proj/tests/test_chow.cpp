#include <doctest.h>

#include <cmath>
#include <random>

#include "plab/chow.hpp"

using namespace plab;

namespace {

ChowClass random_class(std::mt19937& rng, long d) {
  ChowClass::Grid g{};
  std::uniform_int_distribution<long> c(-9, 9);
  for (auto& row : g)
    for (auto& v : row) v = c(rng);
  return ChowClass(d, g);
}

}  // namespace

TEST_CASE("multiplication examples") {
  ChowClass l = ChowClass::l(3), h = ChowClass::h(3);
  CHECK(l * l == ChowClass::monomial(3, 2, 0));
  CHECK((l * l * l) == ChowClass(3));
  ChowClass e = 3 * (l + h);
  ChowClass cube = e * e * e;
  CHECK(cube == 81 * (ChowClass::monomial(3, 2, 1) + ChowClass::monomial(3, 1, 2)));
  CHECK((l * l * h * h).degree() == 6);
  CHECK((l * h).degree() == 0);
  CHECK(cube.str() == "81*l^2*h + 81*l*h^2");
  CHECK_THROWS_AS(l * ChowClass::h(2), DomainError);
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937 rng(51);
  for (int i = 0; i < 200; ++i) {
    ChowClass x = random_class(rng, 3), y = random_class(rng, 3), z = random_class(rng, 3);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * ChowClass::one(3) == x);
  }
}

TEST_CASE("chern twist examples") {
  long d = 3;
  ChowClass l = ChowClass::l(d), h = ChowClass::h(d), zero(d);
  ChernClasses j = jet_bundle_classes(d);
  CHECK(j.c1 == 3 * l);
  CHECK(j.c2 == 3 * (l * l));
  CHECK(j.c3 == zero);
  ChernClasses e = chern_twist(j.c1, j.c2, j.c3, h);
  CHECK(e.c1 == 3 * l + 3 * h);
  CHECK(e.c3 == 3 * (l * l * h) + 3 * (l * h * h));
  ChernClasses same = chern_twist(j.c1, j.c2, j.c3, zero);
  CHECK(same == j);
  ChowClass m = 2 * l - h;
  ChernClasses triv = chern_twist(zero, zero, zero, m);
  CHECK(triv.c1 == 3 * m);
  CHECK(triv.c2 == 3 * (m * m));
  CHECK(triv.c3 == m * m * m);
}

TEST_CASE("twisting by m and then by -m is the identity") {
  std::mt19937 rng(52);
  for (int i = 0; i < 100; ++i) {
    ChowClass c1 = random_class(rng, 2), c2 = random_class(rng, 2), c3 = random_class(rng, 2);
    ChowClass m = random_class(rng, 2);
    ChernClasses t = chern_twist(c1, c2, c3, m);
    ChernClasses back = chern_twist(t.c1, t.c2, t.c3, -m);
    CHECK(back == ChernClasses{c1, c2, c3});
  }
}

TEST_CASE("incidence genus") {
  IncidenceGenus g3 = incidence_genus(3);
  CHECK(g3.pa == 28);
  CHECK(g3.deg_omega == 54);
  CHECK(g3.omega_coeff == -9);
  CHECK(g3.normal_coeff == 18);
  CHECK(g3.omega_degree == -18 * 3);
  CHECK(g3.normal_degree == 108);
  CHECK(incidence_genus(1).pa == 10);
  for (long d = 1; d <= 30; ++d) {
    IncidenceGenus g = incidence_genus(d);
    CHECK(2 * g.pa - 2 == g.deg_omega);
    CHECK(g.pa == 9 * d + 1);
  }
}

TEST_CASE("pencil singular count") {
  CHECK(pencil_singular_count(3) == 18);
  CHECK(pencil_singular_count(3) == 3 * 3 + 9);
  CHECK(pencil_singular_count(2) == 12);
  for (long d = 2; d <= 10; ++d) CHECK(pencil_singular_count(d) == 6 * d);
  CHECK_THROWS_AS(pencil_singular_count(1), DomainError);
}

TEST_CASE("multiplicity bound") {
  CHECK(multiplicity_bound(3) == 2);
  CHECK(multiplicity_bound(1) == 1);
  CHECK(multiplicity_bound(6) == 3);
  for (long n = 1; n <= 500; ++n) {
    // largest m with (2m - 1)^2 <= 8n - 7
    long m = 0;
    while ((2 * (m + 1) - 1) * (2 * (m + 1) - 1) <= 8 * n - 7) ++m;
    CHECK(multiplicity_bound(n) == m);
    CHECK(multiplicity_bound(n) == static_cast<long>(std::floor((1 + std::sqrt(8.0 * n - 7)) / 2)));
  }
}

TEST_CASE("report") {
  ChowReport r = chow_report(3);
  CHECK(r.pa_gamma == 28);
  CHECK(r.deg_omega == 54);
  CHECK(r.pencil_count == 18);
  CHECK(r.deg_B == 18);
  CHECK(r.multiplicity_bound == 2);
  CHECK_FALSE(chow_report(1).pencil_count.has_value());
}
