#include "plab/chow.hpp"

#include "plab/eisenstein.hpp"

namespace plab {

ChowClass ChowClass::monomial(long d, int a, int b, long coeff) {
  ChowClass r(d);
  if (a <= 2 && b <= 2) r.c_[a][b] = coeff;
  return r;
}

void ChowClass::check(const ChowClass& o) const {
  if (d_ != o.d_) throw DomainError("Chow classes with different polarization degrees");
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  check(o);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) c_[a][b] += o.c_[a][b];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  check(o);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) c_[a][b] -= o.c_[a][b];
  return *this;
}

ChowClass ChowClass::operator-() const { return -1 * *this; }

ChowClass operator*(long k, ChowClass x) {
  for (auto& row : x.c_)
    for (auto& v : row) v *= k;
  return x;
}

std::string ChowClass::str() const {
  std::string s;
  for (int deg = 4; deg >= 0; --deg)
    for (int a = 2; a >= 0; --a) {
      int b = deg - a;
      if (b < 0 || b > 2 || c_[a][b] == 0) continue;
      long v = c_[a][b];
      s += s.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
      long av = v < 0 ? -v : v;
      std::string mono;
      if (a) mono += a == 1 ? "l" : "l^2";
      if (b) mono += std::string(a ? "*" : "") + (b == 1 ? "h" : "h^2");
      if (mono.empty()) s += std::to_string(av);
      else s += (av == 1 ? "" : std::to_string(av) + "*") + mono;
    }
  return s.empty() ? "0" : s;
}

ChowClass chow_mul(const ChowClass& x, const ChowClass& y) {
  if (x.polarization_degree() != y.polarization_degree())
    throw DomainError("Chow classes with different polarization degrees");
  ChowClass::Grid r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; a + c < 3; ++c)
        for (int e = 0; b + e < 3; ++e) r[a + c][b + e] += x.coeff(a, b) * y.coeff(c, e);
  return ChowClass(x.polarization_degree(), r);
}

ChernClasses chern_twist(const ChowClass& c1, const ChowClass& c2, const ChowClass& c3, const ChowClass& m) {
  ChowClass m2 = m * m;
  return {c1 + 3 * m, c2 + 2 * (c1 * m) + 3 * m2, c3 + c2 * m + c1 * m2 + m2 * m};
}

ChernClasses jet_bundle_classes(long d) {
  ChowClass l = ChowClass::l(d), one = ChowClass::one(d);
  // c(Omega_A (x) L) = (1 + l)^2, then times c(L) = 1 + l
  ChowClass total = (one + l) * (one + l) * (one + l);
  return {ChowClass::monomial(d, 1, 0, total.coeff(1, 0)), ChowClass::monomial(d, 2, 0, total.coeff(2, 0)),
          ChowClass(d)};
}

IncidenceGenus incidence_genus(long d) {
  if (d < 1) throw DomainError("polarization degree must be positive");
  ChernClasses j = jet_bundle_classes(d);
  ChowClass h = ChowClass::h(d);
  ChernClasses e = chern_twist(j.c1, j.c2, j.c3, h);
  IncidenceGenus r{};
  r.gamma = e.c3;
  // K_A = 0 and K_P2 = -3h; the normal bundle of Gamma is E restricted.
  ChowClass omega = chow_mul(-3 * h, e.c3);
  ChowClass normal = chow_mul(e.c1, e.c3);
  r.omega_coeff = omega.coeff(2, 2);
  r.normal_coeff = normal.coeff(2, 2);
  r.omega_degree = omega.degree();
  r.normal_degree = normal.degree();
  r.deg_omega = r.omega_degree + r.normal_degree;
  r.pa = r.deg_omega / 2 + 1;
  return r;
}

long pencil_singular_count(long d) {
  if (d < 2) throw DomainError("a pencil needs d >= 2");
  const long e_abelian = 0, e_p1 = 2;
  long e_blowup = e_abelian + 2 * d;
  long e_curve = 2 - 2 * (d + 1);
  return e_blowup - e_curve * e_p1;
}

long multiplicity_bound(long n) {
  if (n < 1) throw DomainError("d1*d2 must be positive");
  Integer r = isqrt(Integer(8 * n - 7));
  return (1 + r.get_si()) / 2;
}

ChowReport chow_report(long d) {
  ChowReport r;
  r.d = d;
  IncidenceGenus ig = incidence_genus(d);
  r.pa_gamma = ig.pa;
  r.deg_omega = ig.deg_omega;
  if (d >= 2) r.pencil_count = pencil_singular_count(d);
  r.deg_B = 6 * d;
  r.multiplicity_bound = multiplicity_bound(d);
  return r;
}

}  // namespace plab
