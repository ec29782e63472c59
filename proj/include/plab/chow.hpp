#pragma once

#include <array>
#include <optional>
#include <string>

#include "plab/errors.hpp"

namespace plab {

/// Class sum c_ab l^a h^b (0 <= a, b <= 2) in the truncated intersection
/// ring of A x P2, where l is the polarization and h the hyperplane class.
/// Only l^2 h^2 has nonzero degree, namely 2d.
class ChowClass {
 public:
  using Grid = std::array<std::array<long, 3>, 3>;

  explicit ChowClass(long d, Grid c = {}) : d_(d), c_(c) {}
  static ChowClass one(long d) { return monomial(d, 0, 0); }
  static ChowClass l(long d) { return monomial(d, 1, 0); }
  static ChowClass h(long d) { return monomial(d, 0, 1); }
  static ChowClass monomial(long d, int a, int b, long coeff = 1);

  long polarization_degree() const { return d_; }
  long coeff(int a, int b) const { return c_[a][b]; }
  const Grid& grid() const { return c_; }
  /// 2d times the l^2 h^2 coefficient.
  long degree() const { return 2 * d_ * c_[2][2]; }

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass operator-() const;
  friend ChowClass operator+(ChowClass x, const ChowClass& y) { return x += y; }
  friend ChowClass operator-(ChowClass x, const ChowClass& y) { return x -= y; }
  friend ChowClass operator*(long k, ChowClass x);
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  /// `3*l^2*h + 3*l*h^2`
  std::string str() const;

 private:
  void check(const ChowClass& o) const;
  long d_;
  Grid c_;
};

/// Truncated product; throws DomainError for mismatched d.
ChowClass chow_mul(const ChowClass& x, const ChowClass& y);
inline ChowClass operator*(const ChowClass& x, const ChowClass& y) { return chow_mul(x, y); }

struct ChernClasses {
  ChowClass c1, c2, c3;
  friend bool operator==(const ChernClasses&, const ChernClasses&) = default;
};

/// Chern classes of a rank-3 bundle twisted by a line bundle with class m.
ChernClasses chern_twist(const ChowClass& c1, const ChowClass& c2, const ChowClass& c3, const ChowClass& m);

/// Chern classes of the first jet bundle J1(L) pulled back to A x P2:
/// c(Omega_A (x) L) c(L) with Omega_A trivial of rank 2.
ChernClasses jet_bundle_classes(long d);

struct IncidenceGenus {
  long pa = 0;
  long deg_omega = 0;
  /// l^2 h^2 coefficients of c1(omega_{A x P2}) . Gamma and c1(N) . Gamma.
  long omega_coeff = 0;
  long normal_coeff = 0;
  /// Their degrees, -18d and 36d.
  long omega_degree = 0;
  long normal_degree = 0;
  ChowClass gamma = ChowClass(1);
};

/// Arithmetic genus of the incidence curve Gamma = c3(J1(L) (x) O(1)) by
/// adjunction.
IncidenceGenus incidence_genus(long d);

/// Singular members of a general pencil in |L|:
/// e(blow-up of A in 2d points) - e(C) e(P1) with g(C) = d + 1.
long pencil_singular_count(long d);

/// floor((1 + sqrt(8n - 7)) / 2) by integer square root.
long multiplicity_bound(long n);

struct ChowReport {
  long d = 0;
  long pa_gamma = 0;
  long deg_omega = 0;
  std::optional<long> pencil_count;  // d >= 2 only
  long deg_B = 0;
  long multiplicity_bound = 0;
};

ChowReport chow_report(long d);

}  // namespace plab
