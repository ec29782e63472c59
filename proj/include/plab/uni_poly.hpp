#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plab/eisenstein.hpp"

namespace plab {

/// Dense univariate polynomial over Q(rho), coefficients indexed by power.
///
/// Used both for polynomials in the curve parameter lambda (the coefficient
/// ring of MultiPoly) and for univariate eliminants in curve computations.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(Eis(c)) {}  // NOLINT
  UniPoly(const Eis& c);                // NOLINT
  explicit UniPoly(std::vector<Eis> coeffs);

  /// c * t^k
  static UniPoly monomial(const Eis& c, int k);
  /// t
  static UniPoly variable() { return monomial(Eis(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Eis>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k (zero outside the stored range).
  Eis coeff(int k) const;
  Eis leading() const { return coeffs_.empty() ? Eis() : coeffs_.back(); }
  Eis constant_term() const { return coeff(0); }

  Eis operator()(const Eis& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Substitute t -> t + shift.
  UniPoly shifted(const Eis& shift) const;
  /// Coefficient-wise Galois conjugation.
  UniPoly conj() const;
  bool has_rational_coeffs() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Eis& c);

  friend UniPoly operator+(UniPoly x, const UniPoly& y) { return x += y; }
  friend UniPoly operator-(UniPoly x, const UniPoly& y) { return x -= y; }
  friend UniPoly operator*(const UniPoly& x, const UniPoly& y);
  friend UniPoly operator*(UniPoly x, const Eis& c) { return x *= c; }
  friend bool operator==(const UniPoly& x, const UniPoly& y) { return x.coeffs_ == y.coeffs_; }

  UniPoly pow(unsigned e) const;

  /// Renders in descending powers, e.g. `lambda^2 - 1`, `(1 + rho)*lambda`.
  std::string str(const std::string& var = "lambda") const;

 private:
  void trim();
  std::vector<Eis> coeffs_;
};

using LambdaPoly = UniPoly;

/// Euclidean division; throws DivisionByZero when the divisor is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws Error when b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Product of the distinct irreducible factors, monic.
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: p = lc * prod f_i^i, returned as (f_i, i) with deg f_i > 0.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
/// Largest k with (t - r)^k | p; p must be nonzero.
int root_multiplicity(const UniPoly& p, const Eis& r);

}  // namespace plab
