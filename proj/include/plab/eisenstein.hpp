#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace plab {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Integer square root, floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// Element a + b*rho of the Eisenstein rationals Q(rho), rho^2 + rho + 1 = 0.
///
/// Both parts are canonical GMP rationals, so equality is structural.
class Eis {
 public:
  Eis() = default;
  Eis(long a) : a_(a) {}  // NOLINT: implicit embedding of integers
  Eis(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Eis(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Eis rho() { return Eis(0, 1); }
  static Eis rho_pow(long k);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Galois conjugate a + b*rho^2 = (a - b) - b*rho.
  Eis conj() const { return Eis(a_ - b_, -b_); }

  /// a^2 - a*b + b^2; multiplicative, zero only at 0.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  /// Throws DivisionByZero on 0.
  Eis inverse() const;

  Eis pow(unsigned long e) const;

  Eis operator-() const { return Eis(-a_, -b_); }
  Eis& operator+=(const Eis& o);
  Eis& operator-=(const Eis& o);
  Eis& operator*=(const Eis& o);
  Eis& operator/=(const Eis& o) { return *this *= o.inverse(); }

  friend Eis operator+(Eis x, const Eis& y) { return x += y; }
  friend Eis operator-(Eis x, const Eis& y) { return x -= y; }
  friend Eis operator*(Eis x, const Eis& y) { return x *= y; }
  friend Eis operator/(Eis x, const Eis& y) { return x /= y; }

  friend bool operator==(const Eis& x, const Eis& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  /// Canonical total order (a first, then b); not compatible with arithmetic.
  friend std::strong_ordering operator<=>(const Eis& x, const Eis& y);

  /// `a`, `a/b`, `rho`, `a + b*rho`, ...  Parses back to the same value.
  std::string str() const;

  /// True when the rendering is a single signed factor (no inner + or -).
  bool is_monomial() const { return sgn(a_) == 0 || sgn(b_) == 0; }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline Eis eis_invert(const Eis& x) { return x.inverse(); }
inline Rational eis_norm(const Eis& x) { return x.norm(); }

}  // namespace plab
