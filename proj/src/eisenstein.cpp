#include "plab/eisenstein.hpp"

#include "plab/errors.hpp"

namespace plab {

std::string to_string(const Rational& q) { return q.get_str(); }

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Eis Eis::rho_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return Eis(1);
    case 1: return Eis(0, 1);
    default: return Eis(-1, -1);
  }
}

Eis Eis::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  const Eis c = conj();
  return Eis(c.a_ / n, c.b_ / n);
}

Eis Eis::pow(unsigned long e) const {
  Eis result(1);
  Eis base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Eis& Eis::operator+=(const Eis& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Eis& Eis::operator-=(const Eis& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Eis& Eis::operator*=(const Eis& o) {
  // (a + b r)(c + d r) = ac - bd + (ad + bc - bd) r
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ - bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::strong_ordering operator<=>(const Eis& x, const Eis& y) {
  const int ca = cmp(x.a_, y.a_);
  if (ca != 0) return ca < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int cb = cmp(x.b_, y.b_);
  if (cb != 0) return cb < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string rho_term(const Rational& b) {
  if (b == 1) return "rho";
  if (b == -1) return "-rho";
  return b.get_str() + "*rho";
}

}  // namespace

std::string Eis::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  if (sgn(a_) == 0) return rho_term(b_);
  std::string s = a_.get_str();
  if (sgn(b_) > 0) return s + " + " + rho_term(b_);
  return s + " - " + rho_term(-b_);
}

}  // namespace plab
