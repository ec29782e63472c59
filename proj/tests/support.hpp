#pragma once

#include <complex>
#include <random>

#include "plab/errors.hpp"
#include "plab/multi_poly.hpp"

namespace testing {

using plab::Eis;
using plab::MultiPoly;
using plab::Rational;

inline Eis eis(long a, long b = 0) { return Eis(Rational(a), Rational(b)); }
inline Eis eisq(long an, long ad, long bn, long bd) { return Eis(Rational(an, ad), Rational(bn, bd)); }

inline Eis random_eis(std::mt19937& rng, int range = 5, int den = 3) {
  std::uniform_int_distribution<int> num(-range, range), d(1, den);
  Rational a(num(rng), d(rng)), b(num(rng), d(rng));
  a.canonicalize();
  b.canonicalize();
  return Eis(a, b);
}

inline std::complex<double> to_complex(const Eis& x) {
  const std::complex<double> rho(-0.5, std::sqrt(3.0) / 2.0);
  return x.a().get_d() + x.b().get_d() * rho;
}

/// Random polynomial with at most `terms` terms of total degree <= deg
/// (exactly deg when homogeneous), lambda-free.
inline MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int deg, int terms,
                             bool homogeneous = false) {
  MultiPoly p(vars);
  std::uniform_int_distribution<int> e(0, deg);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Monomial m(vars.size(), 0);
    int left = homogeneous ? deg : e(rng);
    for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
      std::uniform_int_distribution<int> pick(0, left);
      m[i] = static_cast<unsigned>(pick(rng));
      left -= static_cast<int>(m[i]);
    }
    m.back() = static_cast<unsigned>(left);
    p.add_term(m, plab::LambdaPoly(random_eis(rng, 4, 2)));
  }
  return p;
}

}  // namespace testing
