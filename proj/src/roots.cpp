#include "plab/roots.hpp"

#include <algorithm>
#include <cstdint>

#include "plab/errors.hpp"

namespace plab {

namespace {

using u64 = std::uint64_t;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = r * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return r;
}

u64 mod_of(const Integer& z, u64 q) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), q);
  return r.get_ui();
}

// Dense polynomial over F_q, low degree first, trimmed.
using ModPoly = std::vector<u64>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, u64 q) {
  const u64 inv = powmod(b.back(), q - 2, q);
  while (a.size() >= b.size() && !a.empty()) {
    const u64 f = a.back() * inv % q;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + q - f * b[j] % q) % q;
    trim(a);
  }
  return a;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b, u64 q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Integral model of a polynomial over Q(rho): coefficients A_i + B_i*rho.
struct IntegralPoly {
  std::vector<Integer> a, b;
};

IntegralPoly integral_model(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.a().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.b().get_den_mpz_t());
  }
  IntegralPoly out;
  for (const auto& c : p.coeffs()) {
    Rational x = c.a() * l;
    Rational y = c.b() * l;
    out.a.push_back(x.get_num());
    out.b.push_back(y.get_num());
  }
  return out;
}

Integer mod_sym(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

Integer modm(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inv_mod(const Integer& v, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) throw Error("non-invertible residue in Hensel lift");
  return r;
}

Integer eval_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = modm(acc * x + *it, m);
  return acc;
}

std::vector<Integer> derivative(const std::vector<Integer>& c) {
  std::vector<Integer> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<unsigned long>(k));
  return d;
}

// Newton iteration to a root modulo m, starting from a simple root mod q.
Integer hensel_lift(const std::vector<Integer>& c, Integer x, const Integer& m) {
  const auto dc = derivative(c);
  for (int it = 0; it < 128; ++it) {
    const Integer fx = eval_mod(c, x, m);
    if (sgn(fx) == 0) return x;
    x = modm(x - fx * inv_mod(eval_mod(dc, x, m), m), m);
  }
  throw Error("Hensel lift did not converge");
}

// Upper bound for |l*alpha| over all roots alpha of an integral polynomial.
Integer root_bound(const IntegralPoly& ip) {
  auto abs_bound = [](const Integer& a, const Integer& b) -> Integer { return isqrt(a * a - a * b + b * b) + 1; };
  const std::size_t n = ip.a.size() - 1;
  Integer worst = 0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, abs_bound(ip.a[i], ip.b[i]));
  return abs_bound(ip.a[n], ip.b[n]) + worst;
}

}  // namespace

std::vector<Eis> squarefree_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  const int n = p.degree();
  if (n <= 0) return {};
  if (n == 1) return {-p.coeff(0) / p.coeff(1)};

  const IntegralPoly ip = integral_model(p);
  const std::size_t deg = static_cast<std::size_t>(n);

  for (u64 q = 7;; q += 6) {
    if (!is_prime(q)) continue;
    u64 r = 1;
    for (u64 g = 2; r == 1; ++g) r = powmod(g, (q - 1) / 3, q);
    const u64 embeddings[2] = {r, (2 * q - 1 - r) % q};

    // Both reductions must keep the degree and stay squarefree.
    std::vector<ModPoly> images;
    bool good = true;
    for (u64 e : embeddings) {
      ModPoly f(deg + 1);
      for (std::size_t i = 0; i <= deg; ++i) f[i] = (mod_of(ip.a[i], q) + mod_of(ip.b[i], q) * e) % q;
      if (f.back() == 0) {
        good = false;
        break;
      }
      ModPoly df;
      for (std::size_t i = 1; i <= deg; ++i) df.push_back(f[i] * (i % q) % q);
      trim(df);
      if (df.empty() || mod_gcd_degree(f, df, q) != 0) {
        good = false;
        break;
      }
      images.push_back(std::move(f));
    }
    if (!good) continue;

    std::vector<std::vector<u64>> residues(2);
    for (int e = 0; e < 2; ++e) {
      for (u64 x = 0; x < q; ++x) {
        u64 acc = 0;
        for (std::size_t i = deg + 1; i-- > 0;) acc = (acc * x + images[e][i]) % q;
        if (acc == 0) residues[e].push_back(x);
      }
    }
    std::vector<Eis> found;
    if (residues[0].empty() || residues[1].empty()) return found;

    // Modulus large enough to recover the Eisenstein integer l*alpha.
    const Integer bound = 8 * root_bound(ip);
    Integer m = q;
    while (m <= bound) m *= m;

    const std::vector<Integer> cyclo = {1, 1, 1};
    const Integer rm = hensel_lift(cyclo, Integer(static_cast<unsigned long>(r)), m);
    const Integer rms[2] = {rm, modm(-1 - rm, m)};
    const Integer diff_inv = inv_mod(rms[0] - rms[1], m);

    std::vector<Integer> lifted[2];
    Integer lead_img[2];
    for (int e = 0; e < 2; ++e) {
      std::vector<Integer> c(deg + 1);
      for (std::size_t i = 0; i <= deg; ++i) c[i] = modm(ip.a[i] + ip.b[i] * rms[e], m);
      lead_img[e] = c.back();
      for (u64 x : residues[e]) lifted[e].push_back(modm(lead_img[e] * hensel_lift(c, Integer(static_cast<unsigned long>(x)), m), m));
    }

    const Eis lead(Rational(ip.a[deg]), Rational(ip.b[deg]));
    for (const auto& v1 : lifted[0]) {
      for (const auto& v2 : lifted[1]) {
        const Integer bb = mod_sym((v1 - v2) * diff_inv, m);
        const Integer aa = mod_sym(v1 - bb * rms[0], m);
        const Eis alpha = Eis(Rational(aa), Rational(bb)) / lead;
        if (p(alpha).is_zero() && std::find(found.begin(), found.end(), alpha) == found.end()) found.push_back(alpha);
      }
    }
    return found;
  }
}

RootSet lambda_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("lambda_roots: zero polynomial");
  RootSet out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    UniPoly rest = factor;
    for (const Eis& r : squarefree_roots(factor)) {
      out.roots.emplace_back(r, mult);
      rest = exact_quotient(rest, UniPoly(std::vector<Eis>{-r, Eis(1)}));
    }
    if (rest.degree() > 0) out.unresolved.emplace_back(rest.monic(), mult);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::vector<Eis> RootSet::values() const {
  std::vector<Eis> v;
  for (const auto& [r, m] : roots) v.push_back(r);
  return v;
}

int RootSet::unresolved_degree() const {
  int d = 0;
  for (const auto& [f, m] : unresolved) d += f.degree() * m;
  return d;
}

}  // namespace plab
