#include "plab/uni_poly.hpp"

#include "plab/errors.hpp"

namespace plab {

UniPoly::UniPoly(const Eis& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Eis> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Eis& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Eis> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Eis UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Eis();
  return coeffs_[static_cast<std::size_t>(k)];
}

Eis UniPoly::operator()(const Eis& t) const {
  Eis acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Eis> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Eis(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Eis inv = leading().inverse();
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UniPoly UniPoly::shifted(const Eis& shift) const {
  // Horner in the shifted variable.
  UniPoly acc;
  const UniPoly lin(std::vector<Eis>{shift, Eis(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::conj() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = c.conj();
  return r;
}

bool UniPoly::has_rational_coeffs() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& x, const UniPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Eis> r(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) r[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Eis& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(1);
  UniPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Eis& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono;
    if (k == 1) mono = var;
    else if (k > 1) mono = var + "^" + std::to_string(k);

    bool negative = false;
    std::string factor;
    if (c.is_monomial()) {
      Eis mag = c;
      const Rational& lead = c.is_rational() ? c.a() : c.b();
      if (sgn(lead) < 0) {
        negative = true;
        mag = -c;
      }
      if (!mono.empty() && mag.is_one()) factor = mono;
      else factor = mono.empty() ? mag.str() : mag.str() + "*" + mono;
    } else {
      factor = mono.empty() ? (k == degree() ? c.str() : "(" + c.str() + ")") : "(" + c.str() + ")*" + mono;
    }
    if (out.empty()) out = negative ? "-" + factor : factor;
    else out += (negative ? " - " : " + ") + factor;
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  const Eis inv = b.leading().inverse();
  const int db = b.degree();
  std::vector<Eis> r = a.coeffs();
  std::vector<Eis> q(static_cast<std::size_t>(a.degree() - db + 1));
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const Eis& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Eis f = top * inv;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k - db)] = f;
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact univariate division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) return {};
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  const UniPoly f = p.monic();
  const UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_quotient(f, a);
  UniPoly c = exact_quotient(fp, a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int root_multiplicity(const UniPoly& p, const Eis& r) {
  if (p.is_zero()) throw Error("root multiplicity of the zero polynomial");
  int k = 0;
  UniPoly q = p;
  const UniPoly lin(std::vector<Eis>{-r, Eis(1)});
  while (q.degree() > 0 && q(r).is_zero()) {
    q = exact_quotient(q, lin);
    ++k;
  }
  return k;
}

}  // namespace plab
