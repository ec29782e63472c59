#include "plab/multi_poly.hpp"

#include <algorithm>
#include <numeric>

#include "plab/errors.hpp"

namespace plab {

namespace {

unsigned mono_degree(const MultiPoly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

MultiPoly::Monomial mono_mul(const MultiPoly::Monomial& x, const MultiPoly::Monomial& y) {
  MultiPoly::Monomial r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

bool mono_divides(const MultiPoly::Monomial& d, const MultiPoly::Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

bool MultiPoly::Order::operator()(const Monomial& x, const Monomial& y) const {
  const unsigned dx = mono_degree(x), dy = mono_degree(y);
  if (dx != dy) return dx > dy;
  return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const LambdaPoly& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Monomial(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.nvars()) throw ArityMismatch("variable index out of range");
  Monomial m(p.nvars(), 0);
  m[index] = 1;
  p.add_term(m, LambdaPoly(1));
  return p;
}

MultiPoly MultiPoly::lambda(std::vector<std::string> vars) {
  return constant(std::move(vars), LambdaPoly::variable());
}

MultiPoly MultiPoly::from_univariate(std::vector<std::string> vars, std::size_t index, const UniPoly& u) {
  MultiPoly p(std::move(vars));
  for (int k = 0; k <= u.degree(); ++k) {
    Monomial m(p.nvars(), 0);
    m[index] = static_cast<unsigned>(k);
    p.add_term(m, LambdaPoly(u.coeff(k)));
  }
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0); }

std::size_t MultiPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw UnknownVariable(std::string(name));
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(mono_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= nvars()) throw ArityMismatch("variable index out of range");
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

int MultiPoly::lambda_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, c.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = total_degree();
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(mono_degree(m)) != d) return false;
  return true;
}

const LambdaPoly& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

const MultiPoly::Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

LambdaPoly MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LambdaPoly() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const LambdaPoly& c) {
  if (m.size() != nvars()) throw ArityMismatch("exponent vector length does not match the variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw ArityMismatch("polynomials over different variable sets");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  x.require_same_ring(y);
  MultiPoly r(x.vars_);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) r.add_term(mono_mul(mx, my), cx * cy);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const LambdaPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, LambdaPoly(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1, MultiPoly(vars_));
  if (d < 0) return out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::specialize_lambda(const Eis& value) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) r.add_term(m, LambdaPoly(c(value)));
  return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> map(nvars(), vars.size());
  for (std::size_t i = 0; i < nvars(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (vars_[i] == vars[j]) map[i] = j;
  MultiPoly r(vars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(vars.size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == vars.size()) throw UnknownVariable(vars_[i]);
      nm[map[i]] += m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

UniPoly MultiPoly::to_univariate(std::size_t var) const {
  std::vector<Eis> coeffs(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars(); ++i)
      if (i != var && m[i] != 0) throw DomainError("polynomial is not univariate in " + vars_[var]);
    if (c.degree() > 0) throw DomainError("polynomial still depends on lambda");
    coeffs[m[var]] = c.constant_term();
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::normalized() const {
  if (is_zero()) return *this;
  const LambdaPoly& lc = leading_coefficient();
  if (!lc.is_constant()) return *this;
  MultiPoly r = *this;
  r *= LambdaPoly(lc.constant_term().inverse());
  return r;
}

namespace {

std::string mono_str(const MultiPoly::Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const std::string mono = mono_str(m, vars_);
    bool negative = false;
    std::string factor;
    const bool single = c.coeffs().size() == static_cast<std::size_t>(c.degree() + 1) &&
                        std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const Eis& e) { return !e.is_zero(); }) == 1;
    if (single && c.leading().is_monomial()) {
      Eis mag = c.leading();
      const Rational& lead = mag.is_rational() ? mag.a() : mag.b();
      if (sgn(lead) < 0) {
        negative = true;
        mag = -mag;
      }
      std::vector<std::string> parts;
      const int k = c.degree();
      if (!mag.is_one() || (k == 0 && mono.empty())) parts.push_back(mag.str());
      if (k == 1) parts.emplace_back("lambda");
      if (k > 1) parts.push_back("lambda^" + std::to_string(k));
      if (!mono.empty()) parts.push_back(mono);
      for (std::size_t i = 0; i < parts.size(); ++i) factor += (i ? "*" : "") + parts[i];
    } else {
      factor = "(" + c.str() + ")";
      if (!mono.empty()) factor += "*" + mono;
    }
    if (out.empty()) out = negative ? "-" + factor : factor;
    else out += (negative ? " - " : " + ") + factor;
  }
  return out;
}

LambdaPoly evaluate(const MultiPoly& p, const std::vector<Eis>& point) {
  if (point.size() != p.nvars()) throw ArityMismatch("point has " + std::to_string(point.size()) + " coordinates, polynomial has " + std::to_string(p.nvars()) + " variables");
  std::vector<std::vector<Eis>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    const int d = std::max(p.degree_in(i), 0);
    powers[i].push_back(Eis(1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  LambdaPoly acc;
  for (const auto& [m, c] : p.terms()) {
    Eis v(1);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) v *= powers[i][m[i]];
    if (!v.is_zero()) acc += c * v;
  }
  return acc;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw ArityMismatch("variable index out of range");
  MultiPoly r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    MultiPoly::Monomial nm = m;
    --nm[var];
    r.add_term(nm, c * Eis(static_cast<long>(m[var])));
  }
  return r;
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) { return partial_derivative(p, p.index_of(var)); }

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (images.size() != p.nvars()) throw ArityMismatch("substitution needs " + std::to_string(p.nvars()) + " images, got " + std::to_string(images.size()));
  if (images.empty()) return p;
  const auto& target = images.front().vars();
  for (const auto& im : images)
    if (im.vars() != target) throw ArityMismatch("substitution images use mixed variable sets");

  std::vector<std::vector<MultiPoly>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    const int d = std::max(p.degree_in(i), 0);
    powers[i].push_back(MultiPoly::constant(target, LambdaPoly(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly acc(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= powers[i][m[i]];
    acc += t;
  }
  return acc;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.vars() != b.vars()) throw ArityMismatch("polynomials over different variable sets");
  MultiPoly q(a.vars());
  MultiPoly r = a;
  const auto& lb = b.leading_monomial();
  const LambdaPoly& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const auto lr = r.leading_monomial();
    if (!mono_divides(lb, lr)) return std::nullopt;
    auto [cq, rem] = divmod(r.leading_coefficient(), cb);
    if (!rem.is_zero()) return std::nullopt;
    MultiPoly::Monomial shift(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) shift[i] = lr[i] - lb[i];
    MultiPoly t(a.vars());
    t.add_term(shift, cq);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error("inexact polynomial division");
  return *q;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw ArityMismatch("determinant of a non-square matrix");
  const auto vars = m[0][0].vars();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(vars, LambdaPoly(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      // Prefer the sparsest available pivot.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero() && (best == n || m[i][k].size() < m[best][k].size())) best = i;
      if (best == n) return MultiPoly(vars);
      std::swap(m[k], m[best]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = (k == 0) ? std::move(v) : exact_divide(v, prev);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (p.vars() != q.vars()) throw ArityMismatch("resultant of polynomials over different variable sets");
  const int m = p.degree_in(var);
  const int n = q.degree_in(var);
  if (m <= 0 || n <= 0) throw DegreeError("resultant needs positive degree in " + p.vars()[var] + " (got " + std::to_string(m) + " and " + std::to_string(n) + ")");
  const auto pc = p.coefficients_in(var);
  const auto qc = q.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(p.vars())));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = pc[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = qc[static_cast<std::size_t>(k)];
  return determinant(std::move(s));
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) { return resultant(p, q, p.index_of(var)); }

MultiPoly discriminant(const MultiPoly& p, std::size_t var) {
  const int n = p.degree_in(var);
  if (n < 2) throw DegreeError("discriminant needs degree >= 2 in " + p.vars()[var]);
  const MultiPoly lc = p.coefficients_in(var)[static_cast<std::size_t>(n)];
  MultiPoly r = exact_divide(resultant(p, partial_derivative(p, var), var), lc);
  return ((n * (n - 1) / 2) % 2) ? -r : r;
}

MultiPoly discriminant(const MultiPoly& p, std::string_view var) { return discriminant(p, p.index_of(var)); }

std::vector<std::string> xvars() { return {"x0", "x1", "x2"}; }
std::vector<std::string> yvars() { return {"y0", "y1", "y2"}; }
std::vector<std::string> uvars() { return {"u0", "u1", "u2"}; }

std::string_view bl2_sextic_text() {
  return "(y0^6 + y1^6 + y2^6) + 2*(2*lambda^3 - 1)*(y0^3*y1^3 + y0^3*y2^3 + y1^3*y2^3)"
         " - 6*lambda^2*y0*y1*y2*(y0^3 + y1^3 + y2^3) - 3*lambda*(lambda^3 - 4)*y0^2*y1^2*y2^2";
}

std::string_view sextic_interpretation_note() {
  return "sextic term y1 y2 y3 (y0^3 + y1^3 + y2^3) read as y0 y1 y2 (y0^3 + y1^3 + y2^3); y3 is not a variable";
}

MultiPoly bl2_sextic() { return parse_poly(bl2_sextic_text(), yvars()); }

std::vector<MultiPoly> quadratic_map() {
  return {parse_poly("3*x0^2 - 3*lambda*x1*x2", xvars()), parse_poly("3*x1^2 - 3*lambda*x0*x2", xvars()),
          parse_poly("3*x2^2 - 3*lambda*x0*x1", xvars())};
}

MultiPoly hesse_cubic() { return parse_poly("x0^3 + x1^3 + x2^3 - 3*lambda*x0*x1*x2", xvars()); }

}  // namespace plab
