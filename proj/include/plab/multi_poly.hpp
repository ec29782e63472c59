#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plab/uni_poly.hpp"

namespace plab {

/// Sparse polynomial in named variables with LambdaPoly coefficients.
///
/// lambda is never one of the declared variables; it only lives inside the
/// coefficients.  Terms are kept in descending graded-lex order with the
/// declared variable order (first variable largest), so iteration order and
/// rendering are canonical.  Zero coefficients are never stored.
class MultiPoly {
 public:
  using Monomial = std::vector<unsigned>;
  struct Order {
    bool operator()(const Monomial& x, const Monomial& y) const;
  };
  using Terms = std::map<Monomial, LambdaPoly, Order>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const LambdaPoly& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
  /// The parameter lambda as an element of the ring.
  static MultiPoly lambda(std::vector<std::string> vars);
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static MultiPoly from_univariate(std::vector<std::string> vars, std::size_t index, const UniPoly& u);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero counts as constant.
  bool is_constant() const;

  /// Index of a declared variable; throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  int degree_in(std::string_view name) const { return degree_in(index_of(name)); }
  /// Highest power of lambda in any coefficient.
  int lambda_degree() const;
  bool lambda_free() const { return lambda_degree() <= 0; }
  bool is_homogeneous() const;

  /// Coefficient of the greatest monomial.
  const LambdaPoly& leading_coefficient() const;
  const Monomial& leading_monomial() const;
  LambdaPoly coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const LambdaPoly& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const LambdaPoly& c);

  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(MultiPoly x, const LambdaPoly& c) { return x *= c; }
  friend MultiPoly operator*(MultiPoly x, const Eis& c) { return x *= LambdaPoly(c); }
  friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.vars_ == y.vars_ && x.terms_ == y.terms_; }

  MultiPoly pow(unsigned e) const;

  /// Coefficients with respect to one variable: result[k] is the coefficient
  /// of var^k, expressed in the same variable set (with var absent).
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  /// Replace lambda by a value.
  MultiPoly specialize_lambda(const Eis& value) const;

  /// Reinterprets the polynomial over another variable list, matching by
  /// name.  Variables that occur must exist in the new list.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  /// Lambda-free polynomial in at most the single variable `var`.
  UniPoly to_univariate(std::size_t var) const;

  /// Divide by the leading coefficient when it is a constant (Eis), so
  /// that proportional polynomials normalize identically.
  MultiPoly normalized() const;

  /// Canonical text form, parseable by parse_poly.
  std::string str() const;

 private:
  void require_same_ring(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Parses the polynomial grammar: integers, `/` by constants, `rho`,
/// `lambda`, declared variables, `+ - * ^`, parentheses.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Value at a point; lambda stays symbolic.
LambdaPoly evaluate(const MultiPoly& p, const std::vector<Eis>& point);

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);
MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);

/// p(images[0], ..., images[n-1]); all images must share one variable set.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
/// Exact quotient; throws Error when the division is not exact.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Determinant of the Sylvester matrix of p and q in `var` (rows of p first).
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// (-1)^(n(n-1)/2) Res(p, dp/dvar) / lc(p); n = deg_var(p) >= 2.
MultiPoly discriminant(const MultiPoly& p, std::size_t var);
MultiPoly discriminant(const MultiPoly& p, std::string_view var);

/// The sextic D(lambda) in y0, y1, y2:
///   (y0^6 + y1^6 + y2^6) + 2(2 lambda^3 - 1)(y0^3 y1^3 + y0^3 y2^3 + y1^3 y2^3)
///   - 6 lambda^2 y0 y1 y2 (y0^3 + y1^3 + y2^3) - 3 lambda (lambda^3 - 4) y0^2 y1^2 y2^2
/// The printed middle term reads `y1 y2 y3`; there is no y3, and the only
/// degree-6 reading is the triple product y0 y1 y2.
MultiPoly bl2_sextic();
/// Text of bl2_sextic() as fed to the parser.
std::string_view bl2_sextic_text();
/// Reading applied to the printed "y1 y2 y3" term of the sextic.
std::string_view sextic_interpretation_note();

/// Images of y0, y1, y2 as quadratics in x0, x1, x2:
///   y0 = 3x0^2 - 3 lambda x1 x2, y1 = 3x1^2 - 3 lambda x0 x2, y2 = 3x2^2 - 3 lambda x0 x1.
std::vector<MultiPoly> quadratic_map();

/// x0^3 + x1^3 + x2^3 - 3 lambda x0 x1 x2; its gradient is quadratic_map().
MultiPoly hesse_cubic();

std::vector<std::string> xvars();
std::vector<std::string> yvars();
std::vector<std::string> uvars();

}  // namespace plab
