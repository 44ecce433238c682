#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arithdyn/bigint.hpp"
#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Sparse polynomial with integer coefficients in a subset of the variables
/// {X, Y, z, w, k, b}.
///
/// Variables are always held in the fixed order X, Y, z, w, k, b, and terms are
/// kept in lexicographically descending order of exponent vectors, so the
/// first term is the lead term for the order X > Y > z > w > k > b. Zero
/// coefficients are never stored; the zero polynomial has no terms.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, BigInt, std::greater<>>;

  MultiPoly() = default;
  /// Zero polynomial over `vars` (any order; stored canonically).
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(const BigInt& c);
  static MultiPoly variable(std::string_view name);
  /// c * prod name^exp
  static MultiPoly monomial(const BigInt& c, const std::map<std::string, std::uint32_t>& powers);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True for the zero polynomial and for polynomials whose only term has all
  /// exponents zero.
  bool is_constant() const;
  /// Constant term (coefficient of the all-zero exponent vector).
  BigInt constant_term() const;

  /// Index of `var` in vars(), or -1.
  int index_of(std::string_view var) const;
  std::uint32_t degree(std::string_view var) const;

  /// Coefficient of var^e as a polynomial in the remaining variables.
  MultiPoly coefficient(std::string_view var, std::uint32_t e) const;

  /// Copy over a superset of the current variables.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /// Copy with variables that appear in no term removed.
  MultiPoly trimmed() const;

  /// Adds c * x^exps (exps aligned with vars()).
  void add_term(const Exponents& exps, const BigInt& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned e) const;

  /// Equality as polynomials (variable sets are aligned first).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable form, e.g. "k^2*X^2 + k^2*b*Y^2".
  std::string to_string() const;

 private:
  friend MultiPoly div_exact(const MultiPoly& num, const MultiPoly& den);

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

/// Quotient q with q * den == num. Throws DivisionByZero for den == 0 and
/// NonExactDivision when the remainder is nonzero (over Z).
MultiPoly div_exact(const MultiPoly& num, const MultiPoly& den);

/// numerator / denominator, denominator > 0.
struct ScaledPoly {
  MultiPoly numerator;
  BigInt denominator = 1;

  bool is_constant() const { return numerator.is_constant(); }
  BigRat value() const;
};

/// Substitutes the bound variables; unbound ones stay symbolic.
ScaledPoly evaluate(const MultiPoly& p, const std::map<std::string, BigRat>& bindings);
/// Integer-valued substitution; result stays integral.
MultiPoly evaluate_integer(const MultiPoly& p, const std::map<std::string, BigInt>& bindings);

bool is_homogeneous(const MultiPoly& p, std::string_view x, std::string_view y);
/// y -> 1 and x renamed to `z`. Throws NotHomogeneous.
MultiPoly dehomogenize(const MultiPoly& p, std::string_view x = "X", std::string_view y = "Y",
                       std::string_view z = "z");

/// Largest e with v^e dividing every term. Throws ZeroPolynomial.
std::uint32_t var_valuation(const MultiPoly& p, std::string_view v);

/// Non-negative gcd of all coefficients (0 for the zero polynomial).
BigInt content(const MultiPoly& p);

/// Renames `from` to `to` while dividing its exponents by `divisor`.
/// Throws OddExponent if some exponent is not a multiple of `divisor`.
MultiPoly substitute_power(const MultiPoly& p, std::string_view from, std::string_view to,
                           std::uint32_t divisor);

/// {"vars": [...], "terms": [{"coeff": "<decimal>", "exps": [...]}, ...]} in
/// canonical term order, no whitespace.
std::string poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(std::string_view text);

}  // namespace arithdyn
