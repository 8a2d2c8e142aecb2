#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhilb/polynomial.hpp"

namespace qhilb {

/// The formal variable carried by series coefficients: the Poincare variable
/// q or the Lefschetz class L. Arithmetic between the two is rejected.
enum class Variable { q, L };

std::string_view symbol(Variable v);

/// Exact power series c_0 + c_1 t + ... + c_N t^N modulo t^{N+1}, with
/// coefficients in Z[v].
///
/// The order N is inclusive and part of the value; nothing here raises it.
class TruncatedSeries {
 public:
  /// The zero series.
  TruncatedSeries(Variable var, std::size_t order);
  /// Terms beyond `order` are dropped; missing terms are zero.
  TruncatedSeries(Variable var, std::size_t order, std::vector<IntPolynomial> coeffs);

  static TruncatedSeries one(Variable var, std::size_t order);

  Variable variable() const { return var_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const IntPolynomial> coefficients() const { return coeffs_; }
  const IntPolynomial& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Same coefficients, order lowered to `new_order` (must not exceed order()).
  TruncatedSeries truncated(std::size_t new_order) const;
  /// Same coefficients read in another variable.
  TruncatedSeries renamed(Variable var) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  Variable var_;
  std::vector<IntPolynomial> coeffs_;
};

/// Cauchy product at the common order. Orders and variables must agree.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// B with A*B = 1 mod t^{N+1}. The constant term of A must be a unit (+1 or -1).
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// A^e for an integer e; negative e goes through series_inverse.
TruncatedSeries series_pow(const TruncatedSeries& a, long long e);

/// One factor (1 - coefficient * t^t_exponent)^multiplicity of a product.
struct ProductFactor {
  IntPolynomial coefficient;
  int t_exponent = 1;
  long long multiplicity = 1;
};

/// Exact truncation of the product of `factors` in Z[var][[t]] / t^{N+1}.
/// Factors whose t-exponent exceeds `order` are congruent to 1 and skipped.
TruncatedSeries expand_product(std::span<const ProductFactor> factors, Variable var,
                               std::size_t order);

/// t -> L^s t: coefficient of t^n is multiplied by L^{s n}.
TruncatedSeries substitute_t_scale(const TruncatedSeries& a, std::size_t s);

/// t -> t^s, truncated at out_order. The input determines the output only
/// through degree s*(N+1)-1, so out_order beyond that is rejected.
TruncatedSeries substitute_t_power(const TruncatedSeries& a, std::size_t s,
                                   std::size_t out_order);

/// First degree where two series of the same variable and order differ.
struct Mismatch {
  std::size_t degree = 0;
  IntPolynomial lhs;
  IntPolynomial rhs;
};

std::optional<Mismatch> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// Canonical rendering "c0 + c1*t + c2*t^2 + ...". Multi-term coefficients are
/// parenthesised, zero terms omitted, the zero series is "0".
std::string to_string(const TruncatedSeries& s);

/// Parses the canonical rendering (and any sum/product of integers, the
/// coefficient variable, t and parenthesised subexpressions) modulo t^{order+1}.
/// The coefficient variable is inferred from the text unless `var` is given.
TruncatedSeries parse_series(std::string_view text, std::size_t order,
                             std::optional<Variable> var = std::nullopt);

/// Parses a polynomial in the symbol of `var` (no t allowed).
IntPolynomial parse_polynomial(std::string_view text, Variable var);

}  // namespace qhilb
