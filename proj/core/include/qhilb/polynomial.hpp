#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qhilb {

using Integer = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Index k of coefficients() is the coefficient of z^k. Trailing zeros are
/// always stripped, so the zero polynomial has an empty coefficient list and
/// structural equality is ring equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(Integer coeff, std::size_t degree);
  /// The generator z (read as q or L depending on context).
  static IntPolynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// A single nonzero term c*z^k.
  bool is_monomial() const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const;
  std::size_t term_count() const;

  Integer evaluate(const Integer& z) const;
  IntPolynomial pow(unsigned exponent) const;
  /// z^k * p
  IntPolynomial shifted(std::size_t k) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Adds a*b into *this without a temporary product.
  void add_product(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Ascending powers of `symbol`, e.g. "-1 + 2*L^3". The zero polynomial is "0".
std::string to_string(const IntPolynomial& p, std::string_view symbol);

}  // namespace qhilb
