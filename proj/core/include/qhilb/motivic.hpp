#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhilb/polynomial.hpp"
#include "qhilb/series.hpp"

namespace qhilb {

/// A class in the Grothendieck ring of varieties that lies in the image of
/// Z[z] -> K0, z -> L. That map is injective, so classes compare as polynomials.
class MotivicClass {
 public:
  MotivicClass() = default;
  MotivicClass(long n) : poly_(n) {}  // NOLINT(google-explicit-constructor)
  explicit MotivicClass(IntPolynomial poly) : poly_(std::move(poly)) {}

  /// L = [A^1].
  static MotivicClass lefschetz() { return MotivicClass(IntPolynomial::variable()); }
  /// L^k = [A^k].
  static MotivicClass affine_space(std::size_t k) {
    return MotivicClass(IntPolynomial::monomial(1, k));
  }

  const IntPolynomial& polynomial() const { return poly_; }

  friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
    return MotivicClass(a.poly_ + b.poly_);
  }
  friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) {
    return MotivicClass(a.poly_ - b.poly_);
  }
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
    return MotivicClass(a.poly_ * b.poly_);
  }
  friend MotivicClass operator-(const MotivicClass& a) { return MotivicClass(-a.poly_); }
  friend bool operator==(const MotivicClass&, const MotivicClass&) = default;

 private:
  IntPolynomial poly_;
};

std::string to_string(const MotivicClass& m);

/// A(t) = prod_{i=1..N} (1 - t^i)^{-b_i} mod t^{N+1}.
struct EulerDecomposition {
  std::size_t order = 0;
  std::vector<MotivicClass> exponents;  ///< exponents[i-1] = b_i

  const MotivicClass& exponent(std::size_t i) const { return exponents.at(i - 1); }
};

/// The unique Euler exponents of A (constant term 1, variable L).
EulerDecomposition euler_decompose(const TruncatedSeries& a);

/// Rebuilds prod (1 - t^i)^{-b_i} at the decomposition's order.
TruncatedSeries euler_recompose(const EulerDecomposition& d);

/// (1 - t^i)^{-b} for b = sum_s c_s L^s, i.e. prod_s (1 - L^s t^i)^{-c_s}.
TruncatedSeries euler_base_power(int i, const MotivicClass& b, std::size_t order);

/// A(t)^m under the power structure over K0. A must have constant term 1.
TruncatedSeries power_series(const TruncatedSeries& a, const MotivicClass& m);

struct LPowerSides {
  TruncatedSeries lhs;  ///< (1 - L^j t^i)^{-L} via power_series
  TruncatedSeries rhs;  ///< (1 - L^{j+1} t^i)^{-1} via expand_product
};

LPowerSides lpower_sides(int i, int j, std::size_t order);

struct LPowerReport {
  int i = 0;
  int j = 0;
  std::size_t order = 0;
  std::optional<Mismatch> mismatch;

  bool equal() const { return !mismatch.has_value(); }
};

/// Checks (1 - L^j t^i)^{-L} = (1 - L^{j+1} t^i)^{-1} through t^order.
LPowerReport check_lpower(int i, int j, std::size_t order);

}  // namespace qhilb
