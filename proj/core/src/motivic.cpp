#include "qhilb/motivic.hpp"

#include <stdexcept>

namespace qhilb {

std::string to_string(const MotivicClass& m) { return to_string(m.polynomial(), "L"); }

namespace {

void require_lefschetz_unit(const TruncatedSeries& a, const char* op) {
  if (a.variable() != Variable::L) {
    throw std::invalid_argument(std::string(op) + ": series must have coefficients in L");
  }
  if (!(a[0] == IntPolynomial(1))) {
    throw std::domain_error(std::string(op) + ": constant term must be 1, got " +
                            to_string(a[0], "L"));
  }
}

// (1 - x t^i)^k as sum_n binom(k, n) (-x)^n t^{in}, valid for every integer k.
// Negative k gives the geometric-type series, positive k a finite product.
void multiply_by_binomial(TruncatedSeries& acc, const IntPolynomial& x, std::size_t i,
                          const Integer& k) {
  const std::size_t order = acc.order();
  std::vector<IntPolynomial> cs(order + 1);
  cs[0] = 1;
  Integer binom = 1;  // binom(k, n)
  IntPolynomial neg_x_pow(1);
  const IntPolynomial neg_x = -x;
  for (std::size_t n = 1; n * i <= order; ++n) {
    binom *= k - static_cast<long>(n) + 1;
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), n);
    neg_x_pow *= neg_x;
    if (binom == 0) break;
    cs[n * i] = neg_x_pow * binom;
  }
  acc = acc * TruncatedSeries(acc.variable(), order, std::move(cs));
}

}  // namespace

TruncatedSeries euler_base_power(int i, const MotivicClass& b, std::size_t order) {
  if (i <= 0) throw std::invalid_argument("euler_base_power: i must be >= 1");
  TruncatedSeries out = TruncatedSeries::one(Variable::L, order);
  const auto step = static_cast<std::size_t>(i);
  if (step > order) return out;
  const auto& cs = b.polynomial().coefficients();
  for (std::size_t s = 0; s < cs.size(); ++s) {
    if (cs[s] == 0) continue;
    // (1 - t^i)^{-c L^s} = (1 - L^s t^i)^{-c}
    multiply_by_binomial(out, IntPolynomial::monomial(1, s), step, -cs[s]);
  }
  return out;
}

EulerDecomposition euler_decompose(const TruncatedSeries& a) {
  require_lefschetz_unit(a, "euler_decompose");
  const std::size_t order = a.order();
  EulerDecomposition d{order, {}};
  d.exponents.reserve(order);
  // Invariant: residual = A * prod_{j<i} (1 - t^j)^{b_j} = 1 + O(t^i).
  TruncatedSeries residual = a;
  for (std::size_t i = 1; i <= order; ++i) {
    MotivicClass b(residual[i]);
    if (!(b == MotivicClass())) {
      residual = residual * euler_base_power(static_cast<int>(i), -b, order);
    }
    d.exponents.push_back(std::move(b));
  }
  return d;
}

TruncatedSeries euler_recompose(const EulerDecomposition& d) {
  TruncatedSeries out = TruncatedSeries::one(Variable::L, d.order);
  for (std::size_t i = 1; i <= d.exponents.size(); ++i) {
    if (d.exponent(i) == MotivicClass()) continue;
    out = out * euler_base_power(static_cast<int>(i), d.exponent(i), d.order);
  }
  return out;
}

TruncatedSeries power_series(const TruncatedSeries& a, const MotivicClass& m) {
  EulerDecomposition d = euler_decompose(a);
  for (auto& b : d.exponents) b = b * m;
  return euler_recompose(d);
}

LPowerSides lpower_sides(int i, int j, std::size_t order) {
  if (i < 1 || j < 0) throw std::invalid_argument("check_lpower: need i >= 1 and j >= 0");
  const ProductFactor base{IntPolynomial::monomial(1, static_cast<std::size_t>(j)), i, -1};
  const ProductFactor target{IntPolynomial::monomial(1, static_cast<std::size_t>(j) + 1), i, -1};
  TruncatedSeries lhs = power_series(expand_product({&base, 1}, Variable::L, order),
                                     MotivicClass::lefschetz());
  TruncatedSeries rhs = expand_product({&target, 1}, Variable::L, order);
  return {std::move(lhs), std::move(rhs)};
}

LPowerReport check_lpower(int i, int j, std::size_t order) {
  LPowerSides sides = lpower_sides(i, j, order);
  return {i, j, order, first_mismatch(sides.lhs, sides.rhs)};
}

}  // namespace qhilb
