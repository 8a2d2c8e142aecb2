#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qhilb/motivic.hpp"
#include "support/properties.hpp"

using namespace qhilb;

namespace {

TruncatedSeries L(const char* text, std::size_t order) {
  return parse_series(text, order, Variable::L);
}

const MotivicClass kL = MotivicClass::lefschetz();

std::vector<MotivicClass> exponents(std::initializer_list<MotivicClass> bs) { return bs; }

}  // namespace

TEST_CASE("euler_decompose examples") {
  const auto geometric = series_inverse(L("1 - t", 4));
  CHECK(euler_decompose(geometric).exponents == exponents({1, 0, 0, 0}));

  const auto d = euler_decompose(L("1 + t", 4));
  CHECK(d.exponents == exponents({1, -1, 0, 0}));
  // (1 - t^2)/(1 - t) = 1 + t
  const std::vector<ProductFactor> fs{{1, 1, -1}, {1, 2, 1}};
  CHECK(expand_product(fs, Variable::L, 4) == L("1 + t", 4));

  // 1/(1 - L t) is itself the base factor (1 - t)^{-L}
  const auto lgeo = series_inverse(L("1 - L*t", 3));
  const auto dl = euler_decompose(lgeo);
  CHECK(dl.exponents == exponents({kL, 0, 0}));
  CHECK(euler_recompose(dl) == lgeo);
}

TEST_CASE("euler_decompose preconditions") {
  CHECK_THROWS_AS(euler_decompose(L("2 + t", 3)), std::domain_error);
  CHECK_THROWS_AS(euler_decompose(L("-1 + t", 3)), std::domain_error);
  CHECK_THROWS_AS(euler_decompose(parse_series("1 + q*t", 3, Variable::q)), std::invalid_argument);
  CHECK(euler_decompose(L("1", 0)).exponents.empty());
}

TEST_CASE("euler_base_power examples") {
  CHECK(euler_base_power(1, kL, 2) == L("1 + L*t + L^2*t^2", 2));
  CHECK(euler_base_power(2, 1, 4) == L("1 + t^2 + t^4", 4));
  // (1 - L t)^{-1} (1 - t)
  CHECK(euler_base_power(1, kL - 1, 2) == L("1 + (L - 1)*t + (L^2 - L)*t^2", 2));
  CHECK(euler_base_power(1, -2, 3) == L("1 - 2*t + t^2", 3));
  CHECK(euler_base_power(5, kL, 3) == L("1", 3));
  CHECK_THROWS_AS(euler_base_power(0, kL, 3), std::invalid_argument);
}

TEST_CASE("euler_base_power handles multiplicities beyond machine integers") {
  const MotivicClass huge(IntPolynomial(std::vector<Integer>{Integer("100000000000000000000")}));
  const auto s = euler_base_power(1, huge, 2);
  // (1 - t)^{-k} = 1 + k t + k(k+1)/2 t^2
  const Integer k("100000000000000000000");
  CHECK(s[1] == IntPolynomial(std::vector<Integer>{k}));
  CHECK(s[2] == IntPolynomial(std::vector<Integer>{Integer(k * (k + 1) / 2)}));
}

TEST_CASE("power_series examples") {
  const auto geometric = series_inverse(L("1 - t", 6));
  CHECK(power_series(geometric, kL) == series_inverse(L("1 - L*t", 6)));
  CHECK(power_series(L("1 + t", 2), kL) == L("1 + L*t + (L^2 - L)*t^2", 2));

  const auto a = L("1 + 3*t - L*t^2 + (L^2 + 2)*t^4", 6);
  CHECK(power_series(a, 1) == a);
  CHECK(power_series(a, 0) == TruncatedSeries::one(Variable::L, 6));
  CHECK(series_mul(power_series(a, -1), a) == TruncatedSeries::one(Variable::L, 6));
}

TEST_CASE("symmetric powers of the affine line") {
  const auto s = power_series(series_inverse(L("1 - t", 8)), kL);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(s[n] == IntPolynomial::monomial(1, n));
}

TEST_CASE("unordered configurations of the affine line") {
  // Degree-n coefficients of (1+t)^L are the classes of n distinct unordered
  // points of A^1: 1, L, L^2 - L, L^3 - L^2, ...
  const auto s = power_series(L("1 + t", 4), kL);
  CHECK(s[2] == IntPolynomial({0, -1, 1}));
  CHECK(s[3] == IntPolynomial({0, 0, -1, 1}));
  CHECK(s[4] == IntPolynomial({0, 0, 0, -1, 1}));
}

TEST_CASE("check_lpower") {
  CHECK(check_lpower(1, 0, 10).equal());
  CHECK(check_lpower(3, 2, 12).equal());
  CHECK_THROWS_AS(check_lpower(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_lpower(1, -1, 4), std::invalid_argument);

  auto sides = lpower_sides(2, 0, 8);
  REQUIRE_FALSE(first_mismatch(sides.lhs, sides.rhs).has_value());
  // corrupt the right side at t^2
  std::vector<IntPolynomial> cs(sides.rhs.coefficients().begin(), sides.rhs.coefficients().end());
  cs[2] += IntPolynomial(1);
  const auto mismatch = first_mismatch(sides.lhs, TruncatedSeries(Variable::L, 8, cs));
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->degree == 2);
}

TEST_CASE("property suites") {
  for (const auto& r : {props::euler_round_trip(1000, 11), props::exponent_additivity(1000, 12),
                        props::exponent_multiplicativity(1000, 13),
                        props::scale_compatibility(1000, 14),
                        props::t_power_compatibility(1000, 15)}) {
    INFO(r.name);
    CHECK(r.cases == 1000);
    CHECK(r.failures.empty());
  }
}
