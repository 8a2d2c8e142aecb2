#include <doctest.h>

#include "qhilb/polynomial.hpp"

using qhilb::Integer;
using qhilb::IntPolynomial;

TEST_CASE("zero polynomial is the empty list") {
  CHECK(IntPolynomial().coefficients().empty());
  CHECK(IntPolynomial(0).is_zero());
  CHECK(IntPolynomial({0, 0, 0}).is_zero());
  CHECK(IntPolynomial().degree() == -1);
}

TEST_CASE("trailing zeros are stripped") {
  IntPolynomial p({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == IntPolynomial({1, 2}));
  CHECK((IntPolynomial({1, 1}) - IntPolynomial({0, 1})) == IntPolynomial(1));
}

TEST_CASE("arithmetic") {
  const IntPolynomial z = IntPolynomial::variable();
  CHECK((IntPolynomial(1) + z) * (IntPolynomial(1) - z) == IntPolynomial({1, 0, -1}));
  CHECK((IntPolynomial(1) + z).pow(3) == IntPolynomial({1, 3, 3, 1}));
  CHECK(z.pow(0) == IntPolynomial(1));
  CHECK(-z == IntPolynomial({0, -1}));
  CHECK(z.shifted(2) == IntPolynomial::monomial(1, 3));
  CHECK(IntPolynomial({2, 3}) * Integer(0) == IntPolynomial());
  CHECK(IntPolynomial({1, 2, 3}).evaluate(2) == 17);
}

TEST_CASE("no overflow past 64 bits") {
  const IntPolynomial p = IntPolynomial({1, 1}).pow(100);
  Integer expected;
  mpz_bin_uiui(expected.get_mpz_t(), 100, 50);
  CHECK(p.coefficient(50) == expected);
  CHECK(p.evaluate(1) == Integer("1267650600228229401496703205376"));
}

TEST_CASE("monomial detection") {
  CHECK(IntPolynomial::monomial(-3, 2).is_monomial());
  CHECK_FALSE(IntPolynomial({1, 1}).is_monomial());
  CHECK_FALSE(IntPolynomial().is_monomial());
  CHECK(IntPolynomial::monomial(0, 5).is_zero());
}

TEST_CASE("rendering uses ascending powers") {
  CHECK(to_string(IntPolynomial(), "q") == "0");
  CHECK(to_string(IntPolynomial({1, 1}), "q") == "1 + q");
  CHECK(to_string(IntPolynomial({-1, 1}), "L") == "-1 + L");
  CHECK(to_string(IntPolynomial({0, -1, 1}), "L") == "-L + L^2");
  CHECK(to_string(IntPolynomial({3, 0, -2}), "q") == "3 - 2*q^2");
  CHECK(to_string(IntPolynomial::monomial(-1, 4), "L") == "-L^4");
}
