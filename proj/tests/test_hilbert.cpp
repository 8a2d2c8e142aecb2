#include <doctest.h>

#include <stdexcept>

#include "qhilb/hilbert.hpp"
#include "qhilb/motivic.hpp"
#include "support/oracles.hpp"

using namespace qhilb;

namespace {

TruncatedSeries Q(const char* text, std::size_t order) {
  return parse_series(text, order, Variable::q);
}
TruncatedSeries L(const char* text, std::size_t order) {
  return parse_series(text, order, Variable::L);
}

}  // namespace

TEST_CASE("rhs_product_series examples") {
  CHECK(rhs_product_series(2, Variable::q, 2) == Q("1 + t + (1 + q)*t^2", 2));
  CHECK(rhs_product_series(1, Variable::q, 3) ==
        Q("1 + q*t + (q + q^2)*t^2 + (q + q^2 + q^3)*t^3", 3));
  CHECK(rhs_product_series(3, Variable::L, 3) == L("1 + t + 2*t^2 + (2 + L)*t^3", 3));
  CHECK_THROWS_AS(rhs_product_series(0, Variable::q, 3), std::invalid_argument);
}

TEST_CASE("rhs_product_series against the divisible-parts count") {
  for (int m = 1; m <= 6; ++m) {
    const auto expected = oracle::divisible_parts_counts(m, 16);
    CHECK(rhs_product_series(m, Variable::q, 16) == TruncatedSeries(Variable::q, 16, expected));
  }
}

TEST_CASE("assembled_class_series examples") {
  CHECK(assembled_class_series(1, 2) == L("1 + L*t + (L^2 + L)*t^2", 2));
  CHECK(assembled_class_series(1, 2) == rhs_product_series(1, Variable::L, 2));
  CHECK(assembled_class_series(2, 2) == L("1 + t + (1 + L)*t^2", 2));
  const std::vector<ProductFactor> euler{{1, 1, -1}, {1, 2, -1}, {1, 3, -1}, {1, 4, -1}};
  CHECK(assembled_class_series(5, 4) == expand_product(euler, Variable::L, 4));
  CHECK_THROWS_AS(assembled_class_series(0, 4), std::invalid_argument);
}

TEST_CASE("staircase ideal") {
  const StaircaseIdeal ideal(Partition({3, 1}));
  const auto gens = ideal.generators();
  REQUIRE(gens.size() == 3);
  CHECK((gens[0].x == 0 && gens[0].y == 3));
  CHECK((gens[1].x == 1 && gens[1].y == 1));
  CHECK((gens[2].x == 2 && gens[2].y == 0));
  CHECK(ideal.contains({0, 3}));
  CHECK(ideal.contains({1, 1}));
  CHECK_FALSE(ideal.contains({0, 2}));
  CHECK_FALSE(ideal.contains({1, 0}));

  CHECK(staircase_colength(Partition()) == 0);
  CHECK(staircase_colength(Partition({1})) == 1);
  CHECK(staircase_colength(Partition({3, 1})) == 4);
}

TEST_CASE("staircase colength equals |lambda| for |lambda| <= 12") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) CHECK(staircase_colength(lambda) == n);
  }
}

TEST_CASE("specialize_to_q") {
  CHECK(specialize_to_q(L("1 + L*t", 1)) == Q("1 + q*t", 1));
  CHECK(specialize_to_q(rhs_product_series(2, Variable::L, 12)) ==
        rhs_product_series(2, Variable::q, 12));
  CHECK(specialize_to_q(assembled_class_series(3, 10)) == rhs_product_series(3, Variable::q, 10));
  CHECK_THROWS_AS(specialize_to_q(Q("1", 1)), std::invalid_argument);
}

TEST_CASE("verify_diagram_identity") {
  CHECK(verify_diagram_identity(1, 1, 20).equal());
  CHECK(verify_diagram_identity(2, 1, 20).equal());
  CHECK(verify_diagram_identity(1, 2, 20).equal());

  const auto anomaly = verify_diagram_identity(0, 2, 6);
  REQUIRE_FALSE(anomaly.equal());
  CHECK(anomaly.mismatch->degree == 2);
  CHECK(anomaly.mismatch->lhs == IntPolynomial(2));
  CHECK(anomaly.mismatch->rhs == IntPolynomial({1, 1}));
  CHECK_THROWS_AS(verify_diagram_identity(0, 0, 4), std::invalid_argument);
}

TEST_CASE("verify_class_formula") {
  CHECK(verify_class_formula(1, 15).equal());
  CHECK(verify_class_formula(2, 20).equal());
  CHECK(verify_class_formula(4, 24).equal());
  CHECK_THROWS_AS(verify_class_formula(0, 4), std::invalid_argument);
}

TEST_CASE("verify_coprime") {
  CHECK(verify_coprime(1, 1, 25).equal());
  CHECK(verify_coprime(3, 2, 25).equal());
  CHECK_THROWS_AS(verify_coprime(2, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_coprime(0, 1, 10), std::invalid_argument);
}

TEST_CASE("q = 1 degeneration gives p(n) on both sides through t^30") {
  const auto p = oracle::partition_counts(30);
  for (int m : {1, 2, 3}) {
    const auto rhs = rhs_product_series(m, Variable::q, 30);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(rhs[n].evaluate(1) == p[n]);
  }
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}}) {
    const auto lhs = lhs_hstat_series({a, b}, 30);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(lhs[n].evaluate(1) == p[n]);
  }
}

TEST_CASE("report rendering") {
  const auto ok = verify_diagram_identity(2, 1, 5);
  CHECK(render_tsv(ok) == "2\t1\t5\tequal\t-");
  const auto bad = verify_diagram_identity(0, 2, 6);
  CHECK(render_tsv(bad) == "0\t2\t6\tmismatch\t2");
  const std::string tree = render_tree(bad);
  CHECK(tree.find("  verdict: mismatch\n") != std::string::npos);
  CHECK(tree.find("    degree: 2\n    lhs: 2\n    rhs: 1 + q\n") != std::string::npos);
  CHECK(render_tsv(verify_class_formula(3, 6)) == "0\t3\t6\tequal\t-");
}
