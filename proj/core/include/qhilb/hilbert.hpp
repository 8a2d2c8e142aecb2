#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhilb/series.hpp"
#include "qhilb/ydiag.hpp"

namespace qhilb {

/// Which identity an IdentityReport checks.
enum class IdentityKind {
  diagram_sum,    ///< diagram sum of q^{h(Y)} against the product, in q
  class_formula,  ///< power-structure assembly for T_{0,m} against the product, in L
  coprime,        ///< coprime positive weights, q-specialized product
};

std::string_view name(IdentityKind kind);

/// Outcome of comparing two sides of an identity through t^order.
struct IdentityReport {
  IdentityKind kind = IdentityKind::diagram_sum;
  int alpha = 0;
  int beta = 0;
  std::size_t order = 0;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  std::optional<Mismatch> mismatch;

  bool equal() const { return !mismatch.has_value(); }
};

/// Single line: alpha, beta, order, verdict, mismatch degree or "-", tab separated.
std::string render_tsv(const IdentityReport& r);
std::string tsv_header();

/// Indented "key: value" tree with the same fields plus both series.
std::string render_tree(const IdentityReport& r);

/// prod_{i>=1, m !| i} 1/(1-t^i) * prod_{i>=1} 1/(1 - v t^{mi}).
TruncatedSeries rhs_product_series(int m, Variable v, std::size_t order);

/// prod 1/(1-t^i) * (prod 1/(1-t^{mi}))^{L-1}, the origin stratum times the
/// Gamma_m-fixed part of the stratum away from the origin.
TruncatedSeries assembled_class_series(int m, std::size_t order);

/// Exponents (i, j) of the monomial x^i y^j.
struct Monomial2 {
  int x = 0;
  int y = 0;
};

/// The monomial ideal (y^{l_1}, x y^{l_2}, ..., x^{k-1} y^{l_k}, x^k) for
/// lambda = (l_1, ..., l_k), i.e. the torus-fixed ideal supported at the origin.
class StaircaseIdeal {
 public:
  explicit StaircaseIdeal(Partition lambda) : lambda_(std::move(lambda)) {}

  const Partition& lambda() const { return lambda_; }
  std::vector<Monomial2> generators() const;
  /// Membership by divisibility against generators().
  bool contains(Monomial2 m) const;

 private:
  Partition lambda_;
};

/// Number of monomials outside I_{lambda,0}.
int staircase_colength(const Partition& lambda);

/// Reads an L-series as a q-series (L -> q).
TruncatedSeries specialize_to_q(const TruncatedSeries& a);

IdentityReport verify_diagram_identity(int alpha, int beta, std::size_t order);
IdentityReport verify_class_formula(int m, std::size_t order);
/// Throws std::invalid_argument unless alpha, beta >= 1 and gcd(alpha, beta) = 1.
IdentityReport verify_coprime(int alpha, int beta, std::size_t order);

}  // namespace qhilb
