#include "qhilb/hilbert.hpp"

#include <numeric>
#include <stdexcept>

#include "qhilb/motivic.hpp"

namespace qhilb {

std::string_view name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::diagram_sum:
      return "diagram-sum";
    case IdentityKind::class_formula:
      return "class-formula";
    case IdentityKind::coprime:
      return "coprime";
  }
  return "unknown";
}

namespace {

std::vector<ProductFactor> partition_factors(int step, std::size_t order) {
  std::vector<ProductFactor> fs;
  for (int i = step; static_cast<std::size_t>(i) <= order; i += step) fs.push_back({1, i, -1});
  return fs;
}

}  // namespace

TruncatedSeries rhs_product_series(int m, Variable v, std::size_t order) {
  if (m <= 0) throw std::invalid_argument("rhs_product_series: m must be >= 1");
  std::vector<ProductFactor> fs;
  for (int i = 1; static_cast<std::size_t>(i) <= order; ++i) {
    if (i % m != 0) fs.push_back({1, i, -1});
  }
  for (int i = m; static_cast<std::size_t>(i) <= order; i += m) {
    fs.push_back({IntPolynomial::variable(), i, -1});
  }
  return expand_product(fs, v, order);
}

TruncatedSeries assembled_class_series(int m, std::size_t order) {
  if (m <= 0) throw std::invalid_argument("assembled_class_series: m must be >= 1");
  const auto origin = partition_factors(1, order);
  const auto fixed = partition_factors(m, order);
  const TruncatedSeries at_origin = expand_product(origin, Variable::L, order);
  const TruncatedSeries off_origin =
      power_series(expand_product(fixed, Variable::L, order), MotivicClass::lefschetz() - 1);
  return at_origin * off_origin;
}

std::vector<Monomial2> StaircaseIdeal::generators() const {
  const auto& parts = lambda_.parts();
  std::vector<Monomial2> gens;
  gens.reserve(parts.size() + 1);
  for (std::size_t k = 0; k < parts.size(); ++k) gens.push_back({static_cast<int>(k), parts[k]});
  gens.push_back({static_cast<int>(parts.size()), 0});
  return gens;
}

bool StaircaseIdeal::contains(Monomial2 m) const {
  for (const Monomial2& g : generators()) {
    if (m.x >= g.x && m.y >= g.y) return true;
  }
  return false;
}

int staircase_colength(const Partition& lambda) {
  const StaircaseIdeal ideal(lambda);
  // x^l and y^{l_1} are generators, so the complement sits in [0,l) x [0,l_1).
  const int x_bound = static_cast<int>(lambda.length());
  const int y_bound = lambda.empty() ? 0 : lambda.parts().front();
  int count = 0;
  for (int i = 0; i <= x_bound; ++i) {
    for (int j = 0; j <= y_bound; ++j) {
      if (!ideal.contains({i, j})) ++count;
    }
  }
  return count;
}

TruncatedSeries specialize_to_q(const TruncatedSeries& a) {
  if (a.variable() != Variable::L) {
    throw std::invalid_argument("specialize_to_q: series is not over L");
  }
  return a.renamed(Variable::q);
}

IdentityReport verify_diagram_identity(int alpha, int beta, std::size_t order) {
  const HStatParams p(alpha, beta);
  IdentityReport r{IdentityKind::diagram_sum, alpha, beta, order,
                   lhs_hstat_series(p, order), rhs_product_series(p.sum(), Variable::q, order),
                   std::nullopt};
  r.mismatch = first_mismatch(r.lhs, r.rhs);
  return r;
}

IdentityReport verify_class_formula(int m, std::size_t order) {
  if (m <= 0) throw std::invalid_argument("verify_class_formula: m must be >= 1");
  IdentityReport r{IdentityKind::class_formula, 0, m, order, assembled_class_series(m, order),
                   rhs_product_series(m, Variable::L, order), std::nullopt};
  r.mismatch = first_mismatch(r.lhs, r.rhs);
  return r;
}

IdentityReport verify_coprime(int alpha, int beta, std::size_t order) {
  if (alpha < 1 || beta < 1 || std::gcd(alpha, beta) != 1) {
    throw std::invalid_argument("the coprime check needs positive coprime alpha and beta (got " +
                                std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
  IdentityReport r{IdentityKind::coprime, alpha, beta, order,
                   lhs_hstat_series(HStatParams(alpha, beta), order),
                   specialize_to_q(rhs_product_series(alpha + beta, Variable::L, order)),
                   std::nullopt};
  r.mismatch = first_mismatch(r.lhs, r.rhs);
  return r;
}

}  // namespace qhilb
