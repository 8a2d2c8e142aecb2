#include "qhilb/series.hpp"

#include <stdexcept>
#include <utility>

namespace qhilb {

std::string_view symbol(Variable v) { return v == Variable::q ? "q" : "L"; }

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.variable() != b.variable()) {
    throw std::invalid_argument(std::string(op) + ": series over different variables (" +
                                std::string(symbol(a.variable())) + " vs " +
                                std::string(symbol(b.variable())) + ")");
  }
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                                ")");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(Variable var, std::size_t order)
    : var_(var), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(Variable var, std::size_t order,
                                 std::vector<IntPolynomial> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(Variable var, std::size_t order) {
  TruncatedSeries s(var, order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("truncated: cannot raise order " + std::to_string(order()) +
                                " to " + std::to_string(new_order));
  }
  return TruncatedSeries(var_, new_order,
                         std::vector<IntPolynomial>(coeffs_.begin(),
                                                    coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::renamed(Variable var) const {
  TruncatedSeries s = *this;
  s.var_ = var;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_compatible(*this, rhs, "series add");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_compatible(*this, rhs, "series sub");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b, "series_mul");
  const std::size_t order = a.order();
  TruncatedSeries out(a.variable(), order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const IntPolynomial& c0 = a[0];
  if (!(c0 == IntPolynomial(1) || c0 == IntPolynomial(-1))) {
    throw std::domain_error("series_inverse: constant term " + to_string(c0, symbol(a.variable())) +
                            " is not a unit");
  }
  // b_n = -c0 * sum_{k=1..n} a_k b_{n-k}, using c0^{-1} = c0.
  const std::size_t order = a.order();
  std::vector<IntPolynomial> b(order + 1);
  b[0] = c0;
  for (std::size_t n = 1; n <= order; ++n) {
    IntPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc.add_product(a[k], b[n - k]);
    }
    b[n] = c0 == IntPolynomial(1) ? -acc : acc;
  }
  return TruncatedSeries(a.variable(), order, std::move(b));
}

TruncatedSeries series_pow(const TruncatedSeries& a, long long e) {
  TruncatedSeries base = e < 0 ? series_inverse(a) : a;
  unsigned long long k = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  TruncatedSeries result = TruncatedSeries::one(a.variable(), a.order());
  while (k != 0) {
    if (k & 1ULL) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

TruncatedSeries expand_product(std::span<const ProductFactor> factors, Variable var,
                               std::size_t order) {
  TruncatedSeries result = TruncatedSeries::one(var, order);
  for (const auto& f : factors) {
    if (f.t_exponent <= 0) {
      throw std::invalid_argument("expand_product: t-exponent must be >= 1, got " +
                                  std::to_string(f.t_exponent));
    }
    const auto e = static_cast<std::size_t>(f.t_exponent);
    if (e > order || f.multiplicity == 0 || f.coefficient.is_zero()) continue;
    std::vector<IntPolynomial> cs(order + 1);
    cs[0] = 1;
    cs[e] = -f.coefficient;
    result = result * series_pow(TruncatedSeries(var, order, std::move(cs)), f.multiplicity);
  }
  return result;
}

TruncatedSeries substitute_t_scale(const TruncatedSeries& a, std::size_t s) {
  std::vector<IntPolynomial> cs(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t n = 0; n < cs.size(); ++n) cs[n] = cs[n].shifted(s * n);
  return TruncatedSeries(a.variable(), a.order(), std::move(cs));
}

TruncatedSeries substitute_t_power(const TruncatedSeries& a, std::size_t s,
                                   std::size_t out_order) {
  if (s == 0) throw std::invalid_argument("substitute_t_power: exponent must be >= 1");
  if (out_order > s * (a.order() + 1) - 1) {
    throw std::invalid_argument("substitute_t_power: output order " + std::to_string(out_order) +
                                " exceeds known precision " +
                                std::to_string(s * (a.order() + 1) - 1));
  }
  std::vector<IntPolynomial> cs(out_order + 1);
  for (std::size_t n = 0; n * s <= out_order; ++n) cs[n * s] = a[n];
  return TruncatedSeries(a.variable(), out_order, std::move(cs));
}

std::optional<Mismatch> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  require_compatible(lhs, rhs, "compare");
  for (std::size_t n = 0; n <= lhs.order(); ++n) {
    if (!(lhs[n] == rhs[n])) return Mismatch{n, lhs[n], rhs[n]};
  }
  return std::nullopt;
}

namespace {

std::string t_power(std::size_t n) { return n == 1 ? "t" : "t^" + std::to_string(n); }

}  // namespace

std::string to_string(const TruncatedSeries& s) {
  const std::string_view sym = symbol(s.variable());
  std::string out;
  bool first = true;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    const IntPolynomial& c = s[n];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_monomial()) {
      const auto k = static_cast<std::size_t>(c.degree());
      negative = c.coefficients()[k] < 0;
      IntPolynomial mag = negative ? -c : c;
      if (n == 0) {
        body = to_string(mag, sym);
      } else if (mag == IntPolynomial(1)) {
        body = t_power(n);
      } else {
        body = to_string(mag, sym) + "*" + t_power(n);
      }
    } else {
      body = n == 0 ? to_string(c, sym) : "(" + to_string(c, sym) + ")*" + t_power(n);
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace qhilb
