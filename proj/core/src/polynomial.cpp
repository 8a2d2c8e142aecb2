#include "qhilb/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace qhilb {

IntPolynomial::IntPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(Integer coeff, std::size_t degree) {
  IntPolynomial p;
  if (coeff == 0) return p;
  p.coeffs_.assign(degree + 1, Integer(0));
  p.coeffs_[degree] = std::move(coeff);
  return p;
}

bool IntPolynomial::is_monomial() const { return term_count() == 1; }

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

std::size_t IntPolynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer IntPolynomial::evaluate(const Integer& z) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result(1);
  IntPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  IntPolynomial p;
  p.coeffs_.assign(k, Integer(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial p;
  p.add_product(a, b);
  return p;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void IntPolynomial::add_product(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      // fused multiply-add avoids a temporary mpz per term
      mpz_addmul(coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

std::string power_of(std::string_view symbol, std::size_t k) {
  std::string s(symbol);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_string(const IntPolynomial& p, std::string_view symbol) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Integer& c = cs[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power_of(symbol, k);
    } else {
      out += mag.get_str() + "*" + power_of(symbol, k);
    }
  }
  return out;
}

}  // namespace qhilb
