#include "qhilb/ydiag.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qhilb {

namespace {

// Column heights of y, i.e. parts of the conjugate, without validation.
std::vector<int> column_heights(const Partition& y) {
  std::vector<int> cols(y.empty() ? 0 : static_cast<std::size_t>(y.parts().front()), 0);
  for (int len : y.parts()) {
    for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return cols;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const { return Partition(column_heights(*this)); }

std::string to_string(const Partition& y) {
  std::string out = "[";
  for (std::size_t k = 0; k < y.length(); ++k) {
    if (k != 0) out += ",";
    out += std::to_string(y.parts()[k]);
  }
  return out + "]";
}

bool contains(const Partition& y, Box s) {
  return s.row < y.length() && s.col < static_cast<std::size_t>(y.parts()[s.row]);
}

std::vector<Box> boxes(const Partition& y) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(y.weight()));
  for (std::size_t r = 0; r < y.length(); ++r) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(y.parts()[r]); ++c) out.push_back({r, c});
  }
  return out;
}

HStatParams::HStatParams(int alpha, int beta) : alpha_(alpha), beta_(beta) {
  if (alpha < 0 || beta < 0 || alpha + beta < 1) {
    throw std::invalid_argument("need alpha, beta >= 0 and alpha + beta >= 1 (got " +
                                std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    extend(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, out);
  return out;
}

ArmLeg arm_leg(const Partition& y, Box s) {
  if (!contains(y, s)) {
    throw std::out_of_range("box (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                            ") is not in " + to_string(y));
  }
  int leg = 0;
  for (std::size_t r = s.row + 1; r < y.length(); ++r) {
    if (static_cast<std::size_t>(y.parts()[r]) <= s.col) break;
    ++leg;
  }
  return {y.parts()[s.row] - static_cast<int>(s.col) - 1, leg};
}

int h_stat(const Partition& y, const HStatParams& p) {
  const std::vector<int> cols = column_heights(y);
  const int alpha = p.alpha();
  const int beta = p.beta();
  const int modulus = p.sum();
  int count = 0;
  for (std::size_t r = 0; r < y.length(); ++r) {
    const int len = y.parts()[r];
    for (int c = 0; c < len; ++c) {
      const int arm = len - c - 1;
      const int leg = cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      if (alpha * leg == beta * (arm + 1) && (arm + leg + 1) % modulus == 0) ++count;
    }
  }
  return count;
}

TruncatedSeries lhs_hstat_series(const HStatParams& p, std::size_t order) {
  std::vector<IntPolynomial> coeffs(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<Integer> histogram;
    for (const Partition& y : enumerate_partitions(static_cast<int>(n))) {
      const auto h = static_cast<std::size_t>(h_stat(y, p));
      if (histogram.size() <= h) histogram.resize(h + 1);
      ++histogram[h];
    }
    coeffs[n] = IntPolynomial(std::move(histogram));
  }
  return TruncatedSeries(Variable::q, order, std::move(coeffs));
}

}  // namespace qhilb
