#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qhilb/series.hpp"

namespace qhilb {

/// A Young diagram, stored as its row lengths in weakly decreasing order.
///
/// Row 0 is the base row. Box (r, c) belongs to the diagram iff c < parts()[r].
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// Transpose: rows become columns.
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// "[3,1]"; the empty diagram is "[]".
std::string to_string(const Partition& y);

struct Box {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

bool contains(const Partition& y, Box s);

/// Every box of y in row-major order.
std::vector<Box> boxes(const Partition& y);

/// Weights (alpha, beta) of the subtorus; alpha + beta >= 1.
class HStatParams {
 public:
  HStatParams(int alpha, int beta);

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int sum() const { return alpha_ + beta_; }

 private:
  int alpha_;
  int beta_;
};

/// All partitions of n, each once, in lexicographically decreasing order of
/// parts: [n], [n-1,1], ..., [1,...,1]. n = 0 gives the single empty diagram.
std::vector<Partition> enumerate_partitions(int n);

struct ArmLeg {
  int arm = 0;  ///< boxes strictly after s in its row
  int leg = 0;  ///< boxes strictly above s in its column

  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

/// Throws std::out_of_range when s is not a box of y.
ArmLeg arm_leg(const Partition& y, Box s);

/// Number of boxes s with alpha*leg(s) = beta*(arm(s)+1) and (alpha+beta)
/// dividing the hook length arm(s)+leg(s)+1.
int h_stat(const Partition& y, const HStatParams& p);

/// sum over |Y| <= order of q^{h(Y)} t^{|Y|}.
TruncatedSeries lhs_hstat_series(const HStatParams& p, std::size_t order);

}  // namespace qhilb
