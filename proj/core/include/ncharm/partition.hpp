#pragma once

#include <string>
#include <vector>

#include "ncharm/rational.hpp"

namespace ncharm {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is valid and has size 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }      // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_.at(i); }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to i.
  int multiplicity(int i) const;

  /// z_lambda = prod_i i^{n_i} n_i!, the centralizer order of the class.
  Integer z() const;

  /// Ordered by (size, then reverse-lexicographic): within one size, (n)
  /// comes first and (1^n) last. Deterministic serialization order.
  bool operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return parts_ > o.parts_;
  }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  std::string str() const;  // "[2,1]", "[]" for empty

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in the canonical order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// (first, 1^ones) with zero parts dropped: the shape h_{(n-d,1^d)} lives on.
Partition hook_partition(int first, int ones);

}  // namespace ncharm
