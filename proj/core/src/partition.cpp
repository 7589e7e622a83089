#include "ncharm/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncharm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0);
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("negative part in partition");
  if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
    std::sort(parts_.rbegin(), parts_.rend());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Integer Partition::z() const {
  Integer z(1);
  int run = 0;
  for (size_t j = 0; j < parts_.size(); ++j) {
    ++run;
    z *= parts_[j];
    if (j + 1 == parts_.size() || parts_[j + 1] != parts_[j]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;  // generated largest-first, matching operator<
}

Partition hook_partition(int first, int ones) {
  std::vector<int> parts;
  if (first > 0) parts.push_back(first);
  parts.insert(parts.end(), ones, 1);
  return Partition(parts);
}

}  // namespace ncharm
