#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ssk/hdr_scalar.hpp"

namespace ssk {

/// Point-update / prefix-sum tree over keys 1..n in O(log n).
///
/// The tree is implicit: with capacity 2^h, node j covers keys
/// (j - lowbit(j), j], the root is keyed 2^h, a node's children sit half its
/// span to the left and right, and odd keys are leaves. A prefix sum walks
/// from j towards the root through the ancestors keyed below j; an update
/// walks through the ancestors keyed above j.
template <class T>
class RangeSumTree {
 public:
  explicit RangeSumTree(std::size_t n) : capacity_(std::bit_ceil(std::max<std::size_t>(n, 1))),
                                         nodes_(capacity_ + 1, T{}) {}

  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
  [[nodiscard]] int height() const noexcept { return std::countr_zero(capacity_); }

  /// Adds v at key j. Throws std::out_of_range unless 1 <= j <= capacity.
  void update(std::size_t j, T v) {
    if (j < 1 || j > capacity_) throw std::out_of_range("range-sum tree key out of range");
    for (; j <= capacity_; j += j & (~j + 1)) nodes_[j] += v;
  }

  /// Sum of values at keys 1..j; zero for j = 0. Keys above capacity clamp.
  [[nodiscard]] T prefix_sum(std::size_t j) const noexcept {
    T sum{};
    for (j = std::min(j, capacity_); j > 0; j &= j - 1) sum += nodes_[j];
    return sum;
  }

  /// Stored partial sum of node j, i.e. the sum over (j - lowbit(j), j].
  [[nodiscard]] T node(std::size_t j) const { return nodes_.at(j); }

  void clear() noexcept { std::fill(nodes_.begin(), nodes_.end(), T{}); }

 private:
  std::size_t capacity_;
  std::vector<T> nodes_;
};

}  // namespace ssk
