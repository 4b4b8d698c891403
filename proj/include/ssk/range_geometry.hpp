#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ssk/hdr_scalar.hpp"

namespace ssk::geometry {

/// Lexicographic pair (primary | tiebreak). Queries use the infinite
/// tiebreak sentinels so that a bound on the primary coordinate alone covers
/// every tiebreak value.
struct CompositeKey {
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

  std::int64_t primary = 0;
  std::int64_t tiebreak = 0;

  static constexpr CompositeKey lowest(std::int64_t primary) { return {primary, kNegInf}; }
  static constexpr CompositeKey highest(std::int64_t primary) { return {primary, kPosInf}; }

  friend constexpr auto operator<=>(const CompositeKey&, const CompositeKey&) = default;
};

template <class W>
struct WeightedPoint {
  CompositeKey x;
  CompositeKey y;
  W weight{};

  /// Point of the plane (i, j) keyed (i|j) on x and (j|i) on y.
  static WeightedPoint at(std::int64_t i, std::int64_t j, W weight) {
    return {{i, j}, {j, i}, weight};
  }
};

/// Closed rectangle [x_lo : x_hi] x [y_lo : y_hi] in composite space.
struct RangeQuery2D {
  CompositeKey x_lo;
  CompositeKey x_hi;
  CompositeKey y_lo;
  CompositeKey y_hi;

  /// [(x1|-inf) : (x2|+inf)] x [(y1|-inf) : (y2|+inf)]
  static constexpr RangeQuery2D grid(std::int64_t x1, std::int64_t x2, std::int64_t y1,
                                     std::int64_t y2) {
    return {CompositeKey::lowest(x1), CompositeKey::highest(x2), CompositeKey::lowest(y1),
            CompositeKey::highest(y2)};
  }

  [[nodiscard]] constexpr bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
};

/// Work done by one query.
struct QueryStats {
  std::size_t path_nodes = 0;       // root-to-split descent plus both boundary paths
  std::size_t canonical_nodes = 0;  // nodes whose associated range was summed or reported
  std::size_t binary_searches = 0;  // searches in associated arrays (always 2 at the split)
};

struct BuildOptions {
  /// Refuse to build when the estimated footprint exceeds this; 0 = no limit.
  std::size_t memory_budget_bytes = 0;
};

enum class Child { left, right };

/// Static 2-D layered range tree whose associated arrays hold prefix sums.
///
/// The main tree is perfectly balanced over the points sorted by x-key, with
/// points at the leaves. Every node keeps its canonical subset sorted by
/// y-key, the prefix sums of their weights behind a leading zero slot, and
/// for each slot the number of earlier slots that came from the left child.
/// That count is the fractional-cascading link: it yields both the small
/// pointer (least child key >= slot key) and the large pointer (greatest
/// child key <= slot key) into either child in O(1). A range sum therefore
/// costs two binary searches at the split node and O(1) per node below it.
///
/// Weights must be nonnegative. Storage and build time are O(n log n).
template <class W>
class LayeredRangeSumTree {
 public:
  using Point = WeightedPoint<W>;

  LayeredRangeSumTree() = default;
  /// Throws std::invalid_argument on duplicate x- or y-keys and
  /// ResourceLimitError when the budget would be exceeded.
  explicit LayeredRangeSumTree(std::vector<Point> points, const BuildOptions& options = {});

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }

  /// Sum of weights inside q; zero for an empty intersection.
  [[nodiscard]] W range_sum(const RangeQuery2D& q, QueryStats* stats = nullptr) const;
  /// Points inside q, grouped by canonical node.
  [[nodiscard]] std::vector<Point> range_report(const RangeQuery2D& q,
                                                QueryStats* stats = nullptr) const;

  /// Upper bound on the bytes a tree over n points occupies.
  static std::size_t estimate_bytes(std::size_t n) noexcept;

  // Structure inspection, for invariant checks. Nodes are numbered in
  // preorder with the root at 0.
  [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
  [[nodiscard]] bool is_leaf(std::size_t node) const { return nodes_.at(node).left == kNil; }
  [[nodiscard]] std::size_t child(std::size_t node, Child side) const;
  /// Leaves covered by the node, as a half-open range of x-order positions.
  [[nodiscard]] std::pair<std::size_t, std::size_t> leaf_range(std::size_t node) const;
  [[nodiscard]] std::size_t slot_count(std::size_t node) const;
  [[nodiscard]] const Point& slot_point(std::size_t node, std::size_t slot) const;
  /// Sum of the first k slot weights, 0 <= k <= slot_count.
  [[nodiscard]] W prefix(std::size_t node, std::size_t k) const;
  [[nodiscard]] std::optional<std::size_t> small_pointer(std::size_t node, std::size_t slot,
                                                         Child side) const;
  [[nodiscard]] std::optional<std::size_t> large_pointer(std::size_t node, std::size_t slot,
                                                         Child side) const;
  /// Points in x order.
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }

 private:
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint32_t lo;
    std::uint32_t hi;
    std::uint32_t left;
    std::uint32_t right;
    std::size_t offset;  // into prefix_ / left_count_; ranks_ start at offset - node id
  };

  std::uint32_t build_shape(std::uint32_t lo, std::uint32_t hi, std::size_t& offset);
  void fill(std::uint32_t id, const std::vector<std::uint32_t>& rank_of);

  [[nodiscard]] std::size_t size_of(const Node& v) const noexcept { return v.hi - v.lo; }
  [[nodiscard]] const std::uint32_t* ranks_of(std::size_t id) const noexcept {
    return ranks_.data() + (nodes_[id].offset - id);
  }
  [[nodiscard]] W slot_sum(std::size_t id, std::size_t a, std::size_t c) const noexcept;

  // Calls visit(node, a, c) for every canonical node of q with its slot
  // range [a, c) in y.
  template <class Visit>
  void decompose(const RangeQuery2D& q, QueryStats* stats, Visit&& visit) const;

  std::vector<Point> points_;         // sorted by x
  std::vector<std::uint32_t> by_y_;   // y rank -> x position
  std::vector<Node> nodes_;
  std::vector<W> prefix_;
  std::vector<std::uint32_t> left_count_;
  std::vector<std::uint32_t> ranks_;
};

using Lrst = LayeredRangeSumTree<HdrScalar>;

extern template class LayeredRangeSumTree<double>;
extern template class LayeredRangeSumTree<HdrScalar>;

}  // namespace ssk::geometry
