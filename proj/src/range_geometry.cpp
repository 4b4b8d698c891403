#include "ssk/range_geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssk/resources.hpp"

namespace ssk::geometry {
namespace {

bool negative_weight(double w) { return !(w >= 0.0) || !std::isfinite(w); }
bool negative_weight(const HdrScalar&) { return false; }

}  // namespace

template <class W>
std::size_t LayeredRangeSumTree<W>::estimate_bytes(std::size_t n) noexcept {
  if (n == 0) return 0;
  const std::size_t levels = static_cast<std::size_t>(std::bit_width(n - 1)) + 1;
  const std::size_t slots = n * levels;
  const std::size_t node_count = 2 * n - 1;
  return n * sizeof(Point) + 2 * n * sizeof(std::uint32_t) + node_count * sizeof(Node) +
         (slots + node_count) * (sizeof(W) + sizeof(std::uint32_t)) +
         slots * sizeof(std::uint32_t);
}

template <class W>
LayeredRangeSumTree<W>::LayeredRangeSumTree(std::vector<Point> points,
                                            const BuildOptions& options) {
  const std::size_t n = points.size();
  if (n >= kNil) throw std::length_error("too many points for a layered range tree");
  if (options.memory_budget_bytes != 0 && estimate_bytes(n) > options.memory_budget_bytes) {
    throw ResourceLimitError("layered range tree over " + std::to_string(n) + " points needs ~" +
                             std::to_string(estimate_bytes(n) >> 20) + " MiB, budget is " +
                             std::to_string(options.memory_budget_bytes >> 20) + " MiB");
  }
  if (n == 0) return;
  for (const auto& pt : points) {
    if (negative_weight(pt.weight)) throw std::invalid_argument("point weights must be >= 0");
  }

  auto by_x = [](const Point& a, const Point& b) { return a.x < b.x; };
  if (!std::is_sorted(points.begin(), points.end(), by_x)) {
    std::sort(points.begin(), points.end(), by_x);
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (points[k - 1].x == points[k].x) throw std::invalid_argument("duplicate x-key");
  }
  points_ = std::move(points);

  by_y_.resize(n);
  std::iota(by_y_.begin(), by_y_.end(), 0u);
  std::sort(by_y_.begin(), by_y_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return points_[a].y < points_[b].y; });
  std::vector<std::uint32_t> rank_of(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    if (r > 0 && points_[by_y_[r - 1]].y == points_[by_y_[r]].y) {
      throw std::invalid_argument("duplicate y-key");
    }
    rank_of[by_y_[r]] = r;
  }

  nodes_.reserve(2 * n - 1);
  std::size_t total = 0;
  build_shape(0, static_cast<std::uint32_t>(n), total);
  prefix_.assign(total, W{});
  left_count_.assign(total, 0);
  ranks_.assign(total - nodes_.size(), 0);
  // Preorder numbering puts children after their parent.
  for (std::size_t id = nodes_.size(); id-- > 0;) fill(static_cast<std::uint32_t>(id), rank_of);
}

template <class W>
std::uint32_t LayeredRangeSumTree<W>::build_shape(std::uint32_t lo, std::uint32_t hi,
                                                  std::size_t& offset) {
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({lo, hi, kNil, kNil, offset});
  offset += (hi - lo) + 1;
  if (hi - lo > 1) {
    const std::uint32_t mid = lo + (hi - lo + 1) / 2;
    const std::uint32_t l = build_shape(lo, mid, offset);
    const std::uint32_t r = build_shape(mid, hi, offset);
    nodes_[id].left = l;
    nodes_[id].right = r;
  }
  return id;
}

template <class W>
void LayeredRangeSumTree<W>::fill(std::uint32_t id, const std::vector<std::uint32_t>& rank_of) {
  const Node& v = nodes_[id];
  W* pre = prefix_.data() + v.offset;
  std::uint32_t* cnt = left_count_.data() + v.offset;
  std::uint32_t* rk = ranks_.data() + (v.offset - id);
  pre[0] = W{};
  cnt[0] = 0;
  if (v.left == kNil) {
    rk[0] = rank_of[v.lo];
    pre[1] = points_[v.lo].weight;
    cnt[1] = 0;
    return;
  }
  const std::uint32_t* lr = ranks_of(v.left);
  const std::uint32_t* rr = ranks_of(v.right);
  const std::size_t nl = size_of(nodes_[v.left]);
  const std::size_t nr = size_of(nodes_[v.right]);
  std::size_t a = 0;
  std::size_t b = 0;
  for (std::size_t k = 0; k < nl + nr; ++k) {
    const bool from_left = b == nr || (a < nl && lr[a] < rr[b]);
    const std::uint32_t r = from_left ? lr[a++] : rr[b++];
    rk[k] = r;
    pre[k + 1] = pre[k] + points_[by_y_[r]].weight;
    cnt[k + 1] = cnt[k] + (from_left ? 1u : 0u);
  }
}

template <class W>
W LayeredRangeSumTree<W>::slot_sum(std::size_t id, std::size_t a, std::size_t c) const noexcept {
  const W* pre = prefix_.data() + nodes_[id].offset;
  if (a == 0) return pre[c];
  return pre[c] - pre[a];
}

template <class W>
template <class Visit>
void LayeredRangeSumTree<W>::decompose(const RangeQuery2D& q, QueryStats* stats,
                                       Visit&& visit) const {
  if (points_.empty() || !q.valid()) return;
  QueryStats local;
  QueryStats& st = stats ? *stats : local;

  const auto xa = static_cast<std::uint32_t>(
      std::partition_point(points_.begin(), points_.end(),
                           [&](const Point& pt) { return pt.x < q.x_lo; }) -
      points_.begin());
  const auto xc = static_cast<std::uint32_t>(
      std::partition_point(points_.begin() + xa, points_.end(),
                           [&](const Point& pt) { return pt.x <= q.x_hi; }) -
      points_.begin());
  if (xa >= xc) return;
  const auto ya = static_cast<std::uint32_t>(
      std::partition_point(by_y_.begin(), by_y_.end(),
                           [&](std::uint32_t k) { return points_[k].y < q.y_lo; }) -
      by_y_.begin());
  const auto yc = static_cast<std::uint32_t>(
      std::partition_point(by_y_.begin() + ya, by_y_.end(),
                           [&](std::uint32_t k) { return points_[k].y <= q.y_hi; }) -
      by_y_.begin());
  if (ya >= yc) return;

  std::uint32_t v = 0;
  ++st.path_nodes;
  while (nodes_[v].left != kNil) {
    const std::uint32_t mid = nodes_[nodes_[v].left].hi;
    if (xc <= mid) {
      v = nodes_[v].left;
    } else if (xa >= mid) {
      v = nodes_[v].right;
    } else {
      break;
    }
    ++st.path_nodes;
  }

  const std::uint32_t* rk = ranks_of(v);
  const std::size_t sz = size_of(nodes_[v]);
  const std::size_t a = std::lower_bound(rk, rk + sz, ya) - rk;
  const std::size_t c = std::lower_bound(rk, rk + sz, yc) - rk;
  st.binary_searches += 2;
  if (a >= c) return;
  if (xa == nodes_[v].lo && xc == nodes_[v].hi) {
    ++st.canonical_nodes;
    visit(v, a, c);
    return;
  }

  const std::uint32_t* vc = left_count_.data() + nodes_[v].offset;

  // Left boundary: every right sibling hanging off the path lies inside [xa, xc).
  {
    std::uint32_t u = nodes_[v].left;
    std::size_t ua = vc[a];
    std::size_t uc = vc[c];
    while (ua < uc) {
      ++st.path_nodes;
      if (xa == nodes_[u].lo) {
        ++st.canonical_nodes;
        visit(u, ua, uc);
        break;
      }
      const std::uint32_t* uc_cnt = left_count_.data() + nodes_[u].offset;
      const std::size_t la = uc_cnt[ua];
      const std::size_t lc = uc_cnt[uc];
      const std::uint32_t l = nodes_[u].left;
      const std::uint32_t r = nodes_[u].right;
      if (xa >= nodes_[l].hi) {
        u = r;
        ua -= la;
        uc -= lc;
      } else {
        if (ua - la < uc - lc) {
          ++st.canonical_nodes;
          visit(r, ua - la, uc - lc);
        }
        u = l;
        ua = la;
        uc = lc;
      }
    }
  }
  // Right boundary, mirrored.
  {
    std::uint32_t u = nodes_[v].right;
    std::size_t ua = a - vc[a];
    std::size_t uc = c - vc[c];
    while (ua < uc) {
      ++st.path_nodes;
      if (xc == nodes_[u].hi) {
        ++st.canonical_nodes;
        visit(u, ua, uc);
        break;
      }
      const std::uint32_t* uc_cnt = left_count_.data() + nodes_[u].offset;
      const std::size_t la = uc_cnt[ua];
      const std::size_t lc = uc_cnt[uc];
      const std::uint32_t l = nodes_[u].left;
      const std::uint32_t r = nodes_[u].right;
      if (xc <= nodes_[l].hi) {
        u = l;
        ua = la;
        uc = lc;
      } else {
        if (la < lc) {
          ++st.canonical_nodes;
          visit(l, la, lc);
        }
        u = r;
        ua -= la;
        uc -= lc;
      }
    }
  }
}

template <class W>
W LayeredRangeSumTree<W>::range_sum(const RangeQuery2D& q, QueryStats* stats) const {
  W sum{};
  decompose(q, stats,
            [&](std::uint32_t node, std::size_t a, std::size_t c) { sum += slot_sum(node, a, c); });
  return sum;
}

template <class W>
auto LayeredRangeSumTree<W>::range_report(const RangeQuery2D& q, QueryStats* stats) const
    -> std::vector<Point> {
  std::vector<Point> out;
  decompose(q, stats, [&](std::uint32_t node, std::size_t a, std::size_t c) {
    const std::uint32_t* rk = ranks_of(node);
    for (std::size_t k = a; k < c; ++k) out.push_back(points_[by_y_[rk[k]]]);
  });
  return out;
}

template <class W>
std::size_t LayeredRangeSumTree<W>::child(std::size_t node, Child side) const {
  const Node& v = nodes_.at(node);
  if (v.left == kNil) throw std::out_of_range("leaf has no children");
  return side == Child::left ? v.left : v.right;
}

template <class W>
std::pair<std::size_t, std::size_t> LayeredRangeSumTree<W>::leaf_range(std::size_t node) const {
  const Node& v = nodes_.at(node);
  return {v.lo, v.hi};
}

template <class W>
std::size_t LayeredRangeSumTree<W>::slot_count(std::size_t node) const {
  return size_of(nodes_.at(node));
}

template <class W>
auto LayeredRangeSumTree<W>::slot_point(std::size_t node, std::size_t slot) const
    -> const Point& {
  if (slot >= slot_count(node)) throw std::out_of_range("slot out of range");
  return points_[by_y_[ranks_of(node)[slot]]];
}

template <class W>
W LayeredRangeSumTree<W>::prefix(std::size_t node, std::size_t k) const {
  if (k > slot_count(node)) throw std::out_of_range("prefix index out of range");
  return prefix_[nodes_[node].offset + k];
}

template <class W>
std::optional<std::size_t> LayeredRangeSumTree<W>::small_pointer(std::size_t node,
                                                                 std::size_t slot,
                                                                 Child side) const {
  if (slot >= slot_count(node)) throw std::out_of_range("slot out of range");
  const std::size_t target = child(node, side);
  const std::uint32_t before_left = left_count_[nodes_[node].offset + slot];
  const std::size_t idx = side == Child::left ? before_left : slot - before_left;
  if (idx >= slot_count(target)) return std::nullopt;
  return idx;
}

template <class W>
std::optional<std::size_t> LayeredRangeSumTree<W>::large_pointer(std::size_t node,
                                                                 std::size_t slot,
                                                                 Child side) const {
  if (slot >= slot_count(node)) throw std::out_of_range("slot out of range");
  if (is_leaf(node)) throw std::out_of_range("leaf has no children");
  const std::uint32_t through_left = left_count_[nodes_[node].offset + slot + 1];
  const std::size_t count = side == Child::left ? through_left : slot + 1 - through_left;
  if (count == 0) return std::nullopt;
  return count - 1;
}

template class LayeredRangeSumTree<double>;
template class LayeredRangeSumTree<HdrScalar>;

}  // namespace ssk::geometry
