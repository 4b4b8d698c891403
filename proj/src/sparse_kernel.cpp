#include "ssk/sparse_kernel.hpp"

#include <algorithm>

#include "ssk/detail/scalar.hpp"
#include "ssk/range_sum_tree.hpp"

namespace ssk {
namespace {

template <class T>
struct Entry {
  std::uint32_t i;
  std::uint32_t j;
  T v;
};

template <class T>
KernelVector sparse_run(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                        std::vector<LevelMatchLists>* trace) {
  const std::size_t m = s.size();
  const std::size_t n = t.size();
  const std::size_t p = params.p();
  const auto mn = static_cast<std::int64_t>(m + n);
  const detail::LambdaPowers<T> pow(params.lambda(), m + n, m + n);

  // L_1: bar value lambda^(m-i+n-j) * lambda^2 per match.
  std::vector<Entry<T>> list;
  {
    const OccurrenceIndex in_t =
        build_occurrence_index(t, std::max(s.alphabet_size(), t.alphabet_size()));
    list.reserve(static_cast<std::size_t>(match_count(s, t)));
    for (std::size_t pos = 0; pos < m; ++pos) {
      const auto i = static_cast<std::uint32_t>(pos + 1);
      for (std::uint32_t j : in_t[s[pos]]) list.push_back({i, j, pow(mn - i - j + 2)});
    }
  }

  KernelVector out(p);
  auto fold = [&](std::size_t q) {
    T k{};
    for (const auto& e : list) k += e.v * pow(static_cast<std::int64_t>(e.i + e.j) - mn);
    out.level(q) = detail::to_hdr(k);
    if (trace) {
      MatchList copy;
      copy.reserve(list.size());
      for (const auto& e : list) copy.push_back({e.i, e.j, detail::to_hdr(e.v)});
      trace->emplace_back(std::move(copy));
    }
  };
  fold(1);

  RangeSumTree<T> tree(n);
  std::vector<Entry<T>> next;
  for (std::size_t q = 2; q <= p && !list.empty(); ++q) {
    tree.clear();
    next.clear();
    for (std::size_t row_begin = 0; row_begin < list.size();) {
      std::size_t row_end = row_begin;
      while (row_end < list.size() && list[row_end].i == list[row_begin].i) ++row_end;
      // Query the whole row before inserting it: only rows i' < i are in the tree.
      for (std::size_t k = row_begin; k < row_end; ++k) {
        const T sum = tree.prefix_sum(list[k].j - 1);
        if (detail::is_positive(sum)) next.push_back({list[k].i, list[k].j, sum});
      }
      for (std::size_t k = row_begin; k < row_end; ++k) tree.update(list[k].j, list[k].v);
      row_begin = row_end;
    }
    list.swap(next);
    fold(q);
  }
  if (trace) {
    while (trace->size() < p) trace->emplace_back();
  }
  return out;
}

}  // namespace

std::span<const MatchEntry> LevelMatchLists::row(std::uint32_t i) const {
  auto lo = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const MatchEntry& e, std::uint32_t key) { return e.i < key; });
  auto hi = std::upper_bound(lo, entries_.end(), i,
                             [](std::uint32_t key, const MatchEntry& e) { return key < e.i; });
  return {lo, hi};
}

KernelVector sparse_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params) {
  if (detail::fits_native(s.size(), t.size(), params.p(), params.lambda())) {
    return sparse_run<double>(s, t, params, nullptr);
  }
  return sparse_run<HdrScalar>(s, t, params, nullptr);
}

std::vector<LevelMatchLists> sparse_trace(const SymbolSeq& s, const SymbolSeq& t,
                                          const KernelParams& params) {
  std::vector<LevelMatchLists> trace;
  sparse_run<HdrScalar>(s, t, params, &trace);
  return trace;
}

}  // namespace ssk
