#include "ssk/geo_kernel.hpp"

#include <algorithm>
#include <string>

#include "ssk/detail/scalar.hpp"
#include "ssk/range_geometry.hpp"

namespace ssk {
namespace {

using geometry::LayeredRangeSumTree;
using geometry::RangeQuery2D;
using geometry::WeightedPoint;

template <class T>
KernelVector geo_run(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                     const GeoOptions& options, std::vector<MatchList>* trace) {
  const std::size_t p = params.p();
  const std::size_t span = s.size() + t.size();
  const detail::LambdaPowers<T> pow(params.lambda(), span, span);

  const std::uint64_t matches = match_count(s, t);
  if (p >= 2 && options.memory_budget_bytes != 0 &&
      LayeredRangeSumTree<T>::estimate_bytes(matches) > options.memory_budget_bytes) {
    throw ResourceLimitError("range tree over " + std::to_string(matches) +
                             " matches exceeds the memory budget");
  }

  std::vector<WeightedPoint<T>> list;
  {
    const OccurrenceIndex in_t =
        build_occurrence_index(t, std::max(s.alphabet_size(), t.alphabet_size()));
    list.reserve(static_cast<std::size_t>(matches));
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      const auto i = static_cast<std::int64_t>(pos + 1);
      for (std::uint32_t j : in_t[s[pos]]) list.push_back(WeightedPoint<T>::at(i, j, pow(2 - i - j)));
    }
  }

  KernelVector out(p);
  auto fold = [&](std::size_t q) {
    T k{};
    for (const auto& e : list) k += e.weight * pow(e.x.primary + e.y.primary);
    out.level(q) = detail::to_hdr(k);
    if (trace) {
      MatchList copy;
      copy.reserve(list.size());
      for (const auto& e : list) {
        copy.push_back({static_cast<std::uint32_t>(e.x.primary),
                        static_cast<std::uint32_t>(e.y.primary), detail::to_hdr(e.weight)});
      }
      trace->push_back(std::move(copy));
    }
  };
  fold(1);

  const geometry::BuildOptions build{options.memory_budget_bytes};
  std::vector<WeightedPoint<T>> next;
  for (std::size_t q = 2; q <= p && !list.empty(); ++q) {
    const LayeredRangeSumTree<T> tree(list, build);
    next.clear();
    for (const auto& e : list) {
      const T sum = tree.range_sum(RangeQuery2D::grid(0, e.x.primary - 1, 0, e.y.primary - 1));
      if (detail::is_positive(sum)) next.push_back(WeightedPoint<T>::at(e.x.primary, e.y.primary, sum));
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

KernelVector geometric_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                           const GeoOptions& options) {
  if (detail::fits_native(s.size(), t.size(), params.p(), params.lambda())) {
    return geo_run<double>(s, t, params, options, nullptr);
  }
  return geo_run<HdrScalar>(s, t, params, options, nullptr);
}

std::vector<MatchList> geometric_trace(const SymbolSeq& s, const SymbolSeq& t,
                                       const KernelParams& params, const GeoOptions& options) {
  std::vector<MatchList> trace;
  geo_run<HdrScalar>(s, t, params, options, &trace);
  return trace;
}

}  // namespace ssk
