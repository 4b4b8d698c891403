#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssk/kernel_types.hpp"

namespace ssk {

/// Gap-capped kernel by depth-first expansion of the implicit trie of
/// co-occurring subsequences. Occurrences with more than g_max gaps in either
/// string are dropped, so the result is exact for level q once
/// g_max >= max(|s|, |t|) - q and a lower bound otherwise.
KernelVector trie_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                      std::size_t g_max);

/// Alive last-match indices of u in each string, bucketed by gap count.
/// Repeated (index, gap) occurrences appear once per occurrence.
struct AliveLists {
  std::vector<std::vector<std::uint32_t>> in_s;  // [g] -> ascending 1-based indices
  std::vector<std::vector<std::uint32_t>> in_t;
};

/// Throws std::invalid_argument for an empty u.
AliveLists alive_lists_snapshot(const SymbolSeq& s, const SymbolSeq& t, std::span<const Symbol> u,
                                std::size_t g_max);

}  // namespace ssk
