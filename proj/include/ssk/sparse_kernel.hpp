#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssk/kernel_types.hpp"

namespace ssk {

/// Match list of one level, values scaled by the dummy gap weight
/// lambda^(m-i+n-j), kept in (i, j) order so each row i of s is contiguous.
class LevelMatchLists {
 public:
  LevelMatchLists() = default;
  explicit LevelMatchLists(MatchList entries) : entries_(std::move(entries)) {}

  [[nodiscard]] const MatchList& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  /// Entries of row i (1-based), j ascending.
  [[nodiscard]] std::span<const MatchEntry> row(std::uint32_t i) const;

 private:
  MatchList entries_;
};

/// Exact K_1..K_p by sparse dynamic programming over match lists and a
/// range-sum tree on t positions: O(p |L| log |t|) after list construction.
KernelVector sparse_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params);

/// The lists L_1..L_p built along the way (index q-1 holds L_q), always in
/// HdrScalar.
std::vector<LevelMatchLists> sparse_trace(const SymbolSeq& s, const SymbolSeq& t,
                                          const KernelParams& params);

}  // namespace ssk
