#pragma once

#include <cstddef>
#include <vector>

#include "ssk/kernel_types.hpp"
#include "ssk/resources.hpp"

namespace ssk {

struct GeoOptions {
  /// Per-level range tree budget; 0 = unlimited. Exceeding it throws
  /// ResourceLimitError.
  std::size_t memory_budget_bytes = default_memory_budget();
};

/// Exact K_1..K_p by one layered range-sum tree per level over the match
/// list, each entry valued lambda^(-(i+j)) times its suffix kernel value.
/// Level q+1 keeps the entries whose strict-dominance query over level q is
/// nonzero. O(p |L| log |L|) time after list construction.
KernelVector geometric_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                           const GeoOptions& options = {});

/// Surviving lists L_1..L_p (index q-1), values as stored, always in
/// HdrScalar. Lists after the first empty one are empty.
std::vector<MatchList> geometric_trace(const SymbolSeq& s, const SymbolSeq& t,
                                       const KernelParams& params,
                                       const GeoOptions& options = {});

}  // namespace ssk
