#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "ssk/dp_kernel.hpp"
#include "ssk/geo_kernel.hpp"
#include "ssk/hdr_scalar.hpp"
#include "ssk/kernel_types.hpp"
#include "ssk/oracle.hpp"
#include "ssk/resources.hpp"
#include "ssk/sparse_kernel.hpp"
#include "ssk/symbols.hpp"
#include "ssk/trie_kernel.hpp"

namespace ssk {

enum class Algorithm { brute, dp, trie, sparse, geometric };

inline constexpr std::array<Algorithm, 5> kAllAlgorithms = {
    Algorithm::brute, Algorithm::dp, Algorithm::trie, Algorithm::sparse, Algorithm::geometric};

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// Exact for every algorithm except trie, which is exact only when g_max is
/// large enough.
inline bool is_exact(Algorithm a) noexcept { return a != Algorithm::trie; }

struct ComputeOptions {
  std::size_t g_max = 10;
  std::size_t memory_budget_bytes = default_memory_budget();
  OracleLimits oracle{};
};

KernelVector compute_ssk(Algorithm a, const SymbolSeq& s, const SymbolSeq& t,
                         const KernelParams& params, const ComputeOptions& options = {});

}  // namespace ssk
