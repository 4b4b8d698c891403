#include "ssk/ssk.hpp"

namespace ssk {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::brute: return "brute";
    case Algorithm::dp: return "dp";
    case Algorithm::trie: return "trie";
    case Algorithm::sparse: return "sparse";
    case Algorithm::geometric: return "geometric";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  if (name == "geo") return Algorithm::geometric;
  return std::nullopt;
}

KernelVector compute_ssk(Algorithm a, const SymbolSeq& s, const SymbolSeq& t,
                         const KernelParams& params, const ComputeOptions& options) {
  switch (a) {
    case Algorithm::brute: return brute_force_ssk(s, t, params, options.oracle);
    case Algorithm::dp: return dp_ssk(s, t, params);
    case Algorithm::trie: return trie_ssk(s, t, params, options.g_max);
    case Algorithm::sparse: return sparse_ssk(s, t, params);
    case Algorithm::geometric:
      return geometric_ssk(s, t, params, GeoOptions{options.memory_budget_bytes});
  }
  return {};
}

}  // namespace ssk
