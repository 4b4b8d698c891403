#include "ssk/kernel_types.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssk {

KernelParams::KernelParams(std::size_t p, double lambda) : p_(p), lambda_(lambda) {
  if (p_ < 1) throw std::invalid_argument("subsequence length p must be >= 1");
  if (!(lambda_ > 0.0 && lambda_ <= 1.0)) {
    throw std::invalid_argument("decay penalty lambda must lie in (0, 1]");
  }
}

namespace {

std::size_t shared_alphabet(const SymbolSeq& s, const SymbolSeq& t) {
  return std::max(s.alphabet_size(), t.alphabet_size());
}

}  // namespace

MatchList build_match_list(const SymbolSeq& s, const SymbolSeq& t, double lambda) {
  const OccurrenceIndex in_t = build_occurrence_index(t, shared_alphabet(s, t));
  const std::size_t max_shift = s.size() + t.size();
  // lambda^(2-i-j) for i + j in [2, |s|+|t|]
  std::vector<HdrScalar> weight(max_shift + 1);
  for (std::size_t k = 2; k <= max_shift; ++k) {
    weight[k] = HdrScalar::from_lambda_power(lambda, 2 - static_cast<std::int64_t>(k));
  }

  MatchList list;
  list.reserve(static_cast<std::size_t>(match_count(s, t)));
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const auto i = static_cast<std::uint32_t>(pos + 1);
    for (std::uint32_t j : in_t[s[pos]]) list.push_back({i, j, weight[i + j]});
  }
  return list;
}

std::uint64_t match_count(const SymbolSeq& s, const SymbolSeq& t) {
  std::vector<std::uint64_t> count(shared_alphabet(s, t));
  for (Symbol c : t.symbols()) ++count[c];
  std::uint64_t total = 0;
  for (Symbol c : s.symbols()) total += count[c];
  return total;
}

}  // namespace ssk
