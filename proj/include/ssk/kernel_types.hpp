#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssk/hdr_scalar.hpp"
#include "ssk/symbols.hpp"

namespace ssk {

/// Subsequence length p >= 1 and decay penalty lambda in (0, 1].
class KernelParams {
 public:
  /// Throws std::invalid_argument when p < 1 or lambda is outside (0, 1].
  KernelParams(std::size_t p, double lambda);

  [[nodiscard]] std::size_t p() const noexcept { return p_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }

 private:
  std::size_t p_;
  double lambda_;
};

/// K_1(s,t) .. K_p(s,t) for one string pair.
class KernelVector {
 public:
  KernelVector() = default;
  explicit KernelVector(std::size_t p) : values_(p) {}
  explicit KernelVector(std::vector<HdrScalar> values) : values_(std::move(values)) {}

  [[nodiscard]] std::size_t p() const noexcept { return values_.size(); }
  /// K_q for 1 <= q <= p.
  [[nodiscard]] HdrScalar level(std::size_t q) const { return values_.at(q - 1); }
  HdrScalar& level(std::size_t q) { return values_.at(q - 1); }
  [[nodiscard]] std::span<const HdrScalar> values() const noexcept { return values_; }

  friend bool operator==(const KernelVector&, const KernelVector&) = default;

 private:
  std::vector<HdrScalar> values_;
};

/// One match (i, j) with s_i = t_j, 1-based, and its current scaled value.
struct MatchEntry {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  HdrScalar value;

  friend bool operator==(const MatchEntry&, const MatchEntry&) = default;
};

/// Entries ordered by (i, j) without duplicates.
using MatchList = std::vector<MatchEntry>;

/// All (i, j) with s_i = t_j, each valued at the level-1 tilde weight
/// lambda^(2-i-j), ordered by (i, j). Runs in O(|s| + |t| + |alphabet| + |L|).
MatchList build_match_list(const SymbolSeq& s, const SymbolSeq& t, double lambda);

/// Number of matches without materializing them.
std::uint64_t match_count(const SymbolSeq& s, const SymbolSeq& t);

}  // namespace ssk
