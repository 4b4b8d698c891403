#pragma once

#include <cstddef>
#include <vector>

#include "ssk/kernel_types.hpp"

namespace ssk {

/// Exact K_1..K_p by the suffix-kernel dynamic program in O(p |s| |t|) time
/// and O(p |t|) memory. Runs in double when the inputs fit native range and
/// in HdrScalar otherwise.
KernelVector dp_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params);

/// Full (|s|+1) x (|t|+1) tables at level p, rows indexed by positions of s.
/// kps(i, j) = K_p^S(s(1:i), t(1:j)); dp(i, j) = DP_p(i, j), the decayed
/// double sum of level p-1 suffix values over the prefix rectangle (all zero
/// when p = 1). Intended for small inputs.
class DpTables {
 public:
  DpTables(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), kps_(rows * cols), dp_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] HdrScalar kps(std::size_t i, std::size_t j) const { return kps_.at(i * cols_ + j); }
  [[nodiscard]] HdrScalar dp(std::size_t i, std::size_t j) const { return dp_.at(i * cols_ + j); }
  HdrScalar& kps(std::size_t i, std::size_t j) { return kps_.at(i * cols_ + j); }
  HdrScalar& dp(std::size_t i, std::size_t j) { return dp_.at(i * cols_ + j); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<HdrScalar> kps_;
  std::vector<HdrScalar> dp_;
};

DpTables dp_tables(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params);

}  // namespace ssk
