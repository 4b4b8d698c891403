#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ssk/hdr_scalar.hpp"

namespace ssk::detail {

// Uniform conversions so the kernels can run on double or HdrScalar.
inline HdrScalar to_hdr(double v) { return HdrScalar(v); }
inline HdrScalar to_hdr(HdrScalar v) noexcept { return v; }

template <class T>
T from_hdr(HdrScalar v);
template <>
inline double from_hdr<double>(HdrScalar v) { return v.to_double(); }
template <>
inline HdrScalar from_hdr<HdrScalar>(HdrScalar v) { return v; }

inline bool is_positive(double v) noexcept { return v > 0.0; }
inline bool is_positive(HdrScalar v) noexcept { return !v.is_zero(); }

inline double clamp_nonnegative(double v) noexcept { return v > 0.0 ? v : 0.0; }
inline HdrScalar clamp_nonnegative(HdrScalar v) noexcept { return v; }

/// True when every intermediate of the scaled kernel recursions stays well
/// inside double range: the position-dependent weights reach
/// lambda^{+-(m+n)} and the subsequence counts stay below (max(m,n)+1)^{2p}.
inline bool fits_native(std::size_t m, std::size_t n, std::size_t p, double lambda) {
  const double weight_log = static_cast<double>(m + n) * std::abs(std::log(lambda));
  const double count_log =
      2.0 * static_cast<double>(p) * std::log(static_cast<double>(std::max(m, n)) + 1.0);
  return weight_log + count_log < 600.0;
}

/// lambda^k for k in [-max_neg, max_pos].
template <class T>
class LambdaPowers {
 public:
  LambdaPowers(double lambda, std::size_t max_neg, std::size_t max_pos)
      : offset_(max_neg), table_(max_neg + max_pos + 1) {
    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
      const auto k = static_cast<std::int64_t>(idx) - static_cast<std::int64_t>(offset_);
      table_[idx] = from_hdr<T>(HdrScalar::from_lambda_power(lambda, k));
    }
  }

  [[nodiscard]] T operator()(std::int64_t k) const {
    return table_[static_cast<std::size_t>(k + static_cast<std::int64_t>(offset_))];
  }

 private:
  std::size_t offset_;
  std::vector<T> table_;
};

}  // namespace ssk::detail
