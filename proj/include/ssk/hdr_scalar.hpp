#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace ssk {

/// Nonnegative scalar with a double mantissa and a 64-bit binary exponent.
///
/// The represented value is mantissa * 2^exponent with mantissa in [0.5, 1),
/// or exactly zero (mantissa 0, exponent 0). Kernel values on long strings
/// carry factors such as lambda^-(i+j) that leave the double range long before
/// the exponent field here runs out, so every kernel algorithm accumulates in
/// this type unless the inputs are known to stay in native range.
///
/// Arithmetic is exact up to one rounding of the mantissa per operation.
/// Subtraction assumes a >= b and clamps a rounding-negative result to zero.
class HdrScalar {
 public:
  constexpr HdrScalar() = default;

  /// Throws std::invalid_argument for negative or non-finite input.
  explicit HdrScalar(double value);

  /// Normalizes an arbitrary nonnegative mantissa.
  static HdrScalar from_parts(double mantissa, std::int64_t exponent);

  /// lambda^k for 0 < lambda <= 1 and any k with |k| up to 2^31.
  static HdrScalar from_lambda_power(double lambda, std::int64_t k);

  static constexpr HdrScalar one() noexcept { return HdrScalar(0.5, 1, Raw{}); }

  [[nodiscard]] constexpr double mantissa() const noexcept { return m_; }
  [[nodiscard]] constexpr std::int64_t exponent() const noexcept { return e_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return m_ == 0.0; }

  /// Natural log; -infinity for zero.
  [[nodiscard]] double log() const noexcept;
  /// Nearest double; saturates to 0 or +inf outside the native range.
  [[nodiscard]] double to_double() const noexcept;

  friend HdrScalar operator+(HdrScalar a, HdrScalar b) noexcept {
    if (a.m_ == 0.0) return b;
    if (b.m_ == 0.0) return a;
    if (a.e_ < b.e_) std::swap(a, b);
    const std::int64_t d = a.e_ - b.e_;
    if (d > kDropShift) return a;
    double m = a.m_ + b.m_ * pow2_neg(d);
    std::int64_t e = a.e_;
    if (m >= 1.0) {
      m *= 0.5;
      ++e;
    }
    return HdrScalar(m, e, Raw{});
  }

  friend HdrScalar operator-(HdrScalar a, HdrScalar b) noexcept {
    if (b.m_ == 0.0) return a;
    if (a.e_ < b.e_ || a.m_ == 0.0) return HdrScalar{};
    const std::int64_t d = a.e_ - b.e_;
    if (d > kDropShift) return a;
    const double m = a.m_ - b.m_ * pow2_neg(d);
    if (m <= 0.0) return HdrScalar{};
    if (m >= 0.5) return HdrScalar(m, a.e_, Raw{});
    int shift = 0;
    const double n = std::frexp(m, &shift);
    return HdrScalar(n, a.e_ + shift, Raw{});
  }

  friend HdrScalar operator*(HdrScalar a, HdrScalar b) noexcept {
    if (a.m_ == 0.0 || b.m_ == 0.0) return HdrScalar{};
    double m = a.m_ * b.m_;
    std::int64_t e = a.e_ + b.e_;
    if (m < 0.5) {
      m *= 2.0;
      --e;
    }
    return HdrScalar(m, e, Raw{});
  }

  /// Division by zero yields zero for a zero numerator and throws otherwise.
  friend HdrScalar operator/(HdrScalar a, HdrScalar b);

  HdrScalar& operator+=(HdrScalar b) noexcept { return *this = *this + b; }
  HdrScalar& operator-=(HdrScalar b) noexcept { return *this = *this - b; }
  HdrScalar& operator*=(HdrScalar b) noexcept { return *this = *this * b; }

  friend constexpr bool operator==(HdrScalar a, HdrScalar b) noexcept {
    return a.m_ == b.m_ && a.e_ == b.e_;
  }
  friend constexpr std::strong_ordering operator<=>(HdrScalar a, HdrScalar b) noexcept {
    if (a.m_ == 0.0 || b.m_ == 0.0) {
      return (a.m_ != 0.0) <=> (b.m_ != 0.0);
    }
    if (a.e_ != b.e_) return a.e_ <=> b.e_;
    return a.m_ < b.m_ ? std::strong_ordering::less
         : a.m_ > b.m_ ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  [[nodiscard]] HdrScalar sqrt() const noexcept;

  [[nodiscard]] std::string to_string() const;

 private:
  struct Raw {};
  constexpr HdrScalar(double m, std::int64_t e, Raw) noexcept : m_(m), e_(e) {}

  // A shift beyond this cannot change a 53-bit mantissa under round-to-nearest.
  static constexpr std::int64_t kDropShift = 56;

  static double pow2_neg(std::int64_t d) noexcept {
    return std::bit_cast<double>(static_cast<std::uint64_t>(1023 - d) << 52);
  }

  double m_ = 0.0;
  std::int64_t e_ = 0;
};

std::ostream& operator<<(std::ostream& os, HdrScalar x);

/// |a - b| / max(a, b); 0 when both are zero, 1 when exactly one is.
double relative_deviation(HdrScalar a, HdrScalar b) noexcept;

}  // namespace ssk
