#include "ssk/hdr_scalar.hpp"

#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ssk {

HdrScalar::HdrScalar(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("HdrScalar requires a finite nonnegative value");
  }
  *this = from_parts(value, 0);
}

HdrScalar HdrScalar::from_parts(double mantissa, std::int64_t exponent) {
  if (!(mantissa >= 0.0) || !std::isfinite(mantissa)) {
    throw std::invalid_argument("HdrScalar mantissa must be finite and nonnegative");
  }
  if (mantissa == 0.0) return HdrScalar{};
  int shift = 0;
  const double m = std::frexp(mantissa, &shift);
  return HdrScalar(m, exponent + shift, Raw{});
}

HdrScalar HdrScalar::from_lambda_power(double lambda, std::int64_t k) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in (0, 1]");
  }
  if (lambda == 1.0 || k == 0) return one();

  int base_exp = 0;
  const double base_m = std::frexp(lambda, &base_exp);
  // lambda^|k| = base_m^|k| * 2^(base_exp*|k|), then invert for negative k.
  const std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                                : static_cast<std::uint64_t>(k);
  HdrScalar result = one();
  HdrScalar square = from_parts(base_m, 0);
  for (std::uint64_t bits = n; bits != 0; bits >>= 1) {
    if (bits & 1u) result *= square;
    square *= square;
  }
  result.e_ += static_cast<std::int64_t>(base_exp) * static_cast<std::int64_t>(n);
  if (k < 0) result = one() / result;
  return result;
}

HdrScalar operator/(HdrScalar a, HdrScalar b) {
  if (a.m_ == 0.0) return HdrScalar{};
  if (b.m_ == 0.0) throw std::domain_error("HdrScalar division by zero");
  double m = a.m_ / b.m_;  // in (0.5, 2)
  std::int64_t e = a.e_ - b.e_;
  if (m >= 1.0) {
    m *= 0.5;
    ++e;
  }
  return HdrScalar(m, e, HdrScalar::Raw{});
}

HdrScalar HdrScalar::sqrt() const noexcept {
  if (m_ == 0.0) return HdrScalar{};
  double m = m_;
  std::int64_t e = e_;
  if (e & 1) {
    m *= 2.0;
    e -= 1;
  }
  // m in [0.5, 2): sqrt in [0.707, 1.414)
  double r = std::sqrt(m);
  e /= 2;
  if (r >= 1.0) {
    r *= 0.5;
    ++e;
  }
  return HdrScalar(r, e, Raw{});
}

double HdrScalar::log() const noexcept {
  if (m_ == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(m_) + static_cast<double>(e_) * std::numbers::ln2;
}

double HdrScalar::to_double() const noexcept {
  if (m_ == 0.0) return 0.0;
  if (e_ > 2000) return std::numeric_limits<double>::infinity();
  if (e_ < -2000) return 0.0;
  return std::ldexp(m_, static_cast<int>(e_));
}

std::string HdrScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, HdrScalar x) {
  if (x.exponent() > -1000 && x.exponent() < 1000) return os << x.to_double();
  return os << x.mantissa() << "*2^" << x.exponent();
}

double relative_deviation(HdrScalar a, HdrScalar b) noexcept {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return 1.0;
  const HdrScalar lo = a < b ? a : b;
  const HdrScalar hi = a < b ? b : a;
  return 1.0 - (lo / hi).to_double();
}

}  // namespace ssk
