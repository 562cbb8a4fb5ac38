#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <span>

#include "cohdis/errors.hpp"

namespace cohdis {

/// Signed log-magnitude scalar: a sign in {-1, 0, +1} plus ln|x|.
///
/// Powers like x^n with n ~ 1e6 leave the double range long before the
/// ratios between terms become ill-conditioned, so the exponent is kept as
/// an ordinary double and all arithmetic happens on it directly.
class LogScalar {
 public:
  LogScalar() : sign_(0), log_mag_(-inf()) {}

  static LogScalar zero() { return LogScalar(); }
  static LogScalar one() { return from_log(+1, 0.0); }

  static LogScalar from_real(double x) {
    if (x == 0.0) return zero();
    return from_log(std::signbit(x) ? -1 : +1, std::log(std::abs(x)));
  }

  static LogScalar from_log(int sign, double log_mag) {
    if (sign == 0 || log_mag == -inf()) return zero();
    LogScalar r;
    r.sign_ = sign > 0 ? +1 : -1;
    r.log_mag_ = log_mag;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  /// ln|x|; -inf when the value is zero.
  double log_mag() const { return log_mag_; }
  double log10_mag() const { return log_mag_ / std::numbers::ln10; }

  /// Lossy conversion; saturates to +-inf / 0 outside the double range.
  double to_real() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_); }

  LogScalar operator-() const { return from_log(-sign_, log_mag_); }

  friend LogScalar operator*(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return zero();
    return from_log(a.sign_ * b.sign_, a.log_mag_ + b.log_mag_);
  }

  friend LogScalar operator/(const LogScalar& a, const LogScalar& b) {
    if (b.sign_ == 0) throw ParamOutOfRange("LogScalar: division by zero");
    if (a.sign_ == 0) return zero();
    return from_log(a.sign_ * b.sign_, a.log_mag_ - b.log_mag_);
  }

  /// Signed addition with the larger exponent factored out.
  friend LogScalar operator+(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const bool a_hi = a.log_mag_ >= b.log_mag_;
    const LogScalar& hi = a_hi ? a : b;
    const LogScalar& lo = a_hi ? b : a;
    const double delta = lo.log_mag_ - hi.log_mag_;  // <= 0
    if (a.sign_ == b.sign_)
      return from_log(a.sign_, hi.log_mag_ + std::log1p(std::exp(delta)));
    const double rest = -std::expm1(delta);  // 1 - e^delta in [0, 1]
    if (rest == 0.0) return zero();
    return from_log(hi.sign_, hi.log_mag_ + std::log(rest));
  }

  friend LogScalar operator-(const LogScalar& a, const LogScalar& b) { return a + (-b); }

  /// |x|^e for nonnegative values (zero allowed when e > 0).
  LogScalar pow(double e) const {
    if (sign_ == 0) {
      if (e <= 0.0) throw ParamOutOfRange("LogScalar: zero to a non-positive power");
      return zero();
    }
    if (sign_ < 0) throw ParamOutOfRange("LogScalar: negative base in pow");
    return from_log(+1, log_mag_ * e);
  }

  /// Sum of several terms with the maximum exponent factored out.
  /// An accumulated coefficient that lands below the double roundoff floor
  /// is indistinguishable from an exact cancellation and is returned as zero.
  static LogScalar sum(std::span<const LogScalar> terms) {
    double max_log = -inf();
    for (const auto& t : terms)
      if (t.sign_ != 0 && t.log_mag_ > max_log) max_log = t.log_mag_;
    if (max_log == -inf()) return zero();
    double acc = 0.0;
    for (const auto& t : terms)
      if (t.sign_ != 0) acc += t.sign_ * std::exp(t.log_mag_ - max_log);
    if (std::abs(acc) <= 32.0 * std::numeric_limits<double>::epsilon()) return zero();
    return from_log(acc > 0.0 ? +1 : -1, max_log + std::log(std::abs(acc)));
  }

  static LogScalar sum(std::initializer_list<LogScalar> terms) {
    return sum(std::span<const LogScalar>(terms.begin(), terms.size()));
  }

  friend bool operator==(const LogScalar& a, const LogScalar& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_mag_ == b.log_mag_);
  }

  /// Orders by the signed value.
  friend bool operator<(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    return a.sign_ > 0 ? a.log_mag_ < b.log_mag_ : a.log_mag_ > b.log_mag_;
  }
  friend bool operator>(const LogScalar& a, const LogScalar& b) { return b < a; }
  friend bool operator<=(const LogScalar& a, const LogScalar& b) { return !(b < a); }
  friend bool operator>=(const LogScalar& a, const LogScalar& b) { return !(a < b); }

 private:
  static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

  int sign_;
  double log_mag_;
};

/// e^x - 1 as a LogScalar, accurate for x of either sign and any size.
inline LogScalar expm1_log(double x) {
  if (x == 0.0) return LogScalar::zero();
  if (x < 0.0) return LogScalar::from_log(-1, std::log(-std::expm1(x)));
  if (x > 0.7) return LogScalar::from_log(+1, x + std::log1p(-std::exp(-x)));
  return LogScalar::from_log(+1, std::log(std::expm1(x)));
}

/// ln(dim^{2m} - dim^m) = 2m ln(dim) + ln(1 - dim^{-m}).
inline double log_dim_power_gap(int dim, long long copies) {
  if (dim < 2 || copies < 1)
    throw ParamOutOfRange("log_dim_power_gap: requires dim >= 2 and copies >= 1");
  const double ld = std::log(static_cast<double>(dim));
  const double m = static_cast<double>(copies);
  return 2.0 * m * ld + std::log1p(-std::exp(-m * ld));
}

}  // namespace cohdis
