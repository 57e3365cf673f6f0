#ifndef HEIS_ANGLE_HPP
#define HEIS_ANGLE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "heis/checked_int.hpp"

namespace heis {

/// An angle on the circle, stored either as an exact reduced rational p/q in
/// [0,1) or as a double in [0,1).  Rational angles keep integer-multiple
/// phase arithmetic exact: n*(p/q) is reduced mod 1 in integer arithmetic
/// before any trigonometric evaluation.
class Angle {
 public:
  Angle() : rational_(true), num_(0), den_(1), value_(0.0) {}

  static Angle rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("Angle::rational: q must be positive");
    p = mod_floor(p, q);
    const std::int64_t g = std::gcd(p, q);
    Angle a;
    a.rational_ = true;
    a.num_ = p / g;
    a.den_ = q / g;
    a.value_ = static_cast<double>(a.num_) / static_cast<double>(a.den_);
    return a;
  }

  static Angle real(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Angle::real: non-finite value");
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    Angle a;
    a.rational_ = false;
    a.num_ = 0;
    a.den_ = 1;
    a.value_ = f;
    return a;
  }

  bool is_rational() const { return rational_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return value_; }

  /// The angle n*theta mod 1, exact in the rational case.
  Angle times(std::int64_t n) const {
    if (rational_) return rational(checked_mul(mod_floor(n, den_), num_), den_);
    return real(value_ * static_cast<double>(n));
  }

  Angle negate() const {
    if (rational_) return rational(-num_, den_);
    return value_ == 0.0 ? real(0.0) : real(1.0 - value_);
  }

  Angle plus(const Angle& other) const {
    if (rational_ && other.rational_) {
      const std::int64_t d = checked_mul(den_, other.den_);
      return rational(checked_add(checked_mul(num_, other.den_), checked_mul(other.num_, den_)), d);
    }
    return real(value_ + other.value_);
  }

  /// e^{2 pi i theta}.
  std::complex<double> unit() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * value_);
  }

  /// Exact comparison: rationals compare as reduced fractions, doubles bitwise.
  friend bool operator==(const Angle& a, const Angle& b) {
    if (a.rational_ != b.rational_) return false;
    if (a.rational_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }

  std::string str() const {
    if (rational_) return std::to_string(num_) + "/" + std::to_string(den_);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
  }

 private:
  bool rational_;
  std::int64_t num_, den_;
  double value_;
};

/// e^{2 pi i (n * theta)} with exact mod-1 reduction for rational theta.
inline std::complex<double> unit_phase(const Angle& theta, std::int64_t n) {
  return theta.times(n).unit();
}

}  // namespace heis

#endif
