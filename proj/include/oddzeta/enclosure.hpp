#pragma once

// Midpoint-radius enclosures of reals over MPFR with outward rounding.
//
// Every operation returns an enclosure containing the image of its input
// enclosures. Operations never silently clamp: a log, division or root on an
// interval that touches the forbidden region throws EnclosureDomainError.

#include "oddzeta/arith.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace oddzeta {

/// Owning mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
  bool live_ = true;
};

enum class Sign { negative, positive, indeterminate };

std::string to_string(Sign s);

class EnclosureDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Enclosure {
 public:
  /// Working precision in bits for results of operations on this value.
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  /// The singleton {0}.
  explicit Enclosure(mpfr_prec_t prec = kDefaultPrecision);

  static Enclosure exact(const ExactRational& x, mpfr_prec_t prec);
  static Enclosure exact(const ExactInteger& x, mpfr_prec_t prec);
  static Enclosure exact(long x, mpfr_prec_t prec);

  /// Smallest representable ball containing [lo, hi] (lo <= hi, exact inputs).
  static Enclosure from_bounds(const ExactRational& lo, const ExactRational& hi,
                               mpfr_prec_t prec);

  /// Ball with the given mid and radius (radius rounded up on conversion).
  static Enclosure ball(const BigFloat& mid, const BigFloat& rad);

  const BigFloat& midpoint() const noexcept { return mid_; }
  const BigFloat& radius() const noexcept { return rad_; }
  mpfr_prec_t precision() const noexcept { return mid_.precision(); }

  /// mid - rad rounded down / mid + rad rounded up.
  BigFloat lower() const;
  BigFloat upper() const;

  Sign sign() const;
  bool contains(const ExactRational& x) const;
  bool contains(const Enclosure& inner) const;
  bool overlaps(const Enclosure& other) const;
  bool is_finite() const;

  /// radius <= 2^{-bits} * |x| for every x in the enclosure.
  bool relative_radius_at_most(long log2_bound) const;
  bool radius_at_most(const ExactRational& bound) const;

  /// Upper bound on log2(radius / min |x|); large when 0 is inside.
  double relative_error_log2() const;

  /// Same value rounded outward to a different precision.
  Enclosure with_precision(mpfr_prec_t prec) const;

  Enclosure operator-() const;
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  Enclosure& operator+=(const Enclosure& b) { return *this = *this + b; }
  Enclosure& operator-=(const Enclosure& b) { return *this = *this - b; }
  Enclosure& operator*=(const Enclosure& b) { return *this = *this * b; }

  /// Decimal midpoint with `digits` significant digits, e.g. "-2.5292363e+01".
  std::string mid_decimal(int digits) const;
  /// Radius rounded up, 6 significant digits.
  std::string rad_decimal() const;

 private:
  BigFloat mid_;
  BigFloat rad_;
};

Enclosure log(const Enclosure& x);
Enclosure exp(const Enclosure& x);
Enclosure sqrt(const Enclosure& x);
/// k-th root, k >= 1; requires x >= 0 (any k) unless k is odd.
Enclosure root(const Enclosure& x, unsigned long k);
Enclosure pow(const Enclosure& x, unsigned long e);
Enclosure abs(const Enclosure& x);
/// Convex hull.
Enclosure hull(const Enclosure& a, const Enclosure& b);

/// Enclosures of log 2, pi.
Enclosure log2_constant(mpfr_prec_t prec);
Enclosure pi_constant(mpfr_prec_t prec);

/// Bits needed for a relative error of 10^{-digits}.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace oddzeta
