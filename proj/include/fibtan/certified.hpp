#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace fibtan {

/// Owning handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Exact conversion; the value must be finite.
  mpq_class to_rational() const;

 private:
  mpfr_t value_;
};

/// Midpoint-radius ball: the exact value lies in [mid - rad, mid + rad].
///
/// The midpoint carries the working precision; the radius is a 64-bit
/// float that is only ever rounded upward. Every arithmetic operation adds
/// the rounding error of its midpoint to the radius, so enclosures are
/// preserved through arbitrary expression trees.
class CertifiedReal {
 public:
  /// Exact zero.
  CertifiedReal();

  static CertifiedReal exact(std::int64_t value, mpfr_prec_t precision = 64);

  /// Smallest ball (up to rounding) around [lo, hi]. Requires lo <= hi.
  static CertifiedReal from_bounds(const Mpfr& lo, const Mpfr& hi);

  /// Enclosure of pi.
  static CertifiedReal pi(mpfr_prec_t precision);

  /// Enclosure of arctan(x) for exact rational x.
  static CertifiedReal atan(const mpq_class& x, mpfr_prec_t precision);

  /// Enclosure of the argument of re + im*i in (-pi, pi]. (re, im) != 0.
  static CertifiedReal atan2(const mpz_class& im, const mpz_class& re,
                             mpfr_prec_t precision);

  /// Enclosure of sqrt(v).
  static CertifiedReal sqrt(unsigned long v, mpfr_prec_t precision);

  const Mpfr& midpoint() const { return mid_; }
  const Mpfr& radius() const { return rad_; }
  mpfr_prec_t precision() const { return mid_.precision(); }

  CertifiedReal operator-() const;
  CertifiedReal& operator+=(const CertifiedReal& rhs);
  CertifiedReal& operator-=(const CertifiedReal& rhs);
  CertifiedReal& operator*=(std::int64_t factor);

  friend CertifiedReal operator+(CertifiedReal lhs, const CertifiedReal& rhs) {
    return lhs += rhs;
  }
  friend CertifiedReal operator-(CertifiedReal lhs, const CertifiedReal& rhs) {
    return lhs -= rhs;
  }
  friend CertifiedReal operator*(CertifiedReal lhs, std::int64_t factor) {
    return lhs *= factor;
  }
  friend CertifiedReal operator*(std::int64_t factor, CertifiedReal rhs) {
    return rhs *= factor;
  }
  friend CertifiedReal operator*(const CertifiedReal& a,
                                 const CertifiedReal& b);
  /// Throws domain_error if the divisor ball contains zero.
  friend CertifiedReal operator/(const CertifiedReal& a,
                                 const CertifiedReal& b);

  /// Widens the radius by a non-negative exact amount.
  CertifiedReal& inflate(const mpq_class& amount);

  bool contains(const mpq_class& value) const;
  /// Every point of `inner` lies in this ball.
  bool contains(const CertifiedReal& inner) const;
  bool overlaps(const CertifiedReal& other) const;
  bool radius_at_most(const mpq_class& bound) const;

  mpq_class midpoint_rational() const { return mid_.to_rational(); }
  mpq_class radius_rational() const { return rad_.to_rational(); }

  /// Midpoint in scientific notation with `digits` significant digits.
  std::string midpoint_string(int digits) const;
  /// Radius in scientific notation, rounded up.
  std::string radius_string() const;

 private:
  CertifiedReal(Mpfr mid, Mpfr rad);
  void absorb_rounding(int ternary);

  Mpfr mid_;
  Mpfr rad_;
};

/// 10^-digits as an exact rational.
mpq_class decimal_epsilon(int digits);

/// Bits needed so that 2^-bits <= 10^-digits.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace fibtan
