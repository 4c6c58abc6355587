#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fibtan/certified.hpp"
#include "fibtan/fib.hpp"

namespace fibtan {

/// Reduced fraction with positive denominator.
using Rational = mpq_class;

/// p/q in lowest terms. Throws domain_error when q == 0.
Rational make_rational(const BigWhole& p, const BigWhole& q);

enum class CombineMode { add, sub };

/// tan(arctan x + arctan y) in add mode, tan(arctan x - arctan y) in sub
/// mode. Whether that equals arctan of the sum is the caller's concern.
/// Throws domain_error at a pole (xy = 1 in add mode, xy = -1 in sub mode).
Rational arctan_combine(const Rational& x, const Rational& y, CombineMode mode);

struct GaussianInt {
  BigWhole re = 1;
  BigWhole im = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

/// Divides out gcd(|re|, |im|). Signs are kept: they carry the half-plane.
GaussianInt primitive(GaussianInt z);

/// c * arctan(arg) with c != 0 and arg >= 0.
struct ArctanTerm {
  ArctanTerm(std::int64_t coeff, Rational arg);

  std::int64_t coeff;
  Rational arg;
};

/// Formal integer combination of arctangents. Empty means the zero angle.
struct AngleSum {
  std::vector<ArctanTerm> terms;

  AngleSum& add(std::int64_t coeff, const BigWhole& num, const BigWhole& den);
  AngleSum& add(std::int64_t coeff, Rational arg);
  AngleSum& append(const AngleSum& other);

  AngleSum negated() const;
  AngleSum scaled(std::int64_t factor) const;
  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
  /// Sum of |coeff| over all terms.
  std::int64_t weight() const;

  /// "+2*atan(1/3) - atan(1/7)", or "0" for the empty sum.
  std::string to_string() const;
};

/// The exact angle of an AngleSum is arg(z) + k*pi with arg in (-pi, pi].
struct ReducedAngle {
  GaussianInt z;
  std::int64_t k = 0;

  friend bool operator==(const ReducedAngle&, const ReducedAngle&) = default;
};

/// Product of (den + num*i)^coeff over the terms, conjugated for negative
/// coefficients and reduced to primitive form after every multiplication.
GaussianInt gaussian_product(const AngleSum& a);

/// Resolves the pi multiple by certified evaluation at 64, 128, ... bits
/// until the candidate is isolated within 1/4. Throws precision_cap_error
/// past reduce_precision_cap bits.
ReducedAngle reduce(const AngleSum& a);

inline constexpr mpfr_prec_t reduce_initial_precision = 64;
inline constexpr mpfr_prec_t reduce_precision_cap = mpfr_prec_t{1} << 20;

bool is_zero(const AngleSum& a);
bool equals(const AngleSum& lhs, const AngleSum& rhs);

/// Ball around the exact angle with radius <= 2^(1-bits) * (1 + size()).
/// Throws domain_error when precision_bits < 8.
CertifiedReal certified_value(const AngleSum& a, mpfr_prec_t precision_bits);

/// Ball around arg(z) in (-pi, pi].
CertifiedReal certified_arg(const GaussianInt& z, mpfr_prec_t precision_bits);

}  // namespace fibtan
