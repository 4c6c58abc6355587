#include "fibtan/certified.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <utility>

#include "fibtan/errors.hpp"

namespace fibtan {

namespace {

constexpr mpfr_prec_t radius_precision = 64;

std::string take_string(char* raw) {
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(owned.get());
}

// Exact copy of an integer into a float with enough precision to hold it.
Mpfr exact_float(const mpz_class& v) {
  const auto bits = std::max<mpfr_prec_t>(
      static_cast<mpfr_prec_t>(mpz_sizeinbase(v.get_mpz_t(), 2)),
      MPFR_PREC_MIN);
  Mpfr out(bits);
  mpfr_set_z(out.get(), v.get_mpz_t(), MPFR_RNDN);
  return out;
}

// |x| rounded in the given direction at radius precision.
Mpfr magnitude(const Mpfr& x, mpfr_rnd_t rnd) {
  Mpfr out(radius_precision);
  mpfr_abs(out.get(), x.get(), rnd);
  return out;
}

}  // namespace

Mpfr::Mpfr(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

mpq_class Mpfr::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

CertifiedReal::CertifiedReal() : mid_(radius_precision), rad_(radius_precision) {}

CertifiedReal::CertifiedReal(Mpfr mid, Mpfr rad)
    : mid_(std::move(mid)), rad_(std::move(rad)) {}

void CertifiedReal::absorb_rounding(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_.get())) return;
  Mpfr ulp(radius_precision);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - mid_.precision(),
                   MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

CertifiedReal CertifiedReal::exact(std::int64_t value, mpfr_prec_t precision) {
  Mpfr mid(std::max<mpfr_prec_t>(precision, 64));
  mpfr_set_si(mid.get(), static_cast<long>(value), MPFR_RNDN);
  return CertifiedReal(std::move(mid), Mpfr(radius_precision));
}

CertifiedReal CertifiedReal::from_bounds(const Mpfr& lo, const Mpfr& hi) {
  if (mpfr_cmp(lo.get(), hi.get()) > 0)
    throw domain_error("ball bounds out of order");
  Mpfr mid(std::max(lo.precision(), hi.precision()));
  mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  Mpfr above(radius_precision);
  Mpfr below(radius_precision);
  mpfr_sub(above.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(below.get(), mid.get(), lo.get(), MPFR_RNDU);
  // The midpoint may round outside [lo, hi] only by an ulp; keep rad >= 0.
  if (mpfr_sgn(above.get()) < 0) mpfr_set_zero(above.get(), 1);
  if (mpfr_sgn(below.get()) < 0) mpfr_set_zero(below.get(), 1);
  Mpfr rad(radius_precision);
  mpfr_max(rad.get(), above.get(), below.get(), MPFR_RNDU);
  return CertifiedReal(std::move(mid), std::move(rad));
}

CertifiedReal CertifiedReal::pi(mpfr_prec_t precision) {
  Mpfr lo(precision), hi(precision);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return from_bounds(lo, hi);
}

CertifiedReal CertifiedReal::atan(const mpq_class& x, mpfr_prec_t precision) {
  if (sgn(x) == 0) return exact(0, precision);
  Mpfr x_lo(precision), x_hi(precision);
  mpfr_set_q(x_lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x_hi.get(), x.get_mpq_t(), MPFR_RNDU);
  Mpfr lo(precision), hi(precision);
  mpfr_atan(lo.get(), x_lo.get(), MPFR_RNDD);
  mpfr_atan(hi.get(), x_hi.get(), MPFR_RNDU);
  return from_bounds(lo, hi);
}

CertifiedReal CertifiedReal::atan2(const mpz_class& im, const mpz_class& re,
                                   mpfr_prec_t precision) {
  if (sgn(im) == 0 && sgn(re) == 0)
    throw domain_error("argument of zero is undefined");
  if (sgn(im) == 0 && sgn(re) > 0) return exact(0, precision);
  const Mpfr y = exact_float(im);
  const Mpfr x = exact_float(re);
  Mpfr lo(precision), hi(precision);
  mpfr_atan2(lo.get(), y.get(), x.get(), MPFR_RNDD);
  mpfr_atan2(hi.get(), y.get(), x.get(), MPFR_RNDU);
  return from_bounds(lo, hi);
}

CertifiedReal CertifiedReal::sqrt(unsigned long v, mpfr_prec_t precision) {
  Mpfr lo(precision), hi(precision);
  mpfr_sqrt_ui(lo.get(), v, MPFR_RNDD);
  mpfr_sqrt_ui(hi.get(), v, MPFR_RNDU);
  return from_bounds(lo, hi);
}

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal out = *this;
  mpfr_neg(out.mid_.get(), out.mid_.get(), MPFR_RNDN);
  return out;
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& rhs) {
  Mpfr sum(std::max(precision(), rhs.precision()));
  const int t = mpfr_add(sum.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(sum);
  mpfr_add(rad_.get(), rad_.get(), rhs.rad_.get(), MPFR_RNDU);
  absorb_rounding(t);
  return *this;
}

CertifiedReal& CertifiedReal::operator-=(const CertifiedReal& rhs) {
  return *this += -rhs;
}

CertifiedReal& CertifiedReal::operator*=(std::int64_t factor) {
  const int t =
      mpfr_mul_si(mid_.get(), mid_.get(), static_cast<long>(factor), MPFR_RNDN);
  mpfr_mul_ui(rad_.get(), rad_.get(),
              static_cast<unsigned long>(factor < 0 ? -factor : factor),
              MPFR_RNDU);
  absorb_rounding(t);
  return *this;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  Mpfr mid(std::max(a.precision(), b.precision()));
  const int t = mpfr_mul(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);

  // |a0| rb + |b0| ra + ra rb
  Mpfr rad(radius_precision), term(radius_precision);
  mpfr_mul(rad.get(), magnitude(a.mid_, MPFR_RNDU).get(), b.rad_.get(),
           MPFR_RNDU);
  mpfr_mul(term.get(), magnitude(b.mid_, MPFR_RNDU).get(), a.rad_.get(),
           MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), term.get(), MPFR_RNDU);

  CertifiedReal out(std::move(mid), std::move(rad));
  out.absorb_rounding(t);
  return out;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  const Mpfr b_low = magnitude(b.mid_, MPFR_RNDD);
  Mpfr gap(radius_precision);
  mpfr_sub(gap.get(), b_low.get(), b.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(gap.get()) <= 0)
    throw domain_error("division by a ball that contains zero");

  Mpfr mid(std::max(a.precision(), b.precision()));
  const int t = mpfr_div(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);

  // |a/b - a0/b0| <= (|a0| rb + |b0| ra) / (|b0| (|b0| - rb))
  Mpfr num(radius_precision), term(radius_precision), den(radius_precision);
  mpfr_mul(num.get(), magnitude(a.mid_, MPFR_RNDU).get(), b.rad_.get(),
           MPFR_RNDU);
  mpfr_mul(term.get(), magnitude(b.mid_, MPFR_RNDU).get(), a.rad_.get(),
           MPFR_RNDU);
  mpfr_add(num.get(), num.get(), term.get(), MPFR_RNDU);
  mpfr_mul(den.get(), b_low.get(), gap.get(), MPFR_RNDD);
  Mpfr rad(radius_precision);
  mpfr_div(rad.get(), num.get(), den.get(), MPFR_RNDU);

  CertifiedReal out(std::move(mid), std::move(rad));
  out.absorb_rounding(t);
  return out;
}

CertifiedReal& CertifiedReal::inflate(const mpq_class& amount) {
  if (sgn(amount) < 0) throw domain_error("negative inflation");
  Mpfr extra(radius_precision);
  mpfr_set_q(extra.get(), amount.get_mpq_t(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), extra.get(), MPFR_RNDU);
  return *this;
}

bool CertifiedReal::contains(const mpq_class& value) const {
  return abs(midpoint_rational() - value) <= radius_rational();
}

bool CertifiedReal::contains(const CertifiedReal& inner) const {
  return abs(midpoint_rational() - inner.midpoint_rational()) +
             inner.radius_rational() <=
         radius_rational();
}

bool CertifiedReal::overlaps(const CertifiedReal& other) const {
  return abs(midpoint_rational() - other.midpoint_rational()) <=
         radius_rational() + other.radius_rational();
}

bool CertifiedReal::radius_at_most(const mpq_class& bound) const {
  return mpfr_cmp_q(rad_.get(), bound.get_mpq_t()) <= 0;
}

std::string CertifiedReal::midpoint_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNe", std::max(digits, 1) - 1, mid_.get());
  return take_string(raw);
}

std::string CertifiedReal::radius_string() const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.3RUe", rad_.get());
  return take_string(raw);
}

mpq_class decimal_epsilon(int digits) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return mpq_class(mpz_class(1), den);
}

mpfr_prec_t bits_for_digits(int digits) {
  // log2(10) < 3.3220
  return static_cast<mpfr_prec_t>((static_cast<long>(digits) * 33220 + 9999) /
                                  10000);
}

}  // namespace fibtan
