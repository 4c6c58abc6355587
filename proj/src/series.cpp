#include "fibtan/series.hpp"

#include <bit>
#include <chrono>
#include <cstdlib>

#include "fibtan/errors.hpp"

namespace fibtan {

namespace {

// Extra bits so that 2^(1-bits)(1+count) <= 2^-target.
mpfr_prec_t with_count_guard(mpfr_prec_t target, std::int64_t count) {
  return target + 1 +
         static_cast<mpfr_prec_t>(
             std::bit_width(static_cast<std::uint64_t>(count) + 1));
}

}  // namespace

CertifiedReal pi_quarter(mpfr_prec_t precision_bits) {
  if (precision_bits < 8) throw domain_error("precision_bits must be >= 8");
  const mpfr_prec_t w = precision_bits + 4;
  Mpfr lo(w), hi(w);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  mpfr_div_2ui(lo.get(), lo.get(), 2, MPFR_RNDD);
  mpfr_div_2ui(hi.get(), hi.get(), 2, MPFR_RNDU);
  return CertifiedReal::from_bounds(lo, hi);
}

CertifiedReal golden_arctan(mpfr_prec_t precision_bits) {
  if (precision_bits < 8) throw domain_error("precision_bits must be >= 8");
  const mpfr_prec_t w = precision_bits + 8;
  // 1/phi = (sqrt(5) - 1) / 2; arctan is increasing.
  Mpfr lo(w), hi(w);
  mpfr_sqrt_ui(lo.get(), 5, MPFR_RNDD);
  mpfr_sqrt_ui(hi.get(), 5, MPFR_RNDU);
  mpfr_sub_ui(lo.get(), lo.get(), 1, MPFR_RNDD);
  mpfr_sub_ui(hi.get(), hi.get(), 1, MPFR_RNDU);
  mpfr_div_2ui(lo.get(), lo.get(), 1, MPFR_RNDD);
  mpfr_div_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
  mpfr_atan(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_atan(hi.get(), hi.get(), MPFR_RNDU);
  return CertifiedReal::from_bounds(lo, hi);
}

TailBound tail_bound(IdentityId id, std::int64_t m, std::int64_t after_index) {
  if (after_index < 1) throw domain_error("tail index must be at least 1");
  const TermGenerator terms(id, m);
  TailBound out{after_index, 0};
  if (terms.degenerate()) return out;
  const ArctanTerm next = terms(after_index + 1);
  out.bound = next.arg * static_cast<long>(std::llabs(next.coeff));
  if (!terms.alternating()) out.bound *= 2;
  return out;
}

CertifiedReal partial_sum(const TermGenerator& terms, std::int64_t count,
                          mpfr_prec_t precision_bits) {
  AngleSum sum;
  for (std::int64_t n = 1; n <= count; ++n) sum.terms.push_back(terms(n));
  return certified_value(sum, precision_bits);
}

CertifiedReal closed_form_value(const ClosedForm& form,
                                mpfr_prec_t precision_bits) {
  if (const auto* angles = std::get_if<RationalAngles>(&form))
    return certified_value(angles->sum, precision_bits);
  if (std::holds_alternative<GoldenArctan>(form))
    return golden_arctan(precision_bits);
  return pi_quarter(precision_bits);
}

std::int64_t terms_needed(IdentityId id, std::int64_t m, const Rational& bound) {
  if (TermGenerator(id, m).degenerate()) return 0;
  // Gallop then bisect; tail bounds decrease in N.
  std::int64_t hi = 1;
  while (tail_bound(id, m, hi).bound > bound) hi *= 2;
  std::int64_t lo = hi / 2;  // tail_bound(lo) > bound, or lo == 0
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (tail_bound(id, m, mid).bound > bound)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

VerificationReport verify_infinite(IdentityId id, std::int64_t m, int digits) {
  if (digits < 1) throw domain_error("digits must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const TermGenerator terms(id, m);

  VerificationReport report;
  report.id = id;
  if (catalog_entry(id).arity == Arity::m_only) report.m = m;
  report.digits = digits;

  // Budget: a quarter of 10^-digits to the tail, a quarter to rounding.
  const Rational eps = decimal_epsilon(digits);
  const Rational quarter_eps = eps / 4;
  const mpfr_prec_t target = bits_for_digits(digits) + 2;

  report.terms_used = terms_needed(id, m, quarter_eps);
  const ClosedForm form = closed_form(id, m);
  std::size_t rhs_terms = 0;
  if (const auto* angles = std::get_if<RationalAngles>(&form))
    rhs_terms = angles->sum.size();

  report.lhs = partial_sum(terms, report.terms_used,
                           with_count_guard(target, report.terms_used));
  if (report.terms_used > 0)
    report.lhs.inflate(tail_bound(id, m, report.terms_used).bound);
  report.rhs = closed_form_value(
      form, with_count_guard(target, static_cast<std::int64_t>(rhs_terms)));

  if (!report.lhs.overlaps(report.rhs))
    report.status = Status::falsified;
  else if (report.lhs.radius_at_most(eps) && report.rhs.radius_at_most(eps))
    report.status = Status::verified;
  else
    report.status = Status::inconclusive;

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace fibtan
