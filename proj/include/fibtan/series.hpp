#pragma once

#include <cstdint>
#include <optional>

#include "fibtan/catalog.hpp"
#include "fibtan/certified.hpp"

namespace fibtan {

/// Rigorous bound on |sum_{n > after_index} term(n)|.
struct TailBound {
  std::int64_t after_index = 0;
  Rational bound;
};

/// Ball around pi/4 with radius <= 2^-precision_bits.
CertifiedReal pi_quarter(mpfr_prec_t precision_bits);

/// Ball around arctan(1/phi) = arctan((sqrt(5) - 1)/2), radius
/// <= 2^-precision_bits.
CertifiedReal golden_arctan(mpfr_prec_t precision_bits);

/// Alternating series: |coeff| * arg(N+1), the first omitted term bounded
/// by arctan(x) <= x. Otherwise 2 |coeff| * arg(N+1): consecutive arguments
/// at least halve because F(k+2) >= 2 F(k) and L(k+2) >= 2 L(k), k >= 1.
/// Zero for degenerate series. Throws domain_error when N < 1.
TailBound tail_bound(IdentityId id, std::int64_t m, std::int64_t after_index);

/// Ball around sum_{n=1}^{count} term(n), radius <= 2^(1-bits)(1+count).
CertifiedReal partial_sum(const TermGenerator& terms, std::int64_t count,
                          mpfr_prec_t precision_bits);

/// Ball around a closed form, radius <= 2^(1-bits)(1 + terms).
CertifiedReal closed_form_value(const ClosedForm& form,
                                mpfr_prec_t precision_bits);

struct VerificationReport {
  IdentityId id;
  std::optional<std::int64_t> m;
  int digits = 0;
  /// Partial sum widened by the tail bound.
  CertifiedReal lhs;
  CertifiedReal rhs;
  std::int64_t terms_used = 0;
  Status status = Status::inconclusive;
  double elapsed_ms = 0;
};

/// Smallest N >= 1 with tail_bound(id, m, N) <= bound. Zero for degenerate
/// series.
std::int64_t terms_needed(IdentityId id, std::int64_t m, const Rational& bound);

/// Verified when the balls intersect and both radii are <= 10^-digits;
/// falsified when they are disjoint; inconclusive otherwise.
VerificationReport verify_infinite(IdentityId id, std::int64_t m, int digits);

}  // namespace fibtan
