#include "fibtan/angle.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>

#include "fibtan/errors.hpp"

namespace fibtan {

Rational make_rational(const BigWhole& p, const BigWhole& q) {
  if (sgn(q) == 0) throw domain_error("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational arctan_combine(const Rational& x, const Rational& y,
                        CombineMode mode) {
  const Rational xy = x * y;
  if (mode == CombineMode::add) {
    const Rational den = 1 - xy;
    if (sgn(den) == 0) throw domain_error("tangent pole: x*y = 1");
    return Rational(x + y) / den;
  }
  const Rational den = 1 + xy;
  if (sgn(den) == 0) throw domain_error("tangent pole: x*y = -1");
  return Rational(x - y) / den;
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt primitive(GaussianInt z) {
  BigWhole g;
  mpz_gcd(g.get_mpz_t(), z.re.get_mpz_t(), z.im.get_mpz_t());
  if (g > 1) {
    mpz_divexact(z.re.get_mpz_t(), z.re.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(z.im.get_mpz_t(), z.im.get_mpz_t(), g.get_mpz_t());
  }
  return z;
}

ArctanTerm::ArctanTerm(std::int64_t c, Rational a)
    : coeff(c), arg(std::move(a)) {
  if (coeff == 0) throw domain_error("arctangent term with zero coefficient");
  if (sgn(arg) < 0) throw domain_error("arctangent argument must be >= 0");
}

AngleSum& AngleSum::add(std::int64_t coeff, const BigWhole& num,
                        const BigWhole& den) {
  return add(coeff, make_rational(num, den));
}

AngleSum& AngleSum::add(std::int64_t coeff, Rational arg) {
  terms.emplace_back(coeff, std::move(arg));
  return *this;
}

AngleSum& AngleSum::append(const AngleSum& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

AngleSum AngleSum::negated() const { return scaled(-1); }

AngleSum AngleSum::scaled(std::int64_t factor) const {
  if (factor == 0) return {};
  AngleSum out = *this;
  for (auto& t : out.terms) t.coeff *= factor;
  return out;
}

std::int64_t AngleSum::weight() const {
  std::int64_t w = 0;
  for (const auto& t : terms) w += std::llabs(t.coeff);
  return w;
}

std::string AngleSum::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    const auto mag = std::llabs(t.coeff);
    if (t.coeff < 0)
      out << (first ? "-" : " - ");
    else if (!first)
      out << " + ";
    if (mag != 1) out << mag << '*';
    out << "atan(" << t.arg.get_str() << ')';
    first = false;
  }
  return out.str();
}

GaussianInt gaussian_product(const AngleSum& a) {
  GaussianInt z;
  for (const auto& t : a.terms) {
    if (sgn(t.arg) == 0) continue;  // factor den + 0i is a positive real
    GaussianInt factor{t.arg.get_den(), t.arg.get_num()};
    if (t.coeff < 0) factor.im = -factor.im;
    for (auto i = std::llabs(t.coeff); i > 0; --i) z = primitive(z * factor);
  }
  return primitive(std::move(z));
}

CertifiedReal certified_value(const AngleSum& a, mpfr_prec_t precision_bits) {
  if (precision_bits < 8) throw domain_error("precision_bits must be >= 8");
  const auto weight = static_cast<std::uint64_t>(a.weight());
  const auto guard = static_cast<mpfr_prec_t>(std::bit_width(weight + 1));
  const mpfr_prec_t working = precision_bits + 8 + guard;
  CertifiedReal sum;
  for (const auto& t : a.terms) {
    if (sgn(t.arg) == 0) continue;
    sum += CertifiedReal::atan(t.arg, working) * t.coeff;
  }
  return sum;
}

CertifiedReal certified_arg(const GaussianInt& z, mpfr_prec_t precision_bits) {
  return CertifiedReal::atan2(z.im, z.re, precision_bits + 8);
}

ReducedAngle reduce(const AngleSum& a) {
  ReducedAngle out{gaussian_product(a), 0};
  if (a.empty()) return out;
  const mpq_class quarter(1, 4);
  for (mpfr_prec_t bits = reduce_initial_precision;
       bits <= reduce_precision_cap; bits *= 2) {
    const CertifiedReal turns =
        (certified_value(a, bits) - certified_arg(out.z, bits)) /
        CertifiedReal::pi(bits + 8);
    const long k = mpfr_get_si(turns.midpoint().get(), MPFR_RNDN);
    if (abs(turns.midpoint_rational() - k) + turns.radius_rational() <
        quarter) {
      out.k = k;
      return out;
    }
  }
  throw precision_cap_error("pi multiple not isolated within precision cap");
}

bool is_zero(const AngleSum& a) {
  // A product off the positive real axis already decides the answer.
  if (gaussian_product(a) != GaussianInt{1, 0}) return false;
  return reduce(a).k == 0;
}

bool equals(const AngleSum& lhs, const AngleSum& rhs) {
  AngleSum diff = lhs;
  diff.append(rhs.negated());
  return is_zero(diff);
}

}  // namespace fibtan
