#include <doctest.h>

#include "fibtan/certified.hpp"
#include "fibtan/errors.hpp"

using namespace fibtan;

TEST_SUITE("certified") {
  TEST_CASE("enclosures of constants") {
    const mpq_class pi_low("3141592653589793238462643383279/1000000000000000000000000000000");
    const mpq_class pi_high("3141592653589793238462643383280/1000000000000000000000000000000");
    const CertifiedReal pi = CertifiedReal::pi(200);
    CHECK(pi.midpoint_rational() > pi_low);
    CHECK(pi.midpoint_rational() < pi_high);
    CHECK(pi.radius_at_most(mpq_class(1) / (mpz_class(1) << 198)));

    const CertifiedReal root = CertifiedReal::sqrt(5, 100);
    CHECK((root * root).contains(mpq_class(5)));
  }

  TEST_CASE("arithmetic keeps the exact value enclosed") {
    const CertifiedReal third = CertifiedReal::atan(mpq_class(1, 3), 80);
    const CertifiedReal half = CertifiedReal::atan(mpq_class(1, 2), 80);
    const CertifiedReal quarter_pi = CertifiedReal::pi(80) / CertifiedReal::exact(4);
    CHECK((third + half).overlaps(quarter_pi));
    CHECK((third + half - quarter_pi).contains(mpq_class(0)));
    CHECK((quarter_pi * 4).overlaps(CertifiedReal::pi(120)));
    CHECK((-quarter_pi * -4).overlaps(CertifiedReal::pi(120)));
  }

  TEST_CASE("argument of Gaussian integers") {
    CHECK(CertifiedReal::atan2(0, 5, 64).radius_rational() == 0);
    CHECK(CertifiedReal::atan2(0, -1, 64).overlaps(CertifiedReal::pi(64)));
    CHECK((CertifiedReal::atan2(1, 0, 64) * 2).overlaps(CertifiedReal::pi(64)));
    CHECK(CertifiedReal::atan2(-1, -1, 64).overlaps(
        CertifiedReal::pi(64) * -3 / CertifiedReal::exact(4)));
    CHECK_THROWS_AS(CertifiedReal::atan2(0, 0, 64), domain_error);
  }

  TEST_CASE("containment, overlap and inflation") {
    CertifiedReal a = CertifiedReal::exact(1);
    CHECK(a.contains(mpq_class(1)));
    CHECK_FALSE(a.contains(mpq_class(1, 2)));
    a.inflate(mpq_class(1, 2));
    CHECK(a.contains(mpq_class(1, 2)));
    CHECK(a.contains(CertifiedReal::exact(1)));
    CHECK_FALSE(CertifiedReal::exact(1).contains(a));
    CHECK(a.overlaps(CertifiedReal::exact(0).inflate(mpq_class(1, 2))));
    CHECK_FALSE(a.overlaps(CertifiedReal::exact(-1)));
    CHECK_THROWS_AS(a.inflate(mpq_class(-1)), domain_error);
  }

  TEST_CASE("division guards against zero") {
    CertifiedReal around_zero = CertifiedReal::exact(0);
    around_zero.inflate(mpq_class(1, 10));
    CHECK_THROWS_AS(CertifiedReal::exact(1) / around_zero, domain_error);
  }

  TEST_CASE("decimal helpers") {
    CHECK(decimal_epsilon(3) == mpq_class(1, 1000));
    for (int d : {1, 10, 50, 64, 100}) {
      // 2^-bits <= 10^-d
      const mpz_class two_pow = mpz_class(1) << bits_for_digits(d);
      CHECK(mpq_class(1) / two_pow <= decimal_epsilon(d));
    }
    CHECK(CertifiedReal::exact(3).midpoint_string(4) == "3.000e+00");
  }
}
