#include <doctest.h>

#include <algorithm>
#include <random>

#include "fibtan/angle.hpp"
#include "fibtan/errors.hpp"

using namespace fibtan;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

AngleSum sum_of(std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
  AngleSum s;
  for (const auto& [c, a] : terms) s.add(c, a);
  return s;
}

// Decimal strings from an independent 80-digit evaluation.
const mpq_class atan_one("78539816339744830961566084581987572105/"
                         "100000000000000000000000000000000000000");
const mpq_class atan_two("110714871779409050301706546017853704007/"
                         "100000000000000000000000000000000000000");

AngleSum random_sum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<long> num(0, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  AngleSum s;
  for (int i = count(rng); i > 0; --i) {
    int c = 0;
    while (c == 0) c = coeff(rng);
    s.add(c, q(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_SUITE("exact-angle") {
  TEST_CASE("make_rational") {
    CHECK(make_rational(2, 4) == q(1, 2));
    const Rational neg = make_rational(3, -6);
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);
    const Rational zero = make_rational(0, 7);
    CHECK(zero.get_num() == 0);
    CHECK(zero.get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), domain_error);
  }

  TEST_CASE("arctan_combine") {
    CHECK(arctan_combine(q(1, 1), q(1, 3), CombineMode::add) == 2);
    CHECK(arctan_combine(q(5, 7), q(0, 1), CombineMode::add) == q(5, 7));
    CHECK(arctan_combine(q(3, 4), q(3, 29), CombineMode::sub) == q(3, 5));
    CHECK_THROWS_AS(arctan_combine(q(2, 1), q(1, 2), CombineMode::add),
                    domain_error);
    CHECK_THROWS_AS(arctan_combine(q(2, 1), q(-1, 2), CombineMode::sub),
                    domain_error);
  }

  TEST_CASE("term invariants") {
    CHECK_THROWS_AS(ArctanTerm(0, q(1, 2)), domain_error);
    CHECK_THROWS_AS(ArctanTerm(1, q(-1, 2)), domain_error);
    CHECK_NOTHROW(ArctanTerm(-2, q(0, 1)));
  }

  TEST_CASE("gaussian_product") {
    CHECK(gaussian_product(sum_of({{1, q(1, 1)}, {1, q(1, 3)}})) ==
          GaussianInt{1, 2});
    CHECK(gaussian_product({}) == GaussianInt{1, 0});
    CHECK(gaussian_product(sum_of({{1, q(1, 2)}, {1, q(1, 3)}, {-1, q(1, 1)}})) ==
          GaussianInt{1, 0});
    // Oracle (4+3i)(29-3i) = 125 + 75i
    CHECK(gaussian_product(sum_of({{1, q(3, 4)}, {-1, q(3, 29)}})) ==
          GaussianInt{5, 3});
    // Zero arguments contribute a positive real factor.
    CHECK(gaussian_product(sum_of({{3, q(0, 1)}})) == GaussianInt{1, 0});
  }

  TEST_CASE("reduce") {
    CHECK(reduce(sum_of({{4, q(1, 1)}})) == ReducedAngle{{-1, 0}, 0});
    CHECK(reduce({}) == ReducedAngle{{1, 0}, 0});
    CHECK(reduce(sum_of({{1, q(2, 1)}, {1, q(1, 7)}, {1, q(1, 3)}})) ==
          ReducedAngle{{0, 1}, 0});
    // 8 atan(1) = 2 pi: product (1+i)^8 = 16 lands on (1, 0) with k = 2.
    CHECK(reduce(sum_of({{8, q(1, 1)}})) == ReducedAngle{{1, 0}, 2});
    CHECK(reduce(sum_of({{-8, q(1, 1)}})) == ReducedAngle{{1, 0}, -2});
  }

  TEST_CASE("is_zero") {
    CHECK(is_zero(sum_of({{1, q(1, 2)}, {1, q(1, 3)}, {-1, q(1, 1)}})));
    CHECK(is_zero({}));
    CHECK_FALSE(is_zero(sum_of({{1, q(1, 1)}})));
    CHECK_FALSE(is_zero(sum_of({{8, q(1, 1)}})));  // right product, wrong turn
    // Machin: 4 atan(1/5) - atan(1/239) = pi/4
    CHECK(is_zero(sum_of({{4, q(1, 5)}, {-1, q(1, 239)}, {-1, q(1, 1)}})));
  }

  TEST_CASE("equals") {
    CHECK(equals(sum_of({{1, q(1, 1)}, {1, q(1, 3)}}), sum_of({{1, q(2, 1)}})));
    const AngleSum any = sum_of({{2, q(7, 9)}, {-3, q(11, 2)}});
    CHECK(equals(any, any));
    CHECK(equals(sum_of({{1, q(3, 5)}}), sum_of({{1, q(3, 4)}, {-1, q(3, 29)}})));
    CHECK_FALSE(equals(sum_of({{1, q(3, 5)}}), sum_of({{1, q(3, 4)}})));
  }

  TEST_CASE("certified_value") {
    const CertifiedReal one = certified_value(sum_of({{1, q(1, 1)}}), 64);
    CHECK(one.contains(atan_one));
    CHECK(one.radius_at_most(mpq_class(1, 1) / (mpz_class(1) << 62)));
    const CertifiedReal empty = certified_value({}, 64);
    CHECK(empty.midpoint_rational() == 0);
    CHECK(empty.radius_rational() == 0);
    const CertifiedReal two = certified_value(sum_of({{1, q(2, 1)}}), 64);
    CHECK(two.contains(atan_two));
    CHECK_THROWS_AS(certified_value({}, 7), domain_error);
  }

  TEST_CASE("property: reduce is sound and radius contract holds") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 1000; ++trial) {
      const AngleSum a = random_sum(rng);
      const CertifiedReal value = certified_value(a, 128);
      const mpq_class allowed =
          mpq_class(static_cast<long>(1 + a.size())) / (mpz_class(1) << 127);
      REQUIRE(value.radius_at_most(allowed));

      const ReducedAngle r = reduce(a);
      const CertifiedReal rebuilt =
          certified_arg(r.z, 128) + CertifiedReal::pi(136) * r.k;
      REQUIRE(value.overlaps(rebuilt));
      // arg(z) determines the angle mod 2 pi, so the pi multiple is even.
      REQUIRE(r.k % 2 == 0);
    }
  }

  TEST_CASE("property: permutation invariance and equivalence") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
      const AngleSum a = random_sum(rng);
      AngleSum b = a;
      std::shuffle(b.terms.begin(), b.terms.end(), rng);
      AngleSum c = b;
      std::reverse(c.terms.begin(), c.terms.end());
      REQUIRE(reduce(a) == reduce(b));
      REQUIRE(equals(a, a));
      REQUIRE(equals(a, b));
      REQUIRE(equals(b, a));
      REQUIRE(equals(b, c));
      REQUIRE(equals(a, c));
    }
  }

  TEST_CASE("property: scaling consistency") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const AngleSum a = random_sum(rng);
      AngleSum twice = a;
      twice.append(a);
      REQUIRE(equals(a.scaled(2), twice));
    }
  }

  TEST_CASE("property: arctan_combine agrees with the decision procedure") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> small(0, 2000);
    std::uniform_int_distribution<long> positive(1, 2000);
    int checked = 0;
    while (checked < 300) {
      const Rational x = q(small(rng), positive(rng));
      const Rational y = q(small(rng), positive(rng));
      if (x * y >= 1) continue;
      const Rational z = arctan_combine(x, y, CombineMode::add);
      if (z < 0) continue;
      REQUIRE(equals(sum_of({{1, x}, {1, y}}), sum_of({{1, z}})));
      ++checked;
    }
  }

  TEST_CASE("primitive reduction keeps products small") {
    // 200 factors of (1 + i) collapse to a unit at every step.
    AngleSum s;
    for (int i = 0; i < 200; ++i) s.add(1, q(1, 1));
    const GaussianInt z = gaussian_product(s);
    CHECK(z == GaussianInt{1, 0});  // (1+i)^200 = 2^100 (a positive real)
    CHECK(reduce(s).k == 50);
  }
}
