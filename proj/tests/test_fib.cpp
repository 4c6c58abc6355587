#include <doctest.h>

#include <thread>
#include <vector>

#include "fibtan/algebraic.hpp"
#include "fibtan/errors.hpp"
#include "fibtan/fib.hpp"

using namespace fibtan;

namespace {

// Independent oracle: GMP's own Fibonacci and Lucas routines.
BigWhole gmp_fib(unsigned long n) {
  BigWhole v;
  mpz_fib_ui(v.get_mpz_t(), n);
  return v;
}

BigWhole gmp_lucas(unsigned long n) {
  BigWhole v;
  mpz_lucnum_ui(v.get_mpz_t(), n);
  return v;
}

}  // namespace

TEST_SUITE("fib") {
  TEST_CASE("seed values and worked examples") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(-4) == -3);
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(7) == 29);
    CHECK(lucas(-3) == -4);
  }

  TEST_CASE("recurrence on [-100, 100]") {
    for (std::int64_t n = -100; n <= 100; ++n) {
      CHECK(fib(n + 1) == fib(n) + fib(n - 1));
      CHECK(lucas(n + 1) == lucas(n) + lucas(n - 1));
    }
  }

  TEST_CASE("reflection on [1, 100]") {
    for (std::int64_t n = 1; n <= 100; ++n) {
      const int f_sign = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
      CHECK(fib(-n) == f_sign * fib(n));
      CHECK(lucas(-n) == -f_sign * lucas(n));
    }
  }

  TEST_CASE("agrees with GMP up to index 1000") {
    for (unsigned long n = 0; n <= 1000; n += 7) {
      CHECK(fib(static_cast<std::int64_t>(n)) == gmp_fib(n));
      CHECK(lucas(static_cast<std::int64_t>(n)) == gmp_lucas(n));
    }
  }

  TEST_CASE("index doubling matches GMP at isolated large indices") {
    for (unsigned long n : {0UL, 1UL, 2UL, 3UL, 64UL, 513UL, 4096UL, 100001UL}) {
      auto [f, f1] = fib_pair_doubling(n);
      CHECK(f == gmp_fib(n));
      CHECK(f1 == gmp_fib(n + 1));
    }
  }

  TEST_CASE("far index does not force a linear fill") {
    SequenceCache cache;
    CHECK(cache.fib(50000) == gmp_fib(50000));
    CHECK(cache.contiguous_limit() < SequenceCache::linear_reach);
    CHECK(cache.lucas(50000) == gmp_lucas(50000));
  }

  TEST_CASE("cache coherence: cold, warm and disabled agree") {
    SequenceCache cold;
    SequenceCache warm;
    SequenceCache off(CachePolicy::disabled);
    for (std::int64_t n = 0; n <= 400; ++n) warm.fib(n);
    for (std::int64_t n = -150; n <= 400; n += 3) {
      const BigWhole a = cold.fib(n);
      CHECK(a == warm.fib(n));
      CHECK(a == off.fib(n));
      const BigWhole b = cold.lucas(n);
      CHECK(b == warm.lucas(n));
      CHECK(b == off.lucas(n));
    }
    CHECK(off.contiguous_limit() == -1);
  }

  TEST_CASE("concurrent readers and writers see identical values") {
    SequenceCache shared;
    std::vector<std::vector<BigWhole>> seen(4);
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w) {
      workers.emplace_back([&, w] {
        for (std::int64_t n = 0; n < 1500; ++n)
          seen[w].push_back(shared.fib((n * (w + 3)) % 1500));
      });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < 4; ++w)
      for (std::int64_t n = 0; n < 1500; n += 37)
        CHECK(seen[w][n] == gmp_fib(static_cast<unsigned long>((n * (w + 3)) % 1500)));
  }
}

TEST_SUITE("algebraic") {
  TEST_CASE("worked examples") {
    CHECK(check_algebraic_identity(AlgebraicFamily::alg09, 5, 0));
    CHECK(check_algebraic_identity(AlgebraicFamily::alg11, 1, 2));
    CHECK(check_algebraic_identity(AlgebraicFamily::alg09, 0, 0));
  }

  TEST_CASE("parity constraints per family") {
    using AF = AlgebraicFamily;
    CHECK(parity_of(AF::alg09) == Parity::none);
    CHECK(parity_of(AF::alg10) == Parity::none);
    CHECK(parity_of(AF::alg11) == Parity::m_odd);
    CHECK(parity_of(AF::alg12) == Parity::m_even);
    CHECK(parity_of(AF::alg13) == Parity::m_odd);
    CHECK(parity_of(AF::alg14) == Parity::m_even);
    CHECK(parity_of(AF::alg15) == Parity::m_odd);
    CHECK(parity_of(AF::alg16) == Parity::m_even);
    CHECK(parity_of(AF::alg17) == Parity::m_odd);
    CHECK(parity_of(AF::alg18) == Parity::m_even);
    CHECK(parity_of(AF::alg19) == Parity::n_odd);
    CHECK(parity_of(AF::alg20) == Parity::n_even);
    CHECK(parity_of(AF::alg21) == Parity::n_odd);
    CHECK(parity_of(AF::alg22) == Parity::n_even);
  }

  TEST_CASE("parity violation is an error, not false") {
    CHECK_THROWS_AS(check_algebraic_identity(AlgebraicFamily::alg11, 2, 3),
                    parity_error);
    CHECK_THROWS_AS(check_algebraic_identity(AlgebraicFamily::alg20, 2, 3),
                    parity_error);
    CHECK_THROWS_AS(check_algebraic_identity(AlgebraicFamily::alg09, -1, 0),
                    domain_error);
  }

  TEST_CASE("wrong-parity instances really are false") {
    // Without the constraint the relations fail, so the parity guard matters.
    auto F = [](std::int64_t k) { return fib(k); };
    auto L = [](std::int64_t k) { return lucas(k); };
    CHECK(F(3 + 4) - F(3) != L(2) * F(3 + 2));   // ALG-11 at even m
    CHECK(F(2) * F(2 + 2) != F(3) * F(3) + F(1) * F(1));  // ALG-19 at even n
  }

  TEST_CASE("names round-trip") {
    for (auto family : all_algebraic_families)
      CHECK(parse_algebraic_family(name_of(family)) == family);
    CHECK_FALSE(parse_algebraic_family("ALG-23").has_value());
  }

  TEST_CASE("every family holds on m, n in [0, 64]") {
    for (auto family : all_algebraic_families)
      for (std::int64_t m = 0; m <= 64; ++m)
        for (std::int64_t n = 0; n <= 64; ++n)
          if (parity_admits(parity_of(family), m, n))
            REQUIRE(check_algebraic_identity(family, m, n));
  }
}
