#include "fibtan/algebraic.hpp"

#include <string>

#include "fibtan/errors.hpp"
#include "fibtan/fib.hpp"

namespace fibtan {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::none: return "none";
    case Parity::m_odd: return "m odd";
    case Parity::m_even: return "m even";
    case Parity::n_odd: return "n odd";
    case Parity::n_even: return "n even";
  }
  return "?";
}

bool parity_admits(Parity p, std::int64_t m, std::int64_t n) {
  switch (p) {
    case Parity::none: return true;
    case Parity::m_odd: return m % 2 != 0;
    case Parity::m_even: return m % 2 == 0;
    case Parity::n_odd: return n % 2 != 0;
    case Parity::n_even: return n % 2 == 0;
  }
  return false;
}

namespace {

struct FamilyInfo {
  std::string_view name;
  Parity parity;
  std::string_view formula;
};

constexpr FamilyInfo family_table[] = {
    {"ALG-09", Parity::none, "F(2m) = F(m) L(m)"},
    {"ALG-10", Parity::none, "F(n) L(m) + L(n) F(m) = 2 F(m+n)"},
    {"ALG-11", Parity::m_odd, "F(n+2m) - F(n) = L(m) F(n+m)"},
    {"ALG-12", Parity::m_even, "F(n+2m) - F(n) = F(m) L(n+m)"},
    {"ALG-13", Parity::m_odd, "F(n+2m) + F(n) = F(m) L(n+m)"},
    {"ALG-14", Parity::m_even, "F(n+2m) + F(n) = L(m) F(n+m)"},
    {"ALG-15", Parity::m_odd, "L(n+2m) - L(n) = L(m) L(n+m)"},
    {"ALG-16", Parity::m_even, "L(n+2m) - L(n) = 5 F(m) F(n+m)"},
    {"ALG-17", Parity::m_odd, "L(n+2m) + L(n) = 5 F(m) F(n+m)"},
    {"ALG-18", Parity::m_even, "L(n+2m) + L(n) = L(m) L(n+m)"},
    {"ALG-19", Parity::n_odd, "F(n) F(n+2m) = F(n+m)^2 + F(m)^2"},
    {"ALG-20", Parity::n_even, "F(n) F(n+2m) = F(n+m)^2 - F(m)^2"},
    {"ALG-21", Parity::n_odd, "L(n) L(n+2m) = 5 F(n+m)^2 - L(m)^2"},
    {"ALG-22", Parity::n_even, "L(n) L(n+2m) = 5 F(n+m)^2 + L(m)^2"},
};

const FamilyInfo& info(AlgebraicFamily family) {
  return family_table[static_cast<int>(family)];
}

}  // namespace

Parity parity_of(AlgebraicFamily family) { return info(family).parity; }
std::string_view name_of(AlgebraicFamily family) { return info(family).name; }
std::string_view formula_of(AlgebraicFamily family) {
  return info(family).formula;
}

std::optional<AlgebraicFamily> parse_algebraic_family(std::string_view name) {
  for (auto family : all_algebraic_families)
    if (name_of(family) == name) return family;
  return std::nullopt;
}

bool check_algebraic_identity(AlgebraicFamily family, std::int64_t m,
                              std::int64_t n) {
  if (m < 0 || n < 0)
    throw domain_error("algebraic identities take non-negative m and n");
  if (!parity_admits(parity_of(family), m, n))
    throw parity_error(std::string(name_of(family)) + " requires " +
                       std::string(to_string(parity_of(family))));

  auto F = [](std::int64_t k) { return fib(k); };
  auto L = [](std::int64_t k) { return lucas(k); };
  auto sq = [](const BigWhole& v) -> BigWhole { return v * v; };

  switch (family) {
    case AlgebraicFamily::alg09: return F(2 * m) == F(m) * L(m);
    case AlgebraicFamily::alg10:
      return F(n) * L(m) + L(n) * F(m) == 2 * F(m + n);
    case AlgebraicFamily::alg11:
      return F(n + 2 * m) - F(n) == L(m) * F(n + m);
    case AlgebraicFamily::alg12:
      return F(n + 2 * m) - F(n) == F(m) * L(n + m);
    case AlgebraicFamily::alg13:
      return F(n + 2 * m) + F(n) == F(m) * L(n + m);
    case AlgebraicFamily::alg14:
      return F(n + 2 * m) + F(n) == L(m) * F(n + m);
    case AlgebraicFamily::alg15:
      return L(n + 2 * m) - L(n) == L(m) * L(n + m);
    case AlgebraicFamily::alg16:
      return L(n + 2 * m) - L(n) == 5 * F(m) * F(n + m);
    case AlgebraicFamily::alg17:
      return L(n + 2 * m) + L(n) == 5 * F(m) * F(n + m);
    case AlgebraicFamily::alg18:
      return L(n + 2 * m) + L(n) == L(m) * L(n + m);
    case AlgebraicFamily::alg19:
      return F(n) * F(n + 2 * m) == sq(F(n + m)) + sq(F(m));
    case AlgebraicFamily::alg20:
      return F(n) * F(n + 2 * m) == sq(F(n + m)) - sq(F(m));
    case AlgebraicFamily::alg21:
      return L(n) * L(n + 2 * m) == 5 * sq(F(n + m)) - sq(L(m));
    case AlgebraicFamily::alg22:
      return L(n) * L(n + 2 * m) == 5 * sq(F(n + m)) + sq(L(m));
  }
  return false;
}

}  // namespace fibtan
