#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fibtan/parity.hpp"

namespace fibtan {

/// The fourteen product/sum relations between Fibonacci and Lucas numbers
/// that the arctangent identities are built from.
enum class AlgebraicFamily {
  alg09,  // F(2m) = F(m) L(m)
  alg10,  // F(n) L(m) + L(n) F(m) = 2 F(m+n)
  alg11,  // F(n+2m) - F(n) = L(m) F(n+m), m odd
  alg12,  // F(n+2m) - F(n) = F(m) L(n+m), m even
  alg13,  // F(n+2m) + F(n) = F(m) L(n+m), m odd
  alg14,  // F(n+2m) + F(n) = L(m) F(n+m), m even
  alg15,  // L(n+2m) - L(n) = L(m) L(n+m), m odd
  alg16,  // L(n+2m) - L(n) = 5 F(m) F(n+m), m even
  alg17,  // L(n+2m) + L(n) = 5 F(m) F(n+m), m odd
  alg18,  // L(n+2m) + L(n) = L(m) L(n+m), m even
  alg19,  // F(n) F(n+2m) = F(n+m)^2 + F(m)^2, n odd
  alg20,  // F(n) F(n+2m) = F(n+m)^2 - F(m)^2, n even
  alg21,  // L(n) L(n+2m) = 5 F(n+m)^2 - L(m)^2, n odd
  alg22,  // L(n) L(n+2m) = 5 F(n+m)^2 + L(m)^2, n even
};

inline constexpr std::array<AlgebraicFamily, 14> all_algebraic_families = {
    AlgebraicFamily::alg09, AlgebraicFamily::alg10, AlgebraicFamily::alg11,
    AlgebraicFamily::alg12, AlgebraicFamily::alg13, AlgebraicFamily::alg14,
    AlgebraicFamily::alg15, AlgebraicFamily::alg16, AlgebraicFamily::alg17,
    AlgebraicFamily::alg18, AlgebraicFamily::alg19, AlgebraicFamily::alg20,
    AlgebraicFamily::alg21, AlgebraicFamily::alg22};

Parity parity_of(AlgebraicFamily family);

/// "ALG-09" ... "ALG-22".
std::string_view name_of(AlgebraicFamily family);
std::optional<AlgebraicFamily> parse_algebraic_family(std::string_view name);

/// Human-readable statement of the relation.
std::string_view formula_of(AlgebraicFamily family);

/// Evaluates both sides exactly. Throws parity_error when (m, n) violates
/// the family's constraint and domain_error for negative arguments.
bool check_algebraic_identity(AlgebraicFamily family, std::int64_t m,
                              std::int64_t n);

}  // namespace fibtan
