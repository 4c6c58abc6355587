#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "fibtan/angle.hpp"
#include "fibtan/parity.hpp"

namespace fibtan {

enum class IdentityId {
  // finite
  hr63_t5, hr64,
  l1_1, l1_2, l1_3, l1_4, l1_5, l1_6, l1_7, l1_8,
  e33,
  t1_a, t1_b, t1_c, t1_d,
  t2_a, t2_b,
  t3_a, t3_b, t3_c,
  // infinite
  i_e4, i_e6, i_e7,
  c1_a, c1_b, c1_c, c1_d,
  c2_a, c2_b,
  c3_a, c3_b, c3_c,
};

/// Which parameters an identity takes. For m_n the second parameter is a
/// single index n >= 1, not a summation bound.
enum class Arity { t_only, m_t, m_n, m_only, none };

enum class Kind { finite, infinite };

std::string_view to_string(Arity a);
std::string_view to_string(Kind k);

struct CatalogEntry {
  IdentityId id;
  std::string_view name;
  Arity arity;
  Parity parity;
  Kind kind;
  std::string_view description;
};

/// Every catalog entry in stable order.
std::span<const CatalogEntry> list_identities();

const CatalogEntry& catalog_entry(IdentityId id);
std::string_view name_of(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Throws parity_error if m violates the entry's constraint.
void require_parity(IdentityId id, std::int64_t m);

struct IdentityInstance {
  IdentityId id;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> n;
  AngleSum lhs;
  AngleSum rhs;
};

/// Both sides of a finite identity. `second` is t for summation identities
/// and the index n (>= 1) for the per-index ones; m is ignored by t-only
/// identities.
///
/// Throws unknown_identity_error for infinite ids, parity_error when m
/// violates the constraint, and domain_error for negative parameters or
/// n = 0.
IdentityInstance build_finite(IdentityId id, std::int64_t m,
                              std::int64_t second);

enum class Status { verified, falsified, inconclusive };

std::string_view to_string(Status s);

/// Outcome of an exact check of one finite instance.
struct FiniteReport {
  IdentityId id;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> n;
  Status status = Status::falsified;
  /// Reduced form of lhs - rhs; verified iff it is ((1, 0), 0).
  ReducedAngle witness;
  std::size_t terms = 0;
  CertifiedReal lhs_value;
  CertifiedReal rhs_value;
  double elapsed_ms = 0;
};

/// Exact decision of lhs == rhs for an arbitrary instance.
FiniteReport verify_instance(const IdentityInstance& instance);

/// build_finite followed by verify_instance.
FiniteReport verify_finite(IdentityId id, std::int64_t m, std::int64_t second);

/// n-th summand (n >= 1) of the infinite left-hand side, sign and factor
/// 2 folded into the coefficient.
class TermGenerator {
 public:
  TermGenerator(IdentityId id, std::int64_t m);

  ArctanTerm operator()(std::int64_t n) const;

  IdentityId id() const { return id_; }
  std::int64_t m() const { return m_; }
  /// Terms alternate in sign.
  bool alternating() const;
  /// Every argument is zero (m = 0 degenerate cases).
  bool degenerate() const;

 private:
  IdentityId id_;
  std::int64_t m_;
};

/// Throws unknown_identity_error for finite ids, parity_error on a parity
/// violation, domain_error for negative m.
TermGenerator term_generator(IdentityId id, std::int64_t m);

struct RationalAngles {
  AngleSum sum;
};
/// arctan(1/phi), phi the golden ratio.
struct GoldenArctan {};
/// pi/4.
struct PiQuarter {};

using ClosedForm = std::variant<RationalAngles, GoldenArctan, PiQuarter>;

/// Right-hand side of an infinite identity.
ClosedForm closed_form(IdentityId id, std::int64_t m);

}  // namespace fibtan
