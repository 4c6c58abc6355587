#include "fibtan/catalog.hpp"

#include <array>
#include <chrono>
#include <string>

#include "fibtan/errors.hpp"
#include "fibtan/fib.hpp"

namespace fibtan {

namespace {

using I = IdentityId;
using A = Arity;
using P = Parity;
using K = Kind;

constexpr std::array<CatalogEntry, 32> catalog = {{
    {I::hr63_t5, "HR63-T5", A::t_only, P::none, K::finite,
     "sum_{n=1}^{t} (-1)^(n+1) atan(1/F(2n)) = atan(F(t)/F(t+1))"},
    {I::hr64, "HR64", A::t_only, P::none, K::finite,
     "2 sum_{n=1}^{t} atan(1/L(2n)) = sum_{n=1}^{t} atan(1/F(2n+1)) - "
     "atan(1/L(2t+2)) + atan(1/3)"},
    {I::l1_1, "L1-1", A::m_n, P::m_even, K::finite,
     "atan(F(2m)/F(2n+2m-1)) = atan(L(m)/L(2n+m-1)) - atan(L(m)/L(2n+3m-1))"},
    {I::l1_2, "L1-2", A::m_n, P::m_odd, K::finite,
     "atan(F(2m)/F(2n+2m-1)) = atan(L(m)/L(2n+m-1)) + atan(L(m)/L(2n+3m-1))"},
    {I::l1_3, "L1-3", A::m_n, P::m_odd, K::finite,
     "atan(F(2m)/F(2n+2m-1)) = atan(F(m)/F(2n+m-1)) - atan(F(m)/F(2n+3m-1))"},
    {I::l1_4, "L1-4", A::m_n, P::m_even, K::finite,
     "atan(F(2m)/F(2n+2m-1)) = atan(F(m)/F(2n+m-1)) + atan(F(m)/F(2n+3m-1))"},
    {I::l1_5, "L1-5", A::m_n, P::m_odd, K::finite,
     "atan(L(m)^2 L(2n+2m)/(5 F(2n+2m)^2)) = atan(L(m)/L(2n+m)) - "
     "atan(L(m)/L(2n+3m))"},
    {I::l1_6, "L1-6", A::m_n, P::m_even, K::finite,
     "atan(L(m)^2 L(2n+2m)/(5 F(2n+2m)^2)) = atan(L(m)/L(2n+m)) + "
     "atan(L(m)/L(2n+3m))"},
    {I::l1_7, "L1-7", A::m_n, P::m_even, K::finite,
     "atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = atan(F(m)/F(2n+m)) - "
     "atan(F(m)/F(2n+3m))"},
    {I::l1_8, "L1-8", A::m_n, P::m_odd, K::finite,
     "atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = atan(F(m)/F(2n+m)) + "
     "atan(F(m)/F(2n+3m))"},
    {I::e33, "E33", A::m_n, P::none, K::finite,
     "atan(2/L(2n-1)) = atan(L(m)/L(2n+m-1)) + atan(F(m)/F(2n+m-1))"},
    {I::t1_a, "T1-a", A::m_t, P::m_even, K::finite,
     "sum_{n=1}^{t} atan(F(2m)/F(2n+2m-1)) = sum_{n=1}^{m} atan(L(m)/L(2n+m-1)) "
     "- sum_{n=1}^{m} atan(L(m)/L(2n+2t+m-1))"},
    {I::t1_b, "T1-b", A::m_t, P::m_odd, K::finite,
     "sum_{n=1}^{t} atan(F(2m)/F(2n+2m-1)) = sum_{n=1}^{m} atan(F(m)/F(2n+m-1)) "
     "- sum_{n=1}^{m} atan(F(m)/F(2n+2t+m-1))"},
    {I::t1_c, "T1-c", A::m_t, P::m_odd, K::finite,
     "sum_{n=1}^{t} atan(L(m)^2 L(2n+2m)/(5 F(2n+2m)^2)) = sum_{n=1}^{m} "
     "atan(L(m)/L(2n+m)) - sum_{n=1}^{m} atan(L(m)/L(2n+2t+m))"},
    {I::t1_d, "T1-d", A::m_t, P::m_even, K::finite,
     "sum_{n=1}^{t} atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_{n=1}^{m} "
     "atan(F(m)/F(2n+m)) - sum_{n=1}^{m} atan(F(m)/F(2n+2t+m))"},
    {I::t2_a, "T2-a", A::m_t, P::none, K::finite,
     "sum_{n=1}^{t} (-1)^(n-1) atan(F(2m)/F(2n+2m-1)) = sum_{n=1}^{m} (-1)^(n-1) "
     "atan(L(m)/L(2n+m-1)) + (-1)^(t-1) sum_{n=1}^{m} (-1)^(n-1) "
     "atan(L(m)/L(2n+2t+m-1))"},
    {I::t2_b, "T2-b", A::m_t, P::none, K::finite,
     "sum_{n=1}^{t} (-1)^(n-1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_{n=1}^{m} "
     "(-1)^(n-1) atan(F(m)/F(2n+m)) + (-1)^(t-1) sum_{n=1}^{m} (-1)^(n-1) "
     "atan(F(m)/F(2n+2t+m))"},
    {I::t3_a, "T3-a", A::m_t, P::m_odd, K::finite,
     "2 sum_{n=1}^{t} atan(L(m)/L(2n+m-1)) = sum_{n=1}^{m} atan(2/L(2n-1)) - "
     "sum_{n=1}^{m} atan(F(m)/F(2n+2t+m-1)) - sum_{n=t+1}^{t+m} "
     "atan(L(m)/L(2n+m-1))"},
    {I::t3_b, "T3-b", A::m_t, P::m_even, K::finite,
     "2 sum_{n=1}^{t} atan(F(m)/F(2n+m-1)) = sum_{n=1}^{m} atan(2/L(2n-1)) - "
     "sum_{n=1}^{m} atan(L(m)/L(2n+2t+m-1)) - sum_{n=t+1}^{t+m} "
     "atan(F(m)/F(2n+m-1))"},
    {I::t3_c, "T3-c", A::m_t, P::none, K::finite,
     "2 sum_{n=1}^{t} (-1)^(n-1) atan(F(m)/F(2n+m-1)) = sum_{n=1}^{m} (-1)^(n-1) "
     "atan(2/L(2n-1)) + (-1)^(t-1) sum_{n=1}^{m} (-1)^(n-1) "
     "atan(L(m)/L(2n+2t+m-1)) - sum_{n=t+1}^{t+m} (-1)^(n-1) "
     "atan(F(m)/F(2n+m-1))"},
    {I::i_e4, "I-E4", A::none, P::none, K::infinite,
     "sum_{n>=1} (-1)^(n+1) atan(1/F(2n)) = atan(1/phi)"},
    {I::i_e6, "I-E6", A::none, P::none, K::infinite,
     "2 sum_{n>=1} atan(1/L(2n)) = atan(2)"},
    {I::i_e7, "I-E7", A::none, P::none, K::infinite,
     "sum_{n>=1} atan(1/F(2n+1)) = pi/4"},
    {I::c1_a, "C1-a", A::m_only, P::m_even, K::infinite,
     "sum_{n>=1} atan(F(2m)/F(2n+2m-1)) = sum_{n=1}^{m} atan(L(m)/L(2n+m-1))"},
    {I::c1_b, "C1-b", A::m_only, P::m_odd, K::infinite,
     "sum_{n>=1} atan(F(2m)/F(2n+2m-1)) = sum_{n=1}^{m} atan(F(m)/F(2n+m-1))"},
    {I::c1_c, "C1-c", A::m_only, P::m_odd, K::infinite,
     "sum_{n>=1} atan(L(m)^2 L(2n+2m)/(5 F(2n+2m)^2)) = sum_{n=1}^{m} "
     "atan(L(m)/L(2n+m))"},
    {I::c1_d, "C1-d", A::m_only, P::m_even, K::infinite,
     "sum_{n>=1} atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_{n=1}^{m} "
     "atan(F(m)/F(2n+m))"},
    {I::c2_a, "C2-a", A::m_only, P::none, K::infinite,
     "sum_{n>=1} (-1)^(n-1) atan(F(2m)/F(2n+2m-1)) = sum_{n=1}^{m} (-1)^(n-1) "
     "atan(L(m)/L(2n+m-1))"},
    {I::c2_b, "C2-b", A::m_only, P::none, K::infinite,
     "sum_{n>=1} (-1)^(n-1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_{n=1}^{m} "
     "(-1)^(n-1) atan(F(m)/F(2n+m))"},
    {I::c3_a, "C3-a", A::m_only, P::m_odd, K::infinite,
     "2 sum_{n>=1} atan(L(m)/L(2n+m-1)) = sum_{n=1}^{m} atan(2/L(2n-1))"},
    {I::c3_b, "C3-b", A::m_only, P::m_even, K::infinite,
     "2 sum_{n>=1} atan(F(m)/F(2n+m-1)) = sum_{n=1}^{m} atan(2/L(2n-1))"},
    {I::c3_c, "C3-c", A::m_only, P::none, K::infinite,
     "2 sum_{n>=1} (-1)^(n-1) atan(F(m)/F(2n+m-1)) = sum_{n=1}^{m} (-1)^(n-1) "
     "atan(2/L(2n-1))"},
}};

BigWhole F(std::int64_t k) { return fib(k); }
BigWhole L(std::int64_t k) { return lucas(k); }
BigWhole sq(const BigWhole& v) { return v * v; }

// (-1)^(n-1)
std::int64_t alt(std::int64_t n) { return (n % 2 != 0) ? 1 : -1; }

// Argument families shared by the finite and infinite identities.
Rational f2m_over_f(std::int64_t m, std::int64_t n) {
  return make_rational(F(2 * m), F(2 * n + 2 * m - 1));
}
Rational lucas_square_ratio(std::int64_t m, std::int64_t n) {
  return make_rational(sq(L(m)) * L(2 * n + 2 * m), 5 * sq(F(2 * n + 2 * m)));
}
Rational fib_square_ratio(std::int64_t m, std::int64_t n) {
  return make_rational(sq(F(m)) * L(2 * n + 2 * m), sq(F(2 * n + 2 * m)));
}
Rational lm_over_l(std::int64_t m, std::int64_t index) {
  return make_rational(L(m), L(index));
}
Rational fm_over_f(std::int64_t m, std::int64_t index) {
  return make_rational(F(m), F(index));
}
Rational two_over_l(std::int64_t n) { return make_rational(2, L(2 * n - 1)); }

void require_non_negative(std::int64_t v, const char* what) {
  if (v < 0) throw domain_error(std::string(what) + " must be non-negative");
}

AngleSum split_side(std::int64_t sign, Rational first, Rational second) {
  AngleSum s;
  s.add(1, std::move(first)).add(sign, std::move(second));
  return s;
}

}  // namespace

std::string_view to_string(Arity a) {
  switch (a) {
    case Arity::t_only: return "t";
    case Arity::m_t: return "m,t";
    case Arity::m_n: return "m,n";
    case Arity::m_only: return "m";
    case Arity::none: return "-";
  }
  return "?";
}

std::string_view to_string(Kind k) {
  return k == Kind::finite ? "finite" : "infinite";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::falsified: return "falsified";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

std::span<const CatalogEntry> list_identities() { return catalog; }

const CatalogEntry& catalog_entry(IdentityId id) {
  return catalog[static_cast<std::size_t>(id)];
}

std::string_view name_of(IdentityId id) { return catalog_entry(id).name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& e : catalog)
    if (e.name == name) return e.id;
  return std::nullopt;
}

void require_parity(IdentityId id, std::int64_t m) {
  const auto& e = catalog_entry(id);
  if (!parity_admits(e.parity, m, 0))
    throw parity_error(std::string(e.name) + " requires " +
                       std::string(to_string(e.parity)) + ", got m = " +
                       std::to_string(m));
}

IdentityInstance build_finite(IdentityId id, std::int64_t m,
                              std::int64_t second) {
  const auto& entry = catalog_entry(id);
  if (entry.kind != Kind::finite)
    throw unknown_identity_error(std::string(entry.name) +
                                 " is not a finite identity");
  IdentityInstance out{id, std::nullopt, std::nullopt, std::nullopt, {}, {}};
  AngleSum& lhs = out.lhs;
  AngleSum& rhs = out.rhs;

  if (entry.arity == Arity::t_only) {
    const auto t = second;
    require_non_negative(t, "t");
    out.t = t;
    if (id == I::hr63_t5) {
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(alt(n), 1, F(2 * n));
      rhs.add(1, F(t), F(t + 1));
    } else {
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(2, 1, L(2 * n));
      for (std::int64_t n = 1; n <= t; ++n) rhs.add(1, 1, F(2 * n + 1));
      rhs.add(-1, 1, L(2 * t + 2)).add(1, 1, 3);
    }
    return out;
  }

  require_non_negative(m, "m");
  require_parity(id, m);
  out.m = m;

  if (entry.arity == Arity::m_n) {
    const auto n = second;
    if (n < 1) throw domain_error("the index n must be at least 1");
    out.n = n;
    switch (id) {
      case I::l1_1:
      case I::l1_2:
        lhs.add(1, f2m_over_f(m, n));
        rhs = split_side(id == I::l1_1 ? -1 : 1, lm_over_l(m, 2 * n + m - 1),
                         lm_over_l(m, 2 * n + 3 * m - 1));
        break;
      case I::l1_3:
      case I::l1_4:
        lhs.add(1, f2m_over_f(m, n));
        rhs = split_side(id == I::l1_3 ? -1 : 1, fm_over_f(m, 2 * n + m - 1),
                         fm_over_f(m, 2 * n + 3 * m - 1));
        break;
      case I::l1_5:
      case I::l1_6:
        lhs.add(1, lucas_square_ratio(m, n));
        rhs = split_side(id == I::l1_5 ? -1 : 1, lm_over_l(m, 2 * n + m),
                         lm_over_l(m, 2 * n + 3 * m));
        break;
      case I::l1_7:
      case I::l1_8:
        lhs.add(1, fib_square_ratio(m, n));
        rhs = split_side(id == I::l1_7 ? -1 : 1, fm_over_f(m, 2 * n + m),
                         fm_over_f(m, 2 * n + 3 * m));
        break;
      default:  // E33
        lhs.add(1, two_over_l(n));
        rhs = split_side(1, lm_over_l(m, 2 * n + m - 1),
                         fm_over_f(m, 2 * n + m - 1));
        break;
    }
    return out;
  }

  const auto t = second;
  require_non_negative(t, "t");
  out.t = t;
  const std::int64_t tail_sign = alt(t);  // (-1)^(t-1)
  switch (id) {
    case I::t1_a:
    case I::t1_b:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(1, f2m_over_f(m, n));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(1, id == I::t1_a ? lm_over_l(m, 2 * n + m - 1)
                                 : fm_over_f(m, 2 * n + m - 1));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(-1, id == I::t1_a ? lm_over_l(m, 2 * n + 2 * t + m - 1)
                                  : fm_over_f(m, 2 * n + 2 * t + m - 1));
      break;
    case I::t1_c:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(1, lucas_square_ratio(m, n));
      for (std::int64_t n = 1; n <= m; ++n) rhs.add(1, lm_over_l(m, 2 * n + m));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(-1, lm_over_l(m, 2 * n + 2 * t + m));
      break;
    case I::t1_d:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(1, fib_square_ratio(m, n));
      for (std::int64_t n = 1; n <= m; ++n) rhs.add(1, fm_over_f(m, 2 * n + m));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(-1, fm_over_f(m, 2 * n + 2 * t + m));
      break;
    case I::t2_a:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(alt(n), f2m_over_f(m, n));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(alt(n), lm_over_l(m, 2 * n + m - 1));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(tail_sign * alt(n), lm_over_l(m, 2 * n + 2 * t + m - 1));
      break;
    case I::t2_b:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(alt(n), fib_square_ratio(m, n));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(alt(n), fm_over_f(m, 2 * n + m));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(tail_sign * alt(n), fm_over_f(m, 2 * n + 2 * t + m));
      break;
    case I::t3_a:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(2, lm_over_l(m, 2 * n + m - 1));
      for (std::int64_t n = 1; n <= m; ++n) rhs.add(1, two_over_l(n));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(-1, fm_over_f(m, 2 * n + 2 * t + m - 1));
      for (std::int64_t n = t + 1; n <= t + m; ++n)
        rhs.add(-1, lm_over_l(m, 2 * n + m - 1));
      break;
    case I::t3_b:
      for (std::int64_t n = 1; n <= t; ++n) lhs.add(2, fm_over_f(m, 2 * n + m - 1));
      for (std::int64_t n = 1; n <= m; ++n) rhs.add(1, two_over_l(n));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(-1, lm_over_l(m, 2 * n + 2 * t + m - 1));
      for (std::int64_t n = t + 1; n <= t + m; ++n)
        rhs.add(-1, fm_over_f(m, 2 * n + m - 1));
      break;
    default:  // T3-c, one builder for both parities of m
      for (std::int64_t n = 1; n <= t; ++n)
        lhs.add(2 * alt(n), fm_over_f(m, 2 * n + m - 1));
      for (std::int64_t n = 1; n <= m; ++n) rhs.add(alt(n), two_over_l(n));
      for (std::int64_t n = 1; n <= m; ++n)
        rhs.add(tail_sign * alt(n), lm_over_l(m, 2 * n + 2 * t + m - 1));
      for (std::int64_t n = t + 1; n <= t + m; ++n)
        rhs.add(-alt(n), fm_over_f(m, 2 * n + m - 1));
      break;
  }
  return out;
}

FiniteReport verify_instance(const IdentityInstance& instance) {
  const auto start = std::chrono::steady_clock::now();
  FiniteReport report;
  report.id = instance.id;
  report.m = instance.m;
  report.t = instance.t;
  report.n = instance.n;
  AngleSum diff = instance.lhs;
  diff.append(instance.rhs.negated());
  report.terms = diff.size();
  report.witness = reduce(diff);
  report.status = report.witness == ReducedAngle{GaussianInt{1, 0}, 0}
                      ? Status::verified
                      : Status::falsified;
  report.lhs_value = certified_value(instance.lhs, 64);
  report.rhs_value = certified_value(instance.rhs, 64);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

FiniteReport verify_finite(IdentityId id, std::int64_t m, std::int64_t second) {
  return verify_instance(build_finite(id, m, second));
}

TermGenerator::TermGenerator(IdentityId id, std::int64_t m) : id_(id), m_(m) {
  const auto& entry = catalog_entry(id);
  if (entry.kind != Kind::infinite)
    throw unknown_identity_error(std::string(entry.name) +
                                 " is not an infinite identity");
  if (entry.arity == Arity::none) {
    m_ = 0;
    return;
  }
  require_non_negative(m, "m");
  require_parity(id, m);
}

bool TermGenerator::alternating() const {
  return id_ == I::i_e4 || id_ == I::c2_a || id_ == I::c2_b || id_ == I::c3_c;
}

bool TermGenerator::degenerate() const {
  return catalog_entry(id_).arity == Arity::m_only && m_ == 0;
}

ArctanTerm TermGenerator::operator()(std::int64_t n) const {
  if (n < 1) throw domain_error("summation index starts at 1");
  const auto m = m_;
  switch (id_) {
    case I::i_e4: return {alt(n), make_rational(1, F(2 * n))};
    case I::i_e6: return {2, make_rational(1, L(2 * n))};
    case I::i_e7: return {1, make_rational(1, F(2 * n + 1))};
    case I::c1_a:
    case I::c1_b: return {1, f2m_over_f(m, n)};
    case I::c1_c: return {1, lucas_square_ratio(m, n)};
    case I::c1_d: return {1, fib_square_ratio(m, n)};
    case I::c2_a: return {alt(n), f2m_over_f(m, n)};
    case I::c2_b: return {alt(n), fib_square_ratio(m, n)};
    case I::c3_a: return {2, lm_over_l(m, 2 * n + m - 1)};
    case I::c3_b: return {2, fm_over_f(m, 2 * n + m - 1)};
    case I::c3_c: return {2 * alt(n), fm_over_f(m, 2 * n + m - 1)};
    default: break;
  }
  throw unknown_identity_error("not an infinite identity");
}

TermGenerator term_generator(IdentityId id, std::int64_t m) {
  return TermGenerator(id, m);
}

ClosedForm closed_form(IdentityId id, std::int64_t m) {
  const TermGenerator checked(id, m);  // validates kind, parity, sign
  m = checked.m();
  AngleSum s;
  switch (id) {
    case I::i_e4: return GoldenArctan{};
    case I::i_e7: return PiQuarter{};
    case I::i_e6: s.add(1, 2, 1); break;
    case I::c1_a:
      for (std::int64_t n = 1; n <= m; ++n) s.add(1, lm_over_l(m, 2 * n + m - 1));
      break;
    case I::c1_b:
      for (std::int64_t n = 1; n <= m; ++n) s.add(1, fm_over_f(m, 2 * n + m - 1));
      break;
    case I::c1_c:
      for (std::int64_t n = 1; n <= m; ++n) s.add(1, lm_over_l(m, 2 * n + m));
      break;
    case I::c1_d:
      for (std::int64_t n = 1; n <= m; ++n) s.add(1, fm_over_f(m, 2 * n + m));
      break;
    case I::c2_a:
      for (std::int64_t n = 1; n <= m; ++n)
        s.add(alt(n), lm_over_l(m, 2 * n + m - 1));
      break;
    case I::c2_b:
      for (std::int64_t n = 1; n <= m; ++n) s.add(alt(n), fm_over_f(m, 2 * n + m));
      break;
    case I::c3_a:
    case I::c3_b:
      for (std::int64_t n = 1; n <= m; ++n) s.add(1, two_over_l(n));
      break;
    case I::c3_c:
      for (std::int64_t n = 1; n <= m; ++n) s.add(alt(n), two_over_l(n));
      break;
    default: break;
  }
  return RationalAngles{std::move(s)};
}

}  // namespace fibtan
