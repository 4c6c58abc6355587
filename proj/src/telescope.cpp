#include "fibtan/telescope.hpp"

#include "fibtan/errors.hpp"

namespace fibtan {

namespace {

void require_length(const RationalSequence& x, std::int64_t a,
                    std::int64_t b) {
  if (a < 0 || b < 0) throw domain_error("negative telescoping parameter");
  if (x.size() < a + b)
    throw domain_error("sequence too short for telescoping parameters");
}

// (-1)^(n-1)
int alt(std::int64_t n) { return (n % 2 != 0) ? 1 : -1; }

// sum_{n=first}^{last} sign(n) * X_n
template <typename Sign>
Rational partial(const RationalSequence& x, std::int64_t first,
                 std::int64_t last, Sign sign) {
  Rational s = 0;
  for (std::int64_t n = first; n <= last; ++n) s += sign(n) * x[n];
  return s;
}

int plus(std::int64_t) { return 1; }

}  // namespace

SidePair telescope_diff(const RationalSequence& x, std::int64_t k,
                        std::int64_t m) {
  require_length(x, k, m);
  Rational lhs = 0;
  for (std::int64_t n = 1; n <= k; ++n) lhs += x[n] - x[n + m];
  Rational rhs = 0;
  for (std::int64_t n = 1; n <= m; ++n) rhs += x[n] - x[n + k];
  return {lhs, rhs};
}

SidePair telescope_alt(const RationalSequence& x, std::int64_t k,
                       std::int64_t m) {
  require_length(x, k, m);
  const int shift_sign = (m % 2 == 0) ? -1 : 1;
  Rational lhs = 0;
  for (std::int64_t n = 1; n <= k; ++n)
    lhs += alt(n) * (x[n] + shift_sign * x[n + m]);
  Rational tail = 0;
  for (std::int64_t n = 1; n <= m; ++n) tail += alt(n) * x[n + k];
  Rational rhs = partial(x, 1, m, alt) + alt(k) * tail;
  return {lhs, rhs};
}

SidePair double_shift(const RationalSequence& x, std::int64_t t,
                      std::int64_t m) {
  require_length(x, t, m);
  Rational lhs = 2 * partial(x, 1, t, plus);
  Rational paired = 0;
  for (std::int64_t n = 1; n <= t; ++n) paired += x[n] + x[n + m];
  Rational rhs = paired + partial(x, 1, m, plus) - partial(x, t + 1, t + m, plus);
  return {lhs, rhs};
}

SidePair double_shift_alt(const RationalSequence& x, std::int64_t t,
                          std::int64_t m) {
  require_length(x, t, m);
  const int shift_sign = (m % 2 != 0) ? -1 : 1;
  Rational lhs = 2 * partial(x, 1, t, alt);
  Rational paired = 0;
  for (std::int64_t n = 1; n <= t; ++n)
    paired += alt(n) * (x[n] + shift_sign * x[n + m]);
  Rational rhs = paired + partial(x, 1, m, alt) - partial(x, t + 1, t + m, alt);
  return {lhs, rhs};
}

}  // namespace fibtan
