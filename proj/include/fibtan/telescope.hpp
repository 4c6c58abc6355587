#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibtan/angle.hpp"

namespace fibtan {

/// Finite sequence X_1 ... X_len, indexed from 1.
class RationalSequence {
 public:
  RationalSequence() = default;
  explicit RationalSequence(std::vector<Rational> values)
      : values_(std::move(values)) {}

  /// X_i for 1 <= i <= size().
  const Rational& operator[](std::int64_t i) const {
    return values_[static_cast<std::size_t>(i - 1)];
  }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

 private:
  std::vector<Rational> values_;
};

/// Both sides of a telescoping identity, evaluated exactly.
using SidePair = std::pair<Rational, Rational>;

/// sum_{n=1}^{k} (X_n - X_{n+m})  vs  sum_{n=1}^{m} (X_n - X_{n+k}).
SidePair telescope_diff(const RationalSequence& x, std::int64_t k,
                        std::int64_t m);

/// sum_{n=1}^{k} (-1)^(n-1) (X_n -/+ X_{n+m}), minus for even m and plus
/// for odd m, vs
/// sum_{n=1}^{m} (-1)^(n-1) X_n + (-1)^(k-1) sum_{n=1}^{m} (-1)^(n-1) X_{n+k}.
SidePair telescope_alt(const RationalSequence& x, std::int64_t k,
                       std::int64_t m);

/// 2 sum_{n=1}^{t} X_n  vs
/// sum_{n=1}^{t} (X_n + X_{n+m}) + sum_{n=1}^{m} X_n - sum_{n=t+1}^{t+m} X_n.
SidePair double_shift(const RationalSequence& x, std::int64_t t,
                      std::int64_t m);

/// Alternating doubling: 2 sum_{n=1}^{t} (-1)^(n-1) X_n  vs
/// sum_{n=1}^{t} (-1)^(n-1) (X_n -/+ X_{n+m}) + sum_{n=1}^{m} (-1)^(n-1) X_n
///   - sum_{n=t+1}^{t+m} (-1)^(n-1) X_n,
/// with the difference for odd m and the sum for even m.
SidePair double_shift_alt(const RationalSequence& x, std::int64_t t,
                          std::int64_t m);

}  // namespace fibtan
