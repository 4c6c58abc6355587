#pragma once

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fibtan {

using BigWhole = mpz_class;

enum class CachePolicy { enabled, disabled };

/// Fibonacci and Lucas values for any integer index.
///
/// Non-negative indices below the contiguous frontier are served from the
/// cache; indices a short distance past it extend the cache linearly, and
/// anything further out is computed by index doubling and memoized
/// sparsely. Negative indices go through the reflection rules
/// F(-n) = (-1)^(n-1) F(n) and L(-n) = (-1)^n L(n).
///
/// Thread-safe: concurrent readers and writers share one instance.
class SequenceCache {
 public:
  explicit SequenceCache(CachePolicy policy = CachePolicy::enabled);

  BigWhole fib(std::int64_t n) const;
  BigWhole lucas(std::int64_t n) const;

  /// Largest index n such that every index in [0, n] is cached, or -1.
  std::int64_t contiguous_limit() const;

  void clear();

  /// Distance past the contiguous frontier that is still filled linearly.
  static constexpr std::int64_t linear_reach = 256;

 private:
  struct Pair {
    BigWhole f;
    BigWhole l;
  };

  Pair non_negative(std::uint64_t n) const;

  CachePolicy policy_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<BigWhole> fib_;
  mutable std::vector<BigWhole> lucas_;
  mutable std::unordered_map<std::uint64_t, Pair> sparse_;
};

/// (F(n), F(n+1)) by index doubling, no caching.
std::pair<BigWhole, BigWhole> fib_pair_doubling(std::uint64_t n);

/// Process-wide cache used by the free functions below.
SequenceCache& default_cache();

inline BigWhole fib(std::int64_t n) { return default_cache().fib(n); }
inline BigWhole lucas(std::int64_t n) { return default_cache().lucas(n); }

}  // namespace fibtan
