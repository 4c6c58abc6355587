#include "fibtan/fib.hpp"

#include <mutex>

namespace fibtan {

std::pair<BigWhole, BigWhole> fib_pair_doubling(std::uint64_t n) {
  BigWhole a = 0;  // F(k)
  BigWhole b = 1;  // F(k+1)
  int top = 63;
  while (top >= 0 && ((n >> top) & 1U) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    // F(2k) = F(k) (2 F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2
    BigWhole even = a * (2 * b - a);
    BigWhole odd = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = odd;
      b = even + odd;
    } else {
      a = std::move(even);
      b = std::move(odd);
    }
  }
  return {a, b};
}

SequenceCache::SequenceCache(CachePolicy policy) : policy_(policy) {}

std::int64_t SequenceCache::contiguous_limit() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(fib_.size()) - 1;
}

void SequenceCache::clear() {
  std::unique_lock lock(mutex_);
  fib_.clear();
  lucas_.clear();
  sparse_.clear();
}

SequenceCache::Pair SequenceCache::non_negative(std::uint64_t n) const {
  auto direct = [n] {
    auto [f, f1] = fib_pair_doubling(n);
    BigWhole l = 2 * f1 - f;  // L(n) = 2 F(n+1) - F(n)
    return Pair{std::move(f), std::move(l)};
  };
  if (policy_ == CachePolicy::disabled) return direct();

  {
    std::shared_lock lock(mutex_);
    if (n < fib_.size()) return {fib_[n], lucas_[n]};
    if (auto it = sparse_.find(n); it != sparse_.end()) return it->second;
  }

  std::unique_lock lock(mutex_);
  if (n < fib_.size()) return {fib_[n], lucas_[n]};
  if (n < fib_.size() + static_cast<std::uint64_t>(linear_reach)) {
    if (fib_.empty()) {
      fib_ = {0, 1};
      lucas_ = {2, 1};
    }
    while (fib_.size() <= n) {
      const auto k = fib_.size();
      fib_.push_back(fib_[k - 1] + fib_[k - 2]);
      lucas_.push_back(lucas_[k - 1] + lucas_[k - 2]);
    }
    return {fib_[n], lucas_[n]};
  }
  if (auto it = sparse_.find(n); it != sparse_.end()) return it->second;
  return sparse_.emplace(n, direct()).first->second;
}

BigWhole SequenceCache::fib(std::int64_t n) const {
  if (n >= 0) return non_negative(static_cast<std::uint64_t>(n)).f;
  const auto k = static_cast<std::uint64_t>(-(n + 1)) + 1;
  BigWhole v = non_negative(k).f;
  if (k % 2 == 0) v = -v;  // (-1)^(k-1)
  return v;
}

BigWhole SequenceCache::lucas(std::int64_t n) const {
  if (n >= 0) return non_negative(static_cast<std::uint64_t>(n)).l;
  const auto k = static_cast<std::uint64_t>(-(n + 1)) + 1;
  BigWhole v = non_negative(k).l;
  if (k % 2 == 1) v = -v;  // (-1)^k
  return v;
}

SequenceCache& default_cache() {
  static SequenceCache cache;
  return cache;
}

}  // namespace fibtan
