#pragma once

#include <cstdint>
#include <string_view>

namespace fibtan {

/// Parity constraint on one of an identity's integer parameters.
enum class Parity { none, m_odd, m_even, n_odd, n_even };

std::string_view to_string(Parity p);

bool parity_admits(Parity p, std::int64_t m, std::int64_t n);

}  // namespace fibtan
