#pragma once

#include <stdexcept>
#include <string>

namespace fibtan {

/// A parameter violates the parity constraint attached to an identity or
/// algebraic family. This is a caller error, never an identity failure.
class parity_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown identity or family name.
class unknown_identity_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero denominators, poles of the tangent addition formula, out-of-range
/// parameters and too-short sequences.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Branch isolation ran past the precision cap. Exact inputs always isolate,
/// so this indicates a bug.
class precision_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fibtan
