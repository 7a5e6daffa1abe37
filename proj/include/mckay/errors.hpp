#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Malformed or out-of-contract user input (bad weights, N = G, bound exceeded).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed to hold. This always indicates a bug in
// the library or an inconsistency between two independent computations.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mckay
