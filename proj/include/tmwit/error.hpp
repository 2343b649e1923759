#pragma once

#include <stdexcept>
#include <string>

namespace tmwit {

// Caller passed an argument outside the documented domain (k = 0, base < 2,
// slice wider than the word, even k where odd is required, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A base-b query with gcd(b - 1, r) != 1, or otherwise malformed.
class invalid_query_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// word_shape was asked for a case that has no closed-form product word.
class unsupported_case_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A (case, params) pair that does not belong to the given k.
class internal_consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a computation contradicts f(k) <= k + 4 or the equality
// characterization. Never expected to fire; if it does, it is a finding.
class theorem_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tmwit
