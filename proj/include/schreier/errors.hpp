#pragma once

#include <stdexcept>
#include <string>

namespace schreier {

// Input violates an operation's precondition (bad literal, wrong p, mismatched lengths).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but larger than a configured exhaustive-search bound.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An exhaustive search that is guaranteed to succeed came back empty.
class SearchExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schreier
