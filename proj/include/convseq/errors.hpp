#pragma once

#include <stdexcept>
#include <string>

namespace convseq {

/// Raised when an input file does not conform to its declared format.
/// The message names the offending line where one is known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on violated preconditions (dimension mismatches, bad ranges).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on filesystem failures (unreadable or unwritable paths).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace convseq
