#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scminor {

/// Vertex label or vertex set outside the graph's range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input outside the domain an operation is defined on (wrong n mod 4, bad cycle, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matching edges that are not host edges or that share an endpoint.
class InvalidMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested odd shift does not give a host edge from the generator.
class InvalidShift : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Size cap of an operation exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when a supposedly verified antimorphism turns out to be inconsistent.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The constructed minor model failed verification. Firing means a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  /// Byte offset into the input line where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace scminor
