#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccs {

/// A configured size bound (closure size, subgroup enumeration, automorphism
/// count) was exceeded.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its mathematical domain (non-normal
/// subgroup passed to a quotient, non-prime-power order, invalid parameters).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A CCS group matched none of the classification clauses.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed group-spec text; offset is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ccs
