#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayleylab {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible element kinds or mismatched parameters (e.g. multiplying a
/// permutation by a matrix, or permutations of different degree).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured cap was exceeded (enumeration, power-set level, subgroup
/// machinery) or a constructor parameter is outside its supported range.
class LimitError : public Error {
public:
  using Error::Error;
};

/// Input text could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_ = 0;
};

/// Malformed input file (multiplication table, generator list).
class FormatError : public Error {
public:
  using Error::Error;
};

/// An operation's precondition does not hold (subgroup not normal, set does
/// not generate, group not abelian, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace cayleylab
