#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodkit {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable source/sink. byte_offset() is the number of
// bytes successfully consumed before the failure (0 when opening failed).
class IoError : public Error {
public:
  IoError(const std::string& msg, std::uint64_t byte_offset = 0)
      : Error(msg), byte_offset_(byte_offset) {}
  std::uint64_t byte_offset() const noexcept { return byte_offset_; }

private:
  std::uint64_t byte_offset_;
};

// Malformed content in a structured file (index TSV, inventory, priors,
// fixture CSV). line() is 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// A documented precondition was violated by the caller.
class ContractViolation : public Error {
public:
  using Error::Error;
};

// Input is structurally valid but statistically degenerate (constant
// vector for a correlation, tied distribution for contrasts).
class DegenerateInput : public Error {
public:
  using Error::Error;
};

// The index has fewer eligible word types than the requested sample size.
class SampleExhausted : public Error {
public:
  SampleExhausted(const std::string& msg, std::size_t available,
                  std::size_t requested)
      : Error(msg), available_(available), requested_(requested) {}
  std::size_t available() const noexcept { return available_; }
  std::size_t requested() const noexcept { return requested_; }

private:
  std::size_t available_;
  std::size_t requested_;
};

}  // namespace prodkit
