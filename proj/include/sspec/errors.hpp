#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sspec {

/// Malformed or out-of-range input (bad graph6, invalid generator arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 decoding failure; carries the offending byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A configured size limit (vertices, faces, cycles) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity failed to verify, or modular computations disagreed.
/// Signals a logic bug or a false mathematical premise, never bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sspec
