#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cascades {

/// An operation was called outside its documented domain (constant input
/// where a degree >= 1 polynomial is required, lo >= hi, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Newton iteration hit p'(x) = 0 with no bracket to fall back on.
class DerivativeVanished : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or rational text; `position` is a 0-based offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cascades
