#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algser {

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource cap (precision, dimension, states, branches, p^d) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A serialized document does not match the expected schema. The message
/// starts with the offending field path, e.g. "A[0]: ...".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The supplied initial coefficients are not consistent with the equation.
class DishonestInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug (or an input that slipped past
/// the honest-input gate), never a user error.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace algser
