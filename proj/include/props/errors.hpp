#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace props {

/// Base class of every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A block structure fails to cover its ground set, or covers an element twice.
struct CoverageError : Error {
  using Error::Error;
};

/// An index lies outside the expected range, or an index list is not increasing.
struct RangeError : Error {
  using Error::Error;
};

/// Two objects that must agree in size do not.
struct SizeMismatch : Error {
  using Error::Error;
};

/// An enumeration request exceeds the documented cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// A term mentions a generator absent from the signature (or model).
struct UnknownGenerator : Error {
  using Error::Error;
};

/// Types fail to line up: sequential composition, equation sides, model arrows.
struct TypeMismatch : Error {
  using Error::Error;
};

struct UnknownTheory : Error {
  using Error::Error;
};

/// Requested the 0 -> 0 spider, which does not exist.
struct DegenerateSpider : Error {
  using Error::Error;
};

/// Parse failure; carries the 1-based source position.
struct SyntaxError : Error {
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

}  // namespace props
