#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tss {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle notation, group files, shorthand labels).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// A size cap (group order, enumeration degree, table size) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidElement : public Error {
 public:
  using Error::Error;
};

}  // namespace tss
