#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotsum {

// Domain or data error: invalid diagram, unknown knot name, bad table row.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in textual input; position is a byte offset into the text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace knotsum
