#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdp {

// Malformed textual input. `position` is a byte offset for graph6 strings
// and a 1-based line number for edge-list files; the message says which.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input is well formed but too large for the requested computation.
class CapacityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tdp
