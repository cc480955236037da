#pragma once

#include <stdexcept>
#include <string>

namespace wrm {

// Violation of a mathematical precondition (rv = 0, y + xz = 0, y = -1,
// mismatched boundary terms, ...). The CLI maps this to exit code 2.
class hypothesis_error : public std::domain_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::domain_error(what) {}
};

// Malformed user input (rational literals, sequence specs, flag grammar).
// The CLI maps this to exit code 1.
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wrm
