#pragma once

#include <stdexcept>
#include <string>

namespace consec {

// Malformed input or violated precondition. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration cap or scale guard was exceeded. Maps to exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace consec
