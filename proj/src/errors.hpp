#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Bad user input: malformed text, violated preconditions, missing attributes.
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Computation refused because a configured resource cap would be exceeded.
class resource_limit_error : public std::runtime_error {
  public:
    explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ks
