#pragma once

#include <stdexcept>
#include <string>

namespace oddgroup {

// Raised when caller-supplied data violates a documented precondition.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails; indicates a bug, not bad input.
class InternalCheckFailure : public std::runtime_error {
 public:
  explicit InternalCheckFailure(const std::string& what) : std::runtime_error(what) {}
};

class NotInvertible : public std::runtime_error {
 public:
  explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oddgroup
