#pragma once

#include <stdexcept>
#include <string>

namespace mrigid {

/// Malformed or out-of-range input (bad vertex label, bad degree, bad file).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but violates an operation's precondition.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A configured work bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mrigid
