#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace opaque {

/// Malformed or degenerate user input. Carries the index of the offending
/// segment when there is one.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what,
                      std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), index_(index) {}

  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace opaque
