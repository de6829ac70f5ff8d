#pragma once

#include <stdexcept>
#include <string>

namespace oldset {

/// Malformed or out-of-contract input (bad file, bad index, wrong clause size).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The exact solver ran out of its node budget before proving optimality.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oldset
