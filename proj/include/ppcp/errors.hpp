#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppcp {

// Thrown when an enumeration or search exceeds its configured cap.
// Deliberately a different outcome from any mathematical "no" answer:
// running out of budget must never be reported as a negative result.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

} // namespace ppcp
