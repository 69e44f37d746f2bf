#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperdet {

// Resource limits for the enumeration- and memory-hungry evaluation paths.
// A zero thread count means "use all available cores".
struct EvalBudget {
  std::uint64_t max_products = 100'000'000;            // signed products (oracle, expansion)
  std::uint64_t max_state_bytes = std::uint64_t{2} << 30;  // accumulator state (wedge, sparse poly)
  unsigned threads = 1;
};

// Thrown when a computation would exceed its EvalBudget. Callers can retry
// with a larger budget; the input itself is valid.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperdet
