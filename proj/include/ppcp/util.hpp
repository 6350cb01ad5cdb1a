#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ppcp {

// base^exp, or nullopt as soon as the value exceeds cap.
std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp, std::size_t cap);

// Advances t through {0..radix-1}^n in lexicographic order (t[0] most
// significant). Returns false once t has wrapped back to all zeros.
bool next_tuple(std::vector<int>& t, int radix);

long long factorial(int n); // n <= 20

std::size_t hash_range(std::span<const int> xs);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const { return hash_range(v); }
};

} // namespace ppcp
