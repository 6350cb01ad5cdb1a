#include "ppcp/util.hpp"

#include <stdexcept>

namespace ppcp {

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
    if (r > cap) return std::nullopt;
  }
  return r;
}

bool next_tuple(std::vector<int>& t, int radix) {
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (++*it < radix) return true;
    *it = 0;
  }
  return false;
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::size_t hash_range(std::span<const int> xs) {
  std::size_t h = 1469598103934665603ull;
  for (int x : xs) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace ppcp
