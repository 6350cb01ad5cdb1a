#include "ppcp/operation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppcp/errors.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

FiniteOperation::FiniteOperation(int domain_size, int arity, std::vector<int> table)
    : domain_size_(domain_size), arity_(arity), table_(std::move(table)) {
  if (domain_size_ < 1 || arity_ < 1) throw std::invalid_argument("FiniteOperation: bad signature");
  auto size = checked_pow(domain_size_, arity_, 1ull << 40);
  if (!size || table_.size() != *size)
    throw std::invalid_argument("FiniteOperation: table size does not match signature");
  for (int v : table_)
    if (v < 0 || v >= domain_size_) throw std::invalid_argument("FiniteOperation: value out of domain");
}

FiniteOperation FiniteOperation::from_function(int domain_size, int arity,
                                               const std::function<int(std::span<const int>)>& f) {
  auto size = checked_pow(domain_size, arity, 1ull << 30);
  if (!size) throw BudgetError("operation table too large to materialize", 1ull << 30);
  std::vector<int> table;
  table.reserve(*size);
  std::vector<int> args(arity, 0);
  do {
    table.push_back(f(args));
  } while (next_tuple(args, domain_size));
  return FiniteOperation(domain_size, arity, std::move(table));
}

FiniteOperation FiniteOperation::minority(int domain_size) {
  return from_function(domain_size, 3, [](std::span<const int> a) {
    if (a[0] == a[1]) return a[2];
    if (a[0] == a[2]) return a[1];
    if (a[1] == a[2]) return a[0];
    return a[0];
  });
}

FiniteOperation FiniteOperation::boolean_majority() {
  return from_function(2, 3, [](std::span<const int> a) { return (a[0] + a[1] + a[2] >= 2) ? 1 : 0; });
}

FiniteOperation FiniteOperation::boolean_xor3() {
  return from_function(2, 3, [](std::span<const int> a) { return a[0] ^ a[1] ^ a[2]; });
}

FiniteOperation FiniteOperation::projection(int domain_size, int arity, int index) {
  if (index < 0 || index >= arity) throw std::invalid_argument("projection: index out of range");
  return from_function(domain_size, arity, [index](std::span<const int> a) { return a[index]; });
}

FiniteOperation FiniteOperation::minimum(int domain_size, int arity) {
  return from_function(domain_size, arity, [](std::span<const int> a) {
    return *std::min_element(a.begin(), a.end());
  });
}

std::size_t FiniteOperation::index_of(std::span<const int> args) const {
  std::size_t idx = 0;
  for (int a : args) idx = idx * domain_size_ + static_cast<std::size_t>(a);
  return idx;
}

FiniteOperation FiniteOperation::minor(const std::vector<int>& sigma, int new_arity) const {
  if (static_cast<int>(sigma.size()) != arity_)
    throw std::invalid_argument("minor: index map must cover every argument");
  for (int s : sigma)
    if (s < 0 || s >= new_arity) throw std::invalid_argument("minor: index map out of range");
  return from_function(domain_size_, new_arity, [&](std::span<const int> c) {
    std::vector<int> inner(arity_);
    for (int i = 0; i < arity_; ++i) inner[i] = c[sigma[i]];
    return (*this)(inner);
  });
}

bool FiniteOperation::is_idempotent() const {
  std::vector<int> args(arity_);
  for (int v = 0; v < domain_size_; ++v) {
    std::fill(args.begin(), args.end(), v);
    if ((*this)(args) != v) return false;
  }
  return true;
}

} // namespace ppcp
