#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ppcp {

/// A finite operation as an explicit value table, row-major with the first
/// argument most significant: index(c) = ((c0*D + c1)*D + c2)... .
class FiniteOperation {
public:
  FiniteOperation(int domain_size, int arity, std::vector<int> table);

  static FiniteOperation from_function(int domain_size, int arity,
                                       const std::function<int(std::span<const int>)>& f);

  /// Ternary minority: the odd one out when two arguments agree, the first
  /// argument when all are distinct.
  static FiniteOperation minority(int domain_size);
  static FiniteOperation boolean_majority();
  static FiniteOperation boolean_xor3();
  static FiniteOperation projection(int domain_size, int arity, int index);
  /// n-ary minimum on {0..domain_size-1}.
  static FiniteOperation minimum(int domain_size, int arity);

  int domain_size() const { return domain_size_; }
  int arity() const { return arity_; }
  const std::vector<int>& table() const { return table_; }

  std::size_t index_of(std::span<const int> args) const;
  int operator()(std::span<const int> args) const { return table_[index_of(args)]; }

  /// The minor f_sigma with f_sigma(c) = f(c[sigma[0]], ..., c[sigma[m-1]]).
  FiniteOperation minor(const std::vector<int>& sigma, int new_arity) const;

  bool is_idempotent() const;

  bool operator==(const FiniteOperation&) const = default;

private:
  int domain_size_;
  int arity_;
  std::vector<int> table_;
};

} // namespace ppcp
