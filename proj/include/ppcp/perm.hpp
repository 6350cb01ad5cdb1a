#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ppcp {

/// A permutation of {0, ..., degree-1}, stored as its image sequence.
class Perm {
public:
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // must be a bijection

  /// Parses whitespace-separated disjoint cycles of 1-based points,
  /// e.g. "(3 4 5)" or "(1 2)(3 4)". Unmentioned points are fixed;
  /// an empty string or "()" is the identity.
  static Perm from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }

  /// (a * b)(x) = a(b(x)); b acts first.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;
  int order() const;

  /// Nontrivial cycles, 0-based, each rotated to start at its least point,
  /// sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  /// 1-based cycle notation; "()" for the identity.
  std::string cycle_string() const;

  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

} // namespace ppcp
