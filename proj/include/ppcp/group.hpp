#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ppcp/perm.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultClosureCap = 10'000;

/// Closure of the generators under composition; contains the identity and
/// all inverses. Result is sorted lexicographically by image sequence.
/// Throws BudgetError once the closure grows past `cap`.
std::vector<Perm> generate_elements(const std::vector<Perm>& generators,
                                    std::size_t cap = kDefaultClosureCap);

/// A finite permutation group given by generators. Elements, index tables
/// and the multiplication table are computed on demand and cached; a Group
/// is immutable after construction and safe to share across threads.
class Group {
public:
  Group(int degree, std::vector<Perm> generators, std::string name = "",
        std::size_t closure_cap = kDefaultClosureCap);

  static Group trivial(int degree, std::string name = "");

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t closure_cap() const { return closure_cap_; }

  /// Sorted element list (identity is index 0).
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int index_of(const Perm& p) const; // -1 if absent
  int identity_index() const;
  const std::vector<int>& generator_indices() const;
  /// A word in generator indices whose left-to-right product is element i.
  const std::vector<int>& word(int i) const;
  int element_order(int i) const;

  /// Index tables; only materialized for groups of modest order.
  int mult(int i, int j) const;    // index of elements()[i] * elements()[j]
  int inverse_index(int i) const;

  bool is_subgroup_of(const Group& parent) const;

private:
  struct ElementData {
    std::vector<Perm> elements;
    std::vector<int> generator_indices;
    std::vector<std::vector<int>> words;
    std::vector<int> orders;
    int identity_index = 0;
  };
  struct MultData {
    std::vector<int> mult; // order x order, row-major
    std::vector<int> inv;
  };
  // copies of a Group share the lazily computed caches
  struct State {
    std::mutex mutex;
    std::shared_ptr<const ElementData> elements;
    std::shared_ptr<const MultData> mult;
  };

  const ElementData& element_data() const;
  const MultData& mult_data() const;

  int degree_;
  std::vector<Perm> generators_;
  std::string name_;
  std::size_t closure_cap_;
  std::shared_ptr<State> state_;
};

} // namespace ppcp
