#pragma once

#include <map>
#include <string>
#include <vector>

namespace ppcp {

/// A finite relational structure: a domain {0..n-1} and named relations of
/// arbitrary arity. Tuple lists are kept sorted and duplicate-free, so equal
/// structures compare equal and serialize byte-identically.
class Structure {
public:
  struct Relation {
    int arity = 0;
    std::vector<std::vector<int>> tuples;
    bool operator==(const Relation&) const = default;
  };

  explicit Structure(int domain_size);

  int domain_size() const { return domain_size_; }
  const std::map<std::string, Relation>& relations() const { return relations_; }
  const Relation& relation(const std::string& name) const;
  bool has_relation(const std::string& name) const { return relations_.count(name) > 0; }

  void add_relation(const std::string& name, int arity);
  void add_tuple(const std::string& name, std::vector<int> tuple);
  void set_relation(const std::string& name, int arity, std::vector<std::vector<int>> tuples);

  bool operator==(const Structure&) const = default;

  /// JSON form {"domain": n, "relations": {name: {"arity": k, "tuples": [...]}}}
  /// with sorted keys and sorted tuple lists.
  std::string to_json() const;
  static Structure from_json(const std::string& text);

  /// DOT digraph; one color per relation name, deterministic ordering.
  /// A binary relation equal to its own converse is drawn once per edge as
  /// an undirected dashed edge. Throws if a relation is not binary.
  std::string to_dot() const;

private:
  int domain_size_;
  std::map<std::string, Relation> relations_;
};

/// Weakly connected components treating every relation tuple as a clique of
/// undirected adjacencies; blocks sorted by least vertex.
std::vector<std::vector<int>> connected_components(const Structure& s);

/// The structure induced on a subset of the domain (tuples all of whose
/// entries lie in the subset, re-indexed by position in `vertices`).
Structure induced_substructure(const Structure& s, const std::vector<int>& vertices);

/// All binary relations reversed.
Structure reversed_structure(const Structure& s);

} // namespace ppcp
