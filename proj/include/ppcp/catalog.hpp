#pragma once

#include <iosfwd>
#include <string>

#include "ppcp/action.hpp"
#include "ppcp/group.hpp"
#include "ppcp/structure.hpp"

namespace ppcp {

/// Built-in groups: "Z<n>", "S<n>", "A<n>" (n <= 7) and "PSL27".
/// A5, A6 and PSL27 carry the standard two-generator presentations used
/// throughout this project (see catalog.cpp).
bool is_builtin_group(const std::string& name);
Group builtin_group(const std::string& name);

/// Built-in structures: "T3", "P1", "C1", "C<n>".
bool is_builtin_structure(const std::string& name);
Structure builtin_structure(const std::string& name);

/// Group catalog file, line based:
///   name <label>
///   degree <n>
///   gen <cycles>          (one per generator, 1-based cycle notation)
/// An action file additionally carries:
///   points <m>
///   act <cycles>          (one per gen line, the image on the m points)
Group parse_group_file(std::istream& in);
std::string write_group_file(const Group& g);
Action parse_action_file(std::istream& in);

/// Resolves a group spec: a built-in name or a path to a catalog file.
Group group_from_spec(const std::string& spec);

/// Resolves an action spec: "prim:<groupspec>", "reg:<groupspec>", a group
/// spec (natural action), or a path to an action file. The cap bounds the
/// subgroup lattice behind prim: specs.
Action action_from_spec(const std::string& spec, std::size_t group_cap = kDefaultLatticeCap);

/// Resolves a structure spec: a built-in name, "prim:<groupspec>" (the
/// generator reduct of the prim action structure), or a JSON file path.
Structure structure_from_spec(const std::string& spec,
                              std::size_t group_cap = kDefaultLatticeCap);

} // namespace ppcp
