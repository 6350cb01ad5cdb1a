#pragma once

#include "ppcp/action.hpp"
#include "ppcp/structure.hpp"

namespace ppcp {

enum class LabelMode {
  Generators,  // one relation g<i> per generator
  AllElements, // one relation e<i> per group element, in element order
};

/// The structure on the point set with a binary relation {(x, g.x)} per
/// chosen label. The generator reduct determines the remaining relations by
/// relational composition (see compose_relation_word).
Structure structure_of_action(const Action& a, LabelMode mode = LabelMode::Generators);

/// Relation name assigned to generator k in LabelMode::Generators.
std::string generator_relation_name(std::size_t k);

} // namespace ppcp
