#include "ppcp/act_struct.hpp"

namespace ppcp {

std::string generator_relation_name(std::size_t k) { return "g" + std::to_string(k); }

Structure structure_of_action(const Action& a, LabelMode mode) {
  Structure s(a.points());
  auto add_graph_of = [&](const std::string& name, const Perm& p) {
    s.add_relation(name, 2);
    for (int x = 0; x < a.points(); ++x) s.add_tuple(name, {x, p(x)});
  };
  if (mode == LabelMode::Generators) {
    for (std::size_t k = 0; k < a.generator_images().size(); ++k)
      add_graph_of(generator_relation_name(k), a.generator_images()[k]);
  } else {
    for (std::size_t i = 0; i < a.element_images().size(); ++i)
      add_graph_of("e" + std::to_string(i), a.element_images()[i]);
  }
  return s;
}

} // namespace ppcp
