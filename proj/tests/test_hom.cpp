#include <doctest.h>

#include "ppcp/act_struct.hpp"
#include "ppcp/catalog.hpp"
#include "ppcp/errors.hpp"
#include "ppcp/hom.hpp"
#include "ppcp/util.hpp"

using namespace ppcp;

namespace {

// brute-force oracle: try all |target|^|source| maps
bool hom_exists_brute(const Structure& a, const Structure& b) {
  std::vector<int> map(a.domain_size(), 0);
  do {
    if (is_homomorphism(a, b, map)) return true;
  } while (next_tuple(map, b.domain_size()));
  return false;
}

} // namespace

TEST_CASE("basic homomorphisms") {
  auto c2 = builtin_structure("C2");
  auto hom = find_homomorphism(c2, c2);
  REQUIRE(hom.has_value());
  CHECK(is_homomorphism(c2, c2, hom->map));

  // odd cycle into the 2-cycle: impossible
  CHECK(!find_homomorphism(builtin_structure("C3"), c2).has_value());
  CHECK(hom_exists_brute(builtin_structure("C3"), c2) == false);
}

TEST_CASE("search agrees with brute force on small instances") {
  std::vector<Structure> pool = {builtin_structure("C1"), builtin_structure("C2"),
                                 builtin_structure("C3"), builtin_structure("C4"),
                                 builtin_structure("T3"), builtin_structure("P1")};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (a.domain_size() > 6) continue;
      CHECK(find_homomorphism(a, b).has_value() == hom_exists_brute(a, b));
    }
  }
}

TEST_CASE("natural component embeds into the prim structure") {
  Group a5 = builtin_group("A5");
  Structure nat = structure_of_action(Action::natural(a5));
  Structure prim = structure_of_action(prim_action(a5));
  auto hom = find_homomorphism(nat, prim);
  REQUIRE(hom.has_value());
  CHECK(is_homomorphism(nat, prim, hom->map));
}

TEST_CASE("hom equivalence") {
  // S3 natural is not minimal fixed point free, so not equivalent to prim
  Group s3 = builtin_group("S3");
  CHECK(!hom_equivalent(structure_of_action(Action::natural(s3)),
                        structure_of_action(prim_action(s3))));

  // for Z3 the regular action is the prim action
  Group z3 = builtin_group("Z3");
  CHECK(hom_equivalent(structure_of_action(Action::regular(z3)),
                       structure_of_action(prim_action(z3))));

  CHECK(hom_equivalent(builtin_structure("T3"), builtin_structure("T3")));
}

TEST_CASE("budget errors are distinct from no") {
  Structure k3(3);
  k3.add_relation("E", 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) k3.add_tuple("E", {i, j});
  CHECK_THROWS_AS(find_homomorphism(k3, k3, 1), BudgetError);
}

TEST_CASE("isomorphism search") {
  auto c5 = builtin_structure("C5");
  CHECK(find_isomorphism(c5, c5).has_value());
  CHECK(!find_isomorphism(c5, builtin_structure("C4")).has_value());
  CHECK(!find_isomorphism(builtin_structure("T3"), builtin_structure("C3")).has_value());
}

TEST_CASE("dual components") {
  // the f,g-reduct of the A5 prim structure: every component has a dual
  Structure a5 = structure_of_action(prim_action(builtin_group("A5")));
  auto duals = dual_pairing(a5);
  REQUIRE(duals.size() == 3);
  for (const auto& d : duals) CHECK(d.has_value());

  // reversing a directed 3-cycle yields an isomorphic digraph
  auto c3 = dual_pairing(builtin_structure("C3"));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0] == 0);

  auto loop = dual_pairing(builtin_structure("C1"));
  CHECK(loop[0] == 0);

  // a path is not isomorphic to its reversal inside this one-component graph?
  // it is (reverse a single edge and relabel), so check T3 instead: T3
  // reversed is isomorphic to T3 by the order-reversing relabeling
  auto t3 = dual_pairing(builtin_structure("T3"));
  CHECK(t3[0] == 0);
}

TEST_CASE("relation word composition") {
  Structure z5 = structure_of_action(Action::natural(builtin_group("Z5")), LabelMode::Generators);
  // [g0, g0] is the square of the 5-cycle
  auto square = compose_relation_word(z5, {{"g0", true}, {"g0", true}});
  std::vector<std::vector<int>> expected;
  for (int i = 0; i < 5; ++i) expected.push_back({i, (i + 2) % 5});
  std::sort(expected.begin(), expected.end());
  CHECK(square == expected);

  // empty word: identity relation
  std::vector<std::vector<int>> diagonal;
  for (int i = 0; i < 5; ++i) diagonal.push_back({i, i});
  CHECK(compose_relation_word(z5, {}) == diagonal);

  // cancellation
  CHECK(compose_relation_word(z5, {{"g0", true}, {"g0", false}}) == diagonal);
}

TEST_CASE("relation words recover every element relation from generators") {
  for (const char* name : {"S3", "A4"}) {
    Group g = builtin_group(name);
    Action nat = Action::natural(g);
    Structure gens = structure_of_action(nat, LabelMode::Generators);
    Structure all = structure_of_action(nat, LabelMode::AllElements);
    for (std::size_t i = 0; i < g.order(); ++i) {
      // the stored word multiplies left to right, so the relation word is
      // its reverse
      std::vector<std::pair<std::string, bool>> word;
      const auto& w = g.word(static_cast<int>(i));
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        word.emplace_back(generator_relation_name(*it), true);
      CHECK(compose_relation_word(gens, word) ==
            all.relation("e" + std::to_string(i)).tuples);
    }
  }
}
