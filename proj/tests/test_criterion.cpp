#include <doctest.h>

#include "ppcp/act_struct.hpp"
#include "ppcp/catalog.hpp"
#include "ppcp/criterion.hpp"
#include "ppcp/errors.hpp"
#include "ppcp/minor.hpp"
#include "ppcp/polymorphism.hpp"

using namespace ppcp;

TEST_CASE("self condition fails, cross prime conditions hold") {
  Action z2 = Action::regular(builtin_group("Z2"));
  Action z3 = Action::regular(builtin_group("Z3"));
  CHECK(!action_criterion(z2, z2));
  CHECK(action_criterion(z2, z3));
  CHECK(action_criterion(z3, z2));

  // cross-check against the polymorphism search
  CHECK(find_polymorphism(structure_of_action(z2), cyclic_condition(3)).has_value());
  CHECK(!find_polymorphism(structure_of_action(z2), cyclic_condition(2)).has_value());
}

TEST_CASE("oracle agreement between the criterion and the search") {
  std::vector<Action> actions;
  actions.push_back(Action::regular(builtin_group("Z2")));
  actions.push_back(Action::regular(builtin_group("Z3")));
  actions.push_back(Action::natural(builtin_group("S3")));
  actions.push_back(Action::regular(builtin_group("Z4")));
  for (const auto& g : actions) {
    for (const auto& h : actions) {
      bool by_criterion = action_criterion(g, h);
      bool by_search =
          find_polymorphism(structure_of_action(g), action_condition(h)).has_value();
      CHECK(by_criterion == by_search);
    }
  }
}

TEST_CASE("self condition fails for the catalog simple groups via the witness probe") {
  for (const char* name : {"Z2", "Z3", "Z5", "A5"}) {
    Action prim = prim_action(builtin_group(name));
    CHECK(!action_criterion(prim, prim));
  }
}

TEST_CASE("distinct primes satisfy each other's conditions") {
  for (int p : {2, 3, 5}) {
    for (int q : {2, 3, 5}) {
      Action gp = prim_action(builtin_group("Z" + std::to_string(p)));
      Action hq = prim_action(builtin_group("Z" + std::to_string(q)));
      CHECK(action_criterion(gp, hq) == (p != q));
    }
  }
}

TEST_CASE("results are independent of the worker count") {
  Action a5 = prim_action(builtin_group("A5"));
  Action z3 = Action::regular(builtin_group("Z3"));
  CHECK(action_criterion(a5, z3, kDefaultCriterionBudget, 1) ==
        action_criterion(a5, z3, kDefaultCriterionBudget, 3));
}

TEST_CASE("budget errors when neither enumeration fits and no witness appears") {
  Action a5 = prim_action(builtin_group("A5"));
  Action z3 = Action::regular(builtin_group("Z3"));
  CHECK_THROWS_AS(action_criterion(a5, z3, 10), BudgetError);
}

TEST_CASE("fs spectrum of the appendix groups") {
  auto a5 = fs_spectrum(builtin_group("A5"), 25);
  CHECK(a5.failing_arities ==
        std::vector<int>{5, 6, 10, 11, 12, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25});
  CHECK(a5.smallest_failing == 5);
  CHECK(a5.largest_index == 10);
  CHECK(a5.index_reading_differs);

  auto psl = fs_spectrum(builtin_group("PSL27"), 25);
  CHECK(psl.failing_arities == std::vector<int>{7, 8, 14, 15, 16, 21, 22, 23, 24});
  CHECK(psl.smallest_failing == 7);
  CHECK(psl.largest_index == 8);

  // Z/p: multiples of p
  auto z3 = fs_spectrum(builtin_group("Z3"), 10);
  CHECK(z3.failing_arities == std::vector<int>{3, 6, 9});
  CHECK(!z3.index_reading_differs);

  CHECK_THROWS_AS(fs_spectrum(Group::trivial(1), 10), std::invalid_argument);
}

TEST_CASE("fs spectrum agrees with the direct criterion on A5 up to arity 7") {
  Group a5 = builtin_group("A5");
  Action prim = prim_action(a5);
  auto spectrum = fs_spectrum(a5, 7);
  for (int k = 2; k <= 7; ++k) {
    bool fails = std::count(spectrum.failing_arities.begin(), spectrum.failing_arities.end(), k) > 0;
    Action sym = Action::natural(builtin_group("S" + std::to_string(k)));
    CHECK(action_criterion(prim, sym) == !fails);
  }
}

TEST_CASE("minority polymorphisms") {
  // on two points the minority is ternary xor
  Action z2 = Action::regular(builtin_group("Z2"));
  CHECK(minority_polymorphism(z2) == FiniteOperation::boolean_xor3());

  Action prim = prim_action(builtin_group("A5"));
  auto m = minority_polymorphism(prim);
  CHECK(m.is_idempotent());
  CHECK(op_satisfies(m, maltsev_condition()));
  CHECK(is_polymorphism(structure_of_action(prim), m));
}
