#include <doctest.h>

#include <functional>
#include <random>

#include "ppcp/biaction.hpp"
#include "ppcp/catalog.hpp"
#include "ppcp/errors.hpp"

using namespace ppcp;

TEST_CASE("identity map on the regular Z2 biaction") {
  Action z2 = Action::regular(builtin_group("Z2"));
  auto rep = biaction_subquotient(z2, z2, {0, 1});
  CHECK(rep.pass);
  CHECK(rep.z_size == 2);
  CHECK(rep.stab_g_t == 1);
  CHECK(rep.stab_g_orbit == 2);
  CHECK(rep.stab_h_t == 1);
  CHECK(rep.stab_h_orbit == 2);
  CHECK(rep.quotient_order == 2);
}

TEST_CASE("constant maps: stab_G(t) is a point stabilizer, stab_H(t) = H") {
  Action g = Action::natural(builtin_group("S3"));
  Action h = Action::regular(builtin_group("Z4"));
  std::vector<int> t(h.points(), 2);
  auto rep = biaction_subquotient(g, h, t);
  CHECK(rep.pass);
  CHECK(rep.stab_g_t == stabilizer(g, 2).order());
  CHECK(rep.stab_h_t == h.group().order());
  CHECK(rep.quotient_order == 1);
}

TEST_CASE("random maps pass on A5 x Z5 and on small catalog pairs") {
  std::mt19937 rng(20240817);
  Action a5 = Action::natural(builtin_group("A5"));
  Action z5 = Action::regular(builtin_group("Z5"));
  for (int i = 0; i < 10; ++i) {
    std::vector<int> t(z5.points());
    for (auto& v : t) v = static_cast<int>(rng() % a5.points());
    CHECK(biaction_subquotient(a5, z5, t).pass);
  }

  std::vector<Action> actions;
  for (const char* name : {"Z2", "Z3", "Z4", "S3", "A4"})
    actions.push_back(Action::natural(builtin_group(name)));
  std::uniform_int_distribution<std::size_t> pick(0, actions.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const Action& g = actions[pick(rng)];
    const Action& h = actions[pick(rng)];
    std::vector<int> t(h.points());
    for (auto& v : t) v = static_cast<int>(rng() % g.points());
    auto rep = biaction_subquotient(g, h, t);
    CHECK(rep.pass);
    if (!rep.pass) MESSAGE(rep.detail);
  }
}

TEST_CASE("budget and validation errors") {
  Action z2 = Action::regular(builtin_group("Z2"));
  CHECK_THROWS_AS(biaction_subquotient(z2, z2, {0, 1}, 3), BudgetError);
  CHECK_THROWS_AS(biaction_subquotient(z2, z2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(biaction_subquotient(z2, z2, {0, 5}), std::invalid_argument);
}
