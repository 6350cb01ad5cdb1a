#include <doctest.h>

#include <set>
#include <thread>

#include "ppcp/catalog.hpp"
#include "ppcp/errors.hpp"
#include "ppcp/group.hpp"

using namespace ppcp;

TEST_CASE("closure sizes of the catalog groups") {
  CHECK(builtin_group("A5").order() == 60);
  CHECK(builtin_group("PSL27").order() == 168);
  CHECK(builtin_group("A6").order() == 360);
  CHECK(builtin_group("S3").order() == 6);
  CHECK(builtin_group("S5").order() == 120);
  CHECK(builtin_group("Z6").order() == 6);
  CHECK(builtin_group("A4").order() == 12);
  CHECK(builtin_group("A7").order() == 2520);
  CHECK(Group::trivial(3).order() == 1);
}

TEST_CASE("closure respects its cap") {
  auto gens = builtin_group("A5").generators();
  CHECK_THROWS_AS(generate_elements(gens, 59), BudgetError);
  CHECK(generate_elements(gens, 60).size() == 60);
}

TEST_CASE("group axioms hold for generated element sets") {
  for (const char* name : {"Z4", "S3", "A4", "A5"}) {
    Group g = builtin_group(name);
    const auto& els = g.elements();
    std::set<Perm> set(els.begin(), els.end());
    CHECK(set.count(Perm(g.degree())) == 1);
    for (const auto& a : els) {
      CHECK(set.count(a.inverse()) == 1);
      for (const auto& b : els) CHECK(set.count(a * b) == 1);
    }
    for (const auto& gen : g.generators()) CHECK(set.count(gen) == 1);
  }
}

TEST_CASE("mult and inverse tables agree with permutation arithmetic") {
  Group g = builtin_group("S3");
  const auto& els = g.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    CHECK(els[g.inverse_index(i)] == els[i].inverse());
    for (std::size_t j = 0; j < els.size(); ++j)
      CHECK(els[g.mult(i, j)] == els[i] * els[j]);
  }
}

TEST_CASE("generator words reproduce their elements") {
  Group g = builtin_group("A5");
  for (std::size_t i = 0; i < g.order(); ++i) {
    Perm p(g.degree());
    for (int k : g.word(static_cast<int>(i))) p = p * g.generators()[k];
    CHECK(p == g.elements()[i]);
  }
}

TEST_CASE("lagrange: subgroup orders divide the group order") {
  Group g = builtin_group("S4");
  for (const auto& gen : g.elements()) {
    Group cyclic(g.degree(), {gen});
    CHECK(g.order() % cyclic.order() == 0);
  }
}

TEST_CASE("element caches are safe under concurrent first use") {
  for (int round = 0; round < 3; ++round) {
    Group g = builtin_group("A5");
    std::vector<std::thread> pool;
    std::vector<std::size_t> orders(4, 0);
    for (int t = 0; t < 4; ++t)
      pool.emplace_back([&g, &orders, t] { orders[t] = g.order(); });
    for (auto& th : pool) th.join();
    for (auto o : orders) CHECK(o == 60);
  }
}
