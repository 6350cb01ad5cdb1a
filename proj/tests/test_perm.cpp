#include <doctest.h>

#include "ppcp/perm.hpp"

using namespace ppcp;

TEST_CASE("cycle parsing matches the appendix notation") {
  // (3 4 5) at degree 5: 1-based images 1,2,4,5,3
  auto f = Perm::from_cycles("(3 4 5)", 5);
  CHECK(f.images() == std::vector<int>{0, 1, 3, 4, 2});

  auto id = Perm::from_cycles("", 4);
  CHECK(id.is_identity());
  CHECK(Perm::from_cycles("()", 4).is_identity());

  auto g = Perm::from_cycles("(1 2)(3 4)", 5);
  CHECK(g.images() == std::vector<int>{1, 0, 3, 2, 4});
}

TEST_CASE("cycle parsing rejects malformed input") {
  CHECK_THROWS_AS(Perm::from_cycles("(1 2)(2 3)", 4), std::invalid_argument); // repeated point
  CHECK_THROWS_AS(Perm::from_cycles("(1 6)", 5), std::invalid_argument);      // beyond degree
  CHECK_THROWS_AS(Perm::from_cycles("(1 2", 4), std::invalid_argument);       // unterminated
  CHECK_THROWS_AS(Perm::from_cycles("1 2)", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles("(1 x)", 4), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
  auto a = Perm::from_cycles("(1 2)", 3);
  auto b = Perm::from_cycles("(2 3)", 3);
  auto ab = a * b; // x -> a(b(x))
  CHECK(ab(1) == 2); // b: 2->3 (0-based 1->2), a fixes 2
  CHECK(ab.images() == std::vector<int>{1, 2, 0});
}

TEST_CASE("inverse and order") {
  auto p = Perm::from_cycles("(1 2 3)(4 5)", 5);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 6);
  CHECK(Perm(4).order() == 1);
}

TEST_CASE("cycle round trip") {
  auto p = Perm::from_cycles("(1 3)(2 4)", 5);
  CHECK(Perm::from_cycles(p.cycle_string(), 5) == p);
  CHECK(Perm(3).cycle_string() == "()");
}
