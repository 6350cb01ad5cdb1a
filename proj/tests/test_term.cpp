#include <doctest.h>

#include <random>

#include "ppcp/errors.hpp"
#include "ppcp/term.hpp"
#include "ppcp/util.hpp"

using namespace ppcp;

TEST_CASE("count function contract") {
  auto thr = boolean_fs_family(4);
  CHECK(thr.apply(std::vector<long long>{2, 2}) == 1); // at least half ones
  CHECK(thr.apply(std::vector<long long>{4, 0}) == 0);
  CHECK(thr.apply(std::vector<long long>{0, 4}) == 1);
  CHECK(boolean_fs_family(6).apply(std::vector<long long>{5, 1}) == 0);
  CHECK(boolean_fs_family(1).apply(std::vector<long long>{1, 0}) == 0);
  CHECK_THROWS_AS(thr.apply(std::vector<long long>{1, 1}), std::invalid_argument);
  // a rule that is not idempotent on constants is rejected
  CHECK_THROWS_AS(CountFunction(2, 3, "bad", [](std::span<const long long>) { return 0; }),
                  std::invalid_argument);
}

TEST_CASE("base, projection and minor evaluation") {
  auto xor3 = Term::base(FiniteOperation::boolean_xor3());
  CHECK(evaluate(xor3, std::vector<int>{1, 1, 0}) == 0);
  CHECK(evaluate(xor3, std::vector<int>{1, 0, 0}) == 1);

  auto proj = Term::projection(2, 3, 1);
  CHECK(evaluate(proj, std::vector<int>{0, 1, 0}) == 1);

  // f(x,y) = xor3(x,x,y) = y
  auto cancel = Term::minor(xor3, {0, 0, 1}, 2);
  CHECK(evaluate(cancel, std::vector<int>{1, 0}) == 0);
  CHECK(evaluate(cancel, std::vector<int>{0, 1}) == 1);
}

TEST_CASE("minor composition law") {
  std::mt19937 rng(1105);
  for (int round = 0; round < 30; ++round) {
    const int domain = 2 + static_cast<int>(rng() % 2);
    const int base_arity = 2 + static_cast<int>(rng() % 3);
    std::vector<int> table(*checked_pow(domain, base_arity, 1u << 20));
    for (auto& v : table) v = static_cast<int>(rng() % domain);
    auto f = Term::base(FiniteOperation(domain, base_arity, std::move(table)));

    const int mid_arity = 1 + static_cast<int>(rng() % 4);
    const int out_arity = 1 + static_cast<int>(rng() % 4);
    std::vector<int> sigma(base_arity), tau(mid_arity);
    for (auto& s : sigma) s = static_cast<int>(rng() % mid_arity);
    for (auto& t : tau) t = static_cast<int>(rng() % out_arity);

    auto nested = Term::minor(Term::minor(f, sigma, mid_arity), tau, out_arity);
    std::vector<int> fused(base_arity);
    for (int i = 0; i < base_arity; ++i) fused[i] = tau[sigma[i]];
    auto direct = Term::minor(f, fused, out_arity);

    std::vector<int> args(out_arity, 0);
    do {
      CHECK(evaluate(nested, args) == evaluate(direct, args));
    } while (next_tuple(args, domain));
  }
}

TEST_CASE("composition evaluates outer over inner values") {
  auto maj = Term::base(FiniteOperation::boolean_majority());
  auto xor3 = Term::base(FiniteOperation::boolean_xor3());
  auto proj0 = Term::projection(2, 3, 0);
  auto both = Term::compose(maj, {xor3, proj0, proj0});
  // maj(xor(c), c0, c0) = c0 unless overridden; on (1,0,0): maj(1,1,1) = 1
  CHECK(evaluate(both, std::vector<int>{1, 0, 0}) == 1);
  CHECK(evaluate(both, std::vector<int>{0, 1, 1}) == 0);
}

TEST_CASE("symmetrize applies exact multiplicities") {
  // symmetrizing a projection with the threshold family gives majority-like
  // behaviour: counts of each value across all 3! permutations
  auto proj = Term::projection(2, 3, 0);
  auto sym = Term::symmetrize(boolean_fs_family(6), proj);
  // on (1,0,0): value 1 appears in 2 of 6 permutations; threshold says 0
  CHECK(evaluate(sym, std::vector<int>{1, 0, 0}) == 0);
  CHECK(evaluate(sym, std::vector<int>{1, 1, 0}) == 1);
  // constant tuples stay constant
  CHECK(evaluate(sym, std::vector<int>{1, 1, 1}) == 1);
  CHECK(evaluate(sym, std::vector<int>{0, 0, 0}) == 0);

  CHECK_THROWS_AS(Term::symmetrize(boolean_fs_family(5), proj), std::invalid_argument);
}

TEST_CASE("count_apply counts member values") {
  auto p0 = Term::projection(2, 2, 0);
  auto p1 = Term::projection(2, 2, 1);
  auto both = Term::count_apply(boolean_fs_family(2), {p0, p1});
  CHECK(evaluate(both, std::vector<int>{1, 0}) == 1); // one of two is 1
  CHECK(evaluate(both, std::vector<int>{0, 0}) == 0);
  CHECK_THROWS_AS(Term::count_apply(boolean_fs_family(3), {p0, p1}), std::invalid_argument);
}

TEST_CASE("tabulation matches evaluation") {
  auto maj = Term::base(FiniteOperation::boolean_majority());
  auto xor3 = Term::base(FiniteOperation::boolean_xor3());
  auto mixed = Term::compose(maj, {xor3, Term::projection(2, 3, 2), Term::projection(2, 3, 1)});
  auto sym = Term::symmetrize(boolean_fs_family(6), mixed);

  EvalSession session;
  const auto& table = tabulate(sym, session);
  std::vector<int> args(3, 0);
  do {
    CHECK(table(args) == evaluate(sym, args));
  } while (next_tuple(args, 2));
}

TEST_CASE("sessions share work across calls") {
  auto xor3 = Term::base(FiniteOperation::boolean_xor3());
  EvalSession session;
  CHECK(evaluate(xor3, std::vector<int>{1, 0, 0}, session) == 1);
  CHECK(evaluate(xor3, std::vector<int>{1, 0, 0}, session) == 1);
}
