#include <doctest.h>

#include <random>

#include "ppcp/errors.hpp"
#include "ppcp/forge.hpp"
#include "ppcp/minor.hpp"
#include "ppcp/util.hpp"

using namespace ppcp;

namespace {

TermPtr bool_maj() { return Term::base(FiniteOperation::boolean_majority()); }
TermPtr bool_xor() { return Term::base(FiniteOperation::boolean_xor3()); }

FiniteOperation random_op(std::mt19937& rng, int domain, int arity) {
  std::vector<int> table(*checked_pow(domain, arity, 1u << 20));
  for (auto& v : table) v = static_cast<int>(rng() % domain);
  return FiniteOperation(domain, arity, std::move(table));
}

} // namespace

TEST_CASE("the converted Maltsev witness satisfies GP(3,2) and not more") {
  EvalSession session;
  auto base = gp_base_from_maltsev(bool_xor(), session);
  CHECK(check_gp(base, 3, 2, session));
  // xor is symmetric, so this particular witness even satisfies GP(3,3)
  CHECK(check_gp(base, 3, 3, session));
  // a projection fails immediately
  CHECK(!check_gp(FiniteOperation::projection(2, 3, 0), 3, 2));
}

TEST_CASE("semantic gp check equals the literal identity sets at n in {3,5}") {
  std::mt19937 rng(4313);
  for (int domain = 2; domain <= 3; ++domain) {
    for (int n : {3, 5}) {
      for (int k = 1; k <= n; ++k) {
        auto cond = gp_condition(n, k);
        int agreements = 0;
        for (int round = 0; round < 60; ++round) {
          auto f = random_op(rng, domain, n);
          bool semantic = check_gp(f, n, k);
          bool literal = op_satisfies(f, cond);
          CHECK(semantic == literal);
          agreements += semantic == literal;
        }
        // constructed witnesses must agree as well
        EvalSession session;
        auto witness = build_gp(bool_maj(), bool_xor(), n, session);
        if (domain == 2) {
          CHECK(check_gp(witness, n, k, session));
          CHECK(op_satisfies(tabulate(witness, session), cond));
        }
      }
    }
  }
}

TEST_CASE("position lift raises k") {
  EvalSession session;
  auto base = gp_base_from_maltsev(bool_xor(), session);
  auto lifted = gp_lift_position(bool_maj(), base, 3, 2, session);
  CHECK(check_gp(lifted, 3, 3, session));
  CHECK_THROWS_AS(gp_lift_position(bool_maj(), base, 3, 1, session), std::invalid_argument);
}

TEST_CASE("arity lift raises n and resets k to 2") {
  EvalSession session;
  auto gp33 = build_gp(bool_maj(), bool_xor(), 3, session);
  auto gp52 = gp_lift_arity(bool_xor(), gp33, session);
  CHECK(gp52->arity() == 5);
  CHECK(check_gp(gp52, 5, 2, session));
  // idempotence on constants carries through
  CHECK(evaluate(gp52, std::vector<int>{1, 1, 1, 1, 1}, session) == 1);
  CHECK(evaluate(gp52, std::vector<int>{0, 0, 0, 0, 0}, session) == 0);
  // lifting positions 2..4 yields GP(5,5)
  auto cur = gp52;
  for (int k = 2; k < 5; ++k) cur = gp_lift_position(bool_maj(), cur, 5, k, session);
  CHECK(check_gp(cur, 5, 5, session));
}

TEST_CASE("build_gp up to arity fifteen") {
  EvalSession session;
  auto gp5 = build_gp(bool_maj(), bool_xor(), 5, session);
  CHECK(check_gp(gp5, 5, 5, session));

  auto gp15 = build_gp(bool_maj(), bool_xor(), 15, session);
  CHECK(check_gp(gp15, 15, 15, session));

  CHECK_THROWS_AS(build_gp(bool_maj(), bool_xor(), 4, session), std::invalid_argument);
  CHECK_THROWS_AS(build_gp(bool_maj(), bool_xor(), 17, session), BudgetError);
  // a non-Maltsev second input is rejected
  CHECK_THROWS_AS(build_gp(bool_maj(), bool_maj(), 3, session), std::invalid_argument);
}

TEST_CASE("symmetrization keeps GP and gains full symmetry") {
  EvalSession session;
  auto gp3 = build_gp(bool_maj(), bool_xor(), 3, session);
  auto sym3 = symmetrize_gp(boolean_fs_family(6), gp3, session);
  CHECK(op_satisfies(tabulate(sym3, session), fs_condition(3)));
  CHECK(check_gp(sym3, 3, 3, session));
  // constant tuples keep their value
  CHECK(evaluate(sym3, std::vector<int>{1, 1, 1}, session) == 1);

  auto gp15 = build_gp(bool_maj(), bool_xor(), 15, session);
  auto sym15 = symmetrize_gp(boolean_fs_family(factorial(15)), gp15, session);
  CHECK(op_satisfies(tabulate(sym15, session), fs_condition(15)));
  CHECK(check_gp(sym15, 15, 15, session));
}

TEST_CASE("compatible generalized minorities") {
  EvalSession session;
  auto sym3 = symmetrize_gp(boolean_fs_family(6), build_gp(bool_maj(), bool_xor(), 3, session),
                            session);
  auto sym15 = symmetrize_gp(boolean_fs_family(factorial(15)),
                             build_gp(bool_maj(), bool_xor(), 15, session), session);
  auto gmins = build_compatible_gmins({sym3, sym15}, session);
  REQUIRE(gmins.size() == 3);

  // g3 is the unique boolean fully symmetric operation with g(y,y,x) = x
  CHECK(tabulate(gmins[1], session) == FiniteOperation::boolean_xor3());

  // g5(x,x,c,d,e) = g3(c,d,e) exhaustively
  const auto& g5 = tabulate(gmins[2], session);
  const auto& g3 = tabulate(gmins[1], session);
  std::vector<int> args(5, 0);
  do {
    if (args[0] == args[1]) {
      std::vector<int> rest(args.begin() + 2, args.end());
      CHECK(g5(args) == g3(rest));
    }
  } while (next_tuple(args, 2));
  CHECK(op_satisfies(g5, gmin_condition(5)));

  // arity validation
  CHECK_THROWS_AS(build_compatible_gmins({sym3, sym3}, session), std::invalid_argument);
}

TEST_CASE("totally symmetric construction") {
  EvalSession session;
  auto sym3 = symmetrize_gp(boolean_fs_family(6), build_gp(bool_maj(), bool_xor(), 3, session),
                            session);
  auto sym15 = symmetrize_gp(boolean_fs_family(factorial(15)),
                             build_gp(bool_maj(), bool_xor(), 15, session), session);
  auto gmins = build_compatible_gmins({sym3, sym15}, session);

  auto ts3 = build_ts(gmins, boolean_fs_family(4), 3, session);
  const auto& t3 = tabulate(ts3, session);
  CHECK(t3(std::vector<int>{0, 0, 1}) == t3(std::vector<int>{0, 1, 1}));
  CHECK(op_satisfies(t3, ts_condition(3)));

  auto ts5 = build_ts(gmins, boolean_fs_family(16), 5, session);
  CHECK(op_satisfies(tabulate(ts5, session), ts_condition(5)));
  CHECK(evaluate(ts5, std::vector<int>{1, 1, 1, 1, 1}, session) == 1);

  CHECK_THROWS_AS(build_ts(gmins, boolean_fs_family(8), 5, session), std::invalid_argument);
}

TEST_CASE("every constructed term is idempotent on constant tuples") {
  EvalSession session;
  auto gp15 = build_gp(bool_maj(), bool_xor(), 15, session);
  auto sym3 = symmetrize_gp(boolean_fs_family(6), build_gp(bool_maj(), bool_xor(), 3, session),
                            session);
  auto sym15 = symmetrize_gp(boolean_fs_family(factorial(15)), gp15, session);
  auto gmins = build_compatible_gmins({sym3, sym15}, session);
  auto ts5 = build_ts(gmins, boolean_fs_family(16), 5, session);
  for (const auto& term : {gp15, sym15, gmins[2], ts5}) {
    for (int v = 0; v < 2; ++v) {
      std::vector<int> constant(term->arity(), v);
      CHECK(evaluate(term, constant, session) == v);
    }
  }
}

TEST_CASE("pipeline verifies the whole chain") {
  auto report = pipeline(FiniteOperation::boolean_majority(), FiniteOperation::boolean_xor3(), 5);
  CHECK(report.all_ok);
  std::vector<std::string> expected = {
      "GP(3,3)", "GP(5,5)", "GP(15,15)", "SymGP(3)", "SymGP(15)", "g3 = ternary XOR",
      "TS(2)",   "TS(3)",   "TS(4)",     "TS(5)"};
  for (const auto& name : expected) {
    bool found = false;
    for (const auto& e : report.entries) found |= e.check == name && e.ok;
    CHECK_MESSAGE(found, name);
  }

  auto small = pipeline(FiniteOperation::boolean_majority(), FiniteOperation::boolean_xor3(), 3);
  CHECK(small.all_ok);

  CHECK_THROWS_AS(pipeline(FiniteOperation::boolean_majority(),
                           FiniteOperation::boolean_majority(), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(pipeline(FiniteOperation::boolean_majority(), FiniteOperation::boolean_xor3(), 7),
                  std::invalid_argument);
}
