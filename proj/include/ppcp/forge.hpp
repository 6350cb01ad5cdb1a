#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppcp/term.hpp"

namespace ppcp {

/// Semantic generalized-pairing check: for every tuple with exactly one
/// value of odd multiplicity, occurring somewhere among the first k
/// positions, the term must agree with its value on the constant tuple of
/// that value. Equivalent to the literal identity set (property-tested at
/// n in {3, 5}); the only feasible form at n = 15.
bool check_gp(const TermPtr& term, int n, int k, EvalSession& session);
bool check_gp(const FiniteOperation& op, int n, int k);

/// A quasi Maltsev witness reinterpreted as a GP(3,2) witness via the fixed
/// coordinate swap f(y1,y2,y3) = malt(y1,y3,y2).
TermPtr gp_base_from_maltsev(const TermPtr& malt, EvalSession& session);

/// Raises the position bound: GP(n,k) + quasi majority -> GP(n,k+1).
/// The three inner copies permute the arguments at positions k-1,k,k+1.
TermPtr gp_lift_position(const TermPtr& maj, const TermPtr& gp, int n, int k, EvalSession& session);

/// Raises the arity: GP(n,n) + quasi Maltsev -> GP(n+2,2), via
/// malt(p(c1..c1), p(c3..c_{n+2}), p(c2..c2)).
TermPtr gp_lift_arity(const TermPtr& malt, const TermPtr& p, EvalSession& session);

/// Alternating induction from the GP(3,2) base: lift k to the current arity,
/// then lift the arity by two, ending at a GP(n,n) witness.
TermPtr build_gp(const TermPtr& maj, const TermPtr& malt, int n, EvalSession& session,
                 int max_arity = 15);

/// count over all n! permuted argument tuples of p; the output is fully
/// symmetric and still satisfies GP(n,n) (both checked).
TermPtr symmetrize_gp(const CountFunction& count, const TermPtr& p, EvalSession& session);

/// From fully symmetric GP witnesses of arity 4^k-1 builds the compatible
/// generalized minorities g1, g3, ..., g_{2K+1}; each is verified fully
/// symmetric and compatible with its predecessor.
std::vector<TermPtr> build_compatible_gmins(const std::vector<TermPtr>& sym_gps,
                                            EvalSession& session);

/// Totally symmetric operation of odd arity n from compatible minorities and
/// a count function sized 2^(n-1) (one slot per odd-size subset of [n]).
TermPtr build_ts(const std::vector<TermPtr>& gmins, const CountFunction& count, int n,
                 EvalSession& session);

struct PipelineReport {
  struct Entry {
    std::string check;
    std::uint64_t tuples = 0;
    bool ok = false;
  };
  std::vector<Entry> entries;
  bool all_ok = true;
  std::string text() const;
};

/// Runs the full construction chain on a 2-element domain and verifies every
/// claimed condition exhaustively: generalized pairings up to GP(15,15),
/// their symmetrizations, the compatible minorities (g3 must equal ternary
/// XOR exactly), and totally symmetric operations up to arity n_max.
PipelineReport pipeline(const FiniteOperation& maj, const FiniteOperation& malt, int n_max);

} // namespace ppcp
