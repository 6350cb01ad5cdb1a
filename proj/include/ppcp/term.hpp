#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppcp/operation.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultSymmetrizeBudget = 100'000;

/// A fully symmetric operation of large arity represented intensionally:
/// its value depends only on the multiplicity vector of its arguments.
/// Multiplicities are exact 64-bit integers (families up to 15! arise here).
class CountFunction {
public:
  CountFunction(int domain_size, long long family_size, std::string name,
                std::function<int(std::span<const long long>)> rule);

  int domain_size() const { return domain_size_; }
  long long family_size() const { return family_size_; }
  const std::string& name() const { return name_; }

  /// counts[v] = multiplicity of value v; the counts must sum to the family
  /// size. rule(all mass on v) = v holds for every CountFunction built here.
  int apply(std::span<const long long> counts) const;

private:
  int domain_size_;
  long long family_size_;
  std::string name_;
  std::function<int(std::span<const long long>)> rule_;
};

/// The threshold family on a 2-element domain: 1 iff at least half of the
/// family evaluates to 1. Idempotent and multiset-determined by construction.
CountFunction boolean_fs_family(long long family_size);

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// An operation term as an immutable evaluation DAG.
class Term {
public:
  enum class Kind { Base, Projection, Minor, Compose, Symmetrize, CountApply };

  static TermPtr base(FiniteOperation op);
  static TermPtr projection(int domain_size, int arity, int index);
  /// minor(inner, sigma, m): c |-> inner(c[sigma[0]], ..., c[sigma[k-1]]).
  static TermPtr minor(TermPtr inner, std::vector<int> sigma, int arity);
  /// outer(inner_1(c), ..., inner_m(c)); inners share one arity.
  static TermPtr compose(TermPtr outer, std::vector<TermPtr> inners);
  /// count over {inner(c permuted by s) : s in Sym(arity)}, evaluated once
  /// per distinct permuted tuple and weighted by its exact multiplicity.
  static TermPtr symmetrize(CountFunction count, TermPtr inner);
  /// count over the listed member terms, each contributing multiplicity 1.
  static TermPtr count_apply(CountFunction count, std::vector<TermPtr> members);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  int domain_size() const { return domain_size_; }

  const FiniteOperation& op() const { return *op_; }
  int projection_index() const { return projection_index_; }
  const TermPtr& inner() const { return children_[0]; }
  const std::vector<int>& sigma() const { return sigma_; }
  const TermPtr& outer() const { return outer_; }
  const std::vector<TermPtr>& children() const { return children_; }
  const CountFunction& count() const { return *count_; }

private:
  Term() = default;
  Kind kind_ = Kind::Base;
  int arity_ = 0;
  int domain_size_ = 0;
  std::shared_ptr<const FiniteOperation> op_;
  int projection_index_ = 0;
  std::vector<int> sigma_;
  TermPtr outer_;
  std::vector<TermPtr> children_;
  std::shared_ptr<const CountFunction> count_;
};

/// Shared memo for term evaluation. One session may serve many evaluate and
/// tabulate calls over the same terms; distinct sessions are independent, so
/// concurrent sessions over shared terms are safe.
class EvalSession {
public:
  explicit EvalSession(std::size_t symmetrize_budget = kDefaultSymmetrizeBudget)
      : symmetrize_budget_(symmetrize_budget) {}

  std::size_t symmetrize_budget() const { return symmetrize_budget_; }

private:
  friend int evaluate(const TermPtr&, std::span<const int>, EvalSession&);
  friend const FiniteOperation& tabulate(const TermPtr&, EvalSession&);

  struct Key {
    const Term* node;
    std::vector<int> args;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  void retain(const TermPtr& term);

  std::size_t symmetrize_budget_;
  std::unordered_map<Key, int, KeyHash> memo_;
  std::unordered_map<const Term*, FiniteOperation> tables_;
  // caches are keyed by node address, so every node seen must stay alive
  // for the lifetime of the session
  std::unordered_map<const Term*, TermPtr> retained_;
};

int evaluate(const TermPtr& term, std::span<const int> args, EvalSession& session);
int evaluate(const TermPtr& term, std::span<const int> args); // one-shot session

/// Materializes the full value table of a term, reusing per-node tables
/// cached in the session. Symmetrize nodes are expanded once per value
/// multiset rather than per tuple.
const FiniteOperation& tabulate(const TermPtr& term, EvalSession& session);

} // namespace ppcp
