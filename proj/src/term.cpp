#include "ppcp/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppcp/errors.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

CountFunction::CountFunction(int domain_size, long long family_size, std::string name,
                             std::function<int(std::span<const long long>)> rule)
    : domain_size_(domain_size), family_size_(family_size), name_(std::move(name)),
      rule_(std::move(rule)) {
  if (domain_size_ < 1 || family_size_ < 1)
    throw std::invalid_argument("CountFunction: bad signature");
  // idempotence on constant multisets is part of the contract
  std::vector<long long> counts(domain_size_, 0);
  for (int v = 0; v < domain_size_; ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    counts[v] = family_size_;
    if (rule_(counts) != v)
      throw std::invalid_argument("CountFunction: rule is not idempotent on constant multisets");
  }
}

int CountFunction::apply(std::span<const long long> counts) const {
  long long sum = 0;
  for (long long c : counts) sum += c;
  if (static_cast<int>(counts.size()) != domain_size_ || sum != family_size_)
    throw std::invalid_argument("CountFunction: multiplicity vector does not match family");
  int v = rule_(counts);
  if (v < 0 || v >= domain_size_) throw std::logic_error("CountFunction: rule value out of domain");
  return v;
}

CountFunction boolean_fs_family(long long family_size) {
  return CountFunction(2, family_size, "bool-threshold:" + std::to_string(family_size),
                       [family_size](std::span<const long long> counts) {
                         return counts[1] * 2 >= family_size ? 1 : 0;
                       });
}

TermPtr Term::base(FiniteOperation op) {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Base;
  t->arity_ = op.arity();
  t->domain_size_ = op.domain_size();
  t->op_ = std::make_shared<const FiniteOperation>(std::move(op));
  return t;
}

TermPtr Term::projection(int domain_size, int arity, int index) {
  if (index < 0 || index >= arity) throw std::invalid_argument("Term::projection: index out of range");
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Projection;
  t->arity_ = arity;
  t->domain_size_ = domain_size;
  t->projection_index_ = index;
  return t;
}

TermPtr Term::minor(TermPtr inner, std::vector<int> sigma, int arity) {
  if (!inner) throw std::invalid_argument("Term::minor: null inner term");
  if (static_cast<int>(sigma.size()) != inner->arity())
    throw std::invalid_argument("Term::minor: sigma must cover the inner arity");
  for (int s : sigma)
    if (s < 0 || s >= arity) throw std::invalid_argument("Term::minor: sigma out of range");
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Minor;
  t->arity_ = arity;
  t->domain_size_ = inner->domain_size();
  t->children_ = {std::move(inner)};
  t->sigma_ = std::move(sigma);
  return t;
}

TermPtr Term::compose(TermPtr outer, std::vector<TermPtr> inners) {
  if (!outer || inners.empty()) throw std::invalid_argument("Term::compose: missing terms");
  if (outer->arity() != static_cast<int>(inners.size()))
    throw std::invalid_argument("Term::compose: outer arity must equal the inner count");
  const int arity = inners[0]->arity();
  for (const auto& in : inners) {
    if (!in || in->arity() != arity || in->domain_size() != outer->domain_size())
      throw std::invalid_argument("Term::compose: inner terms must share arity and domain");
  }
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Compose;
  t->arity_ = arity;
  t->domain_size_ = outer->domain_size();
  t->outer_ = std::move(outer);
  t->children_ = std::move(inners);
  return t;
}

TermPtr Term::symmetrize(CountFunction count, TermPtr inner) {
  if (!inner) throw std::invalid_argument("Term::symmetrize: null inner term");
  if (count.domain_size() != inner->domain_size())
    throw std::invalid_argument("Term::symmetrize: domain mismatch");
  if (count.family_size() != factorial(inner->arity()))
    throw std::invalid_argument("Term::symmetrize: count family must be arity!");
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::Symmetrize;
  t->arity_ = inner->arity();
  t->domain_size_ = inner->domain_size();
  t->children_ = {std::move(inner)};
  t->count_ = std::make_shared<const CountFunction>(std::move(count));
  return t;
}

TermPtr Term::count_apply(CountFunction count, std::vector<TermPtr> members) {
  if (members.empty()) throw std::invalid_argument("Term::count_apply: empty family");
  if (count.family_size() != static_cast<long long>(members.size()))
    throw std::invalid_argument("Term::count_apply: count family must match the member count");
  const int arity = members[0]->arity();
  for (const auto& m : members) {
    if (!m || m->arity() != arity || m->domain_size() != count.domain_size())
      throw std::invalid_argument("Term::count_apply: members must share arity and domain");
  }
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = Kind::CountApply;
  t->arity_ = arity;
  t->domain_size_ = count.domain_size();
  t->children_ = std::move(members);
  t->count_ = std::make_shared<const CountFunction>(std::move(count));
  return t;
}

std::size_t EvalSession::KeyHash::operator()(const Key& k) const {
  return hash_range(k.args) ^ std::hash<const void*>()(k.node);
}

void EvalSession::retain(const TermPtr& term) { retained_.emplace(term.get(), term); }

namespace {

// distinct rearrangements of the sorted tuple, each with weight prod(m_v!)
struct Arrangements {
  std::vector<int> sorted;
  long long weight = 1;
  std::size_t count = 1;

  Arrangements(std::span<const int> args, int domain) {
    sorted.assign(args.begin(), args.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<long long> mult(domain, 0);
    for (int a : sorted) mult[a]++;
    long long numerator = factorial(static_cast<int>(sorted.size()));
    for (int v = 0; v < domain; ++v) {
      weight *= factorial(static_cast<int>(mult[v]));
    }
    count = static_cast<std::size_t>(numerator / weight);
  }
};

} // namespace

int evaluate(const TermPtr& term, std::span<const int> args, EvalSession& session) {
  if (static_cast<int>(args.size()) != term->arity())
    throw std::invalid_argument("evaluate: argument count mismatch");
  for (int a : args)
    if (a < 0 || a >= term->domain_size()) throw std::invalid_argument("evaluate: value out of domain");

  session.retain(term);
  EvalSession::Key key{term.get(), std::vector<int>(args.begin(), args.end())};
  if (auto it = session.memo_.find(key); it != session.memo_.end()) return it->second;

  int result = 0;
  switch (term->kind()) {
    case Term::Kind::Base:
      result = term->op()(args);
      break;
    case Term::Kind::Projection:
      result = args[term->projection_index()];
      break;
    case Term::Kind::Minor: {
      std::vector<int> inner_args(term->sigma().size());
      for (std::size_t i = 0; i < inner_args.size(); ++i) inner_args[i] = args[term->sigma()[i]];
      result = evaluate(term->inner(), inner_args, session);
      break;
    }
    case Term::Kind::Compose: {
      std::vector<int> outer_args(term->children().size());
      for (std::size_t i = 0; i < outer_args.size(); ++i)
        outer_args[i] = evaluate(term->children()[i], args, session);
      result = term->outer()->kind() == Term::Kind::Base
                   ? term->outer()->op()(outer_args)
                   : evaluate(term->outer(), outer_args, session);
      break;
    }
    case Term::Kind::Symmetrize: {
      Arrangements arr(args, term->domain_size());
      if (arr.count > session.symmetrize_budget())
        throw BudgetError("symmetrize: distinct permuted tuples exceed budget",
                          session.symmetrize_budget());
      std::vector<long long> counts(term->domain_size(), 0);
      std::vector<int> u = arr.sorted;
      long long seen = 0;
      do {
        counts[evaluate(term->inner(), u, session)] += arr.weight;
        seen += arr.weight;
      } while (std::next_permutation(u.begin(), u.end()));
      if (seen != term->count().family_size())
        throw std::logic_error("symmetrize: multiplicities do not sum to arity!");
      result = term->count().apply(counts);
      break;
    }
    case Term::Kind::CountApply: {
      std::vector<long long> counts(term->domain_size(), 0);
      for (const auto& member : term->children()) counts[evaluate(member, args, session)]++;
      result = term->count().apply(counts);
      break;
    }
  }
  session.memo_.emplace(std::move(key), result);
  return result;
}

int evaluate(const TermPtr& term, std::span<const int> args) {
  EvalSession session;
  return evaluate(term, args, session);
}

const FiniteOperation& tabulate(const TermPtr& term, EvalSession& session) {
  session.retain(term);
  if (auto it = session.tables_.find(term.get()); it != session.tables_.end()) return it->second;

  const int domain = term->domain_size();
  const int arity = term->arity();
  auto size = checked_pow(domain, arity, 1ull << 28);
  if (!size) throw BudgetError("tabulate: table too large", 1ull << 28);

  std::vector<int> table(*size);
  switch (term->kind()) {
    case Term::Kind::Base:
      table = term->op().table();
      break;
    case Term::Kind::Projection: {
      std::vector<int> args(arity, 0);
      std::size_t idx = 0;
      do {
        table[idx++] = args[term->projection_index()];
      } while (next_tuple(args, domain));
      break;
    }
    case Term::Kind::Minor: {
      const auto& inner = tabulate(term->inner(), session);
      std::vector<int> args(arity, 0);
      std::vector<int> in_args(term->sigma().size());
      std::size_t idx = 0;
      do {
        for (std::size_t i = 0; i < in_args.size(); ++i) in_args[i] = args[term->sigma()[i]];
        table[idx++] = inner(in_args);
      } while (next_tuple(args, domain));
      break;
    }
    case Term::Kind::Compose: {
      std::vector<const FiniteOperation*> inner_tabs;
      inner_tabs.reserve(term->children().size());
      for (const auto& c : term->children()) inner_tabs.push_back(&tabulate(c, session));
      const auto& outer = tabulate(term->outer(), session);
      std::vector<int> outer_args(term->children().size());
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        for (std::size_t i = 0; i < inner_tabs.size(); ++i)
          outer_args[i] = inner_tabs[i]->table()[idx];
        table[idx] = outer(outer_args);
      }
      break;
    }
    case Term::Kind::Symmetrize: {
      // fully symmetric by construction: evaluate once per value multiset
      const auto& inner = tabulate(term->inner(), session);
      std::unordered_map<std::vector<int>, int, VectorHash> by_multiset;
      std::vector<int> args(arity, 0);
      std::size_t idx = 0;
      do {
        std::vector<int> sorted(args);
        std::sort(sorted.begin(), sorted.end());
        auto it = by_multiset.find(sorted);
        if (it == by_multiset.end()) {
          Arrangements arr(sorted, domain);
          if (arr.count > session.symmetrize_budget())
            throw BudgetError("symmetrize: distinct permuted tuples exceed budget",
                              session.symmetrize_budget());
          std::vector<long long> counts(domain, 0);
          std::vector<int> u = sorted;
          do {
            counts[inner(u)] += arr.weight;
          } while (std::next_permutation(u.begin(), u.end()));
          it = by_multiset.emplace(std::move(sorted), term->count().apply(counts)).first;
        }
        table[idx++] = it->second;
      } while (next_tuple(args, domain));
      break;
    }
    case Term::Kind::CountApply: {
      std::vector<const FiniteOperation*> member_tabs;
      member_tabs.reserve(term->children().size());
      for (const auto& c : term->children()) member_tabs.push_back(&tabulate(c, session));
      std::vector<long long> counts(domain);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto* m : member_tabs) counts[m->table()[idx]]++;
        table[idx] = term->count().apply(counts);
      }
      break;
    }
  }
  auto [it, inserted] =
      session.tables_.emplace(term.get(), FiniteOperation(domain, arity, std::move(table)));
  return it->second;
}

} // namespace ppcp
