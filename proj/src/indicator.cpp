#include "ppcp/indicator.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppcp/errors.hpp"
#include "ppcp/polymorphism.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

namespace {

// table of f_sigma where f_sigma(t) = f(t o sigma) and sigma permutes the
// argument positions; both tables are over D^n in row-major order
std::vector<int> minor_table(const std::vector<int>& table, const Perm& sigma, int domain, int n) {
  std::vector<int> out(table.size());
  std::vector<int> t(n, 0);
  std::vector<int> permuted(n);
  std::size_t idx = 0;
  do {
    for (int i = 0; i < n; ++i) permuted[i] = t[sigma(i)];
    std::size_t pidx = 0;
    for (int i = 0; i < n; ++i) pidx = pidx * domain + permuted[i];
    out[idx++] = table[pidx];
  } while (next_tuple(t, domain));
  return out;
}

Structure indicator_from(const std::vector<FiniteOperation>& polys,
                         const std::vector<std::pair<std::string, Perm>>& relations, int domain,
                         int n) {
  std::vector<std::vector<int>> tables;
  tables.reserve(polys.size());
  for (const auto& f : polys) tables.push_back(f.table());

  auto index_of = [&](const std::vector<int>& t) {
    auto it = std::lower_bound(tables.begin(), tables.end(), t);
    if (it == tables.end() || *it != t)
      throw std::logic_error("indicator: a minor of a polymorphism is missing");
    return static_cast<int>(it - tables.begin());
  };

  Structure s(static_cast<int>(polys.size()));
  for (const auto& [name, sigma] : relations) {
    s.add_relation(name, 2);
    for (std::size_t fi = 0; fi < tables.size(); ++fi)
      s.add_tuple(name, {static_cast<int>(fi), index_of(minor_table(tables[fi], sigma, domain, n))});
  }
  return s;
}

void check_table_budget(int domain, int n, std::size_t budget) {
  auto cells = checked_pow(domain, n, budget);
  if (!cells) throw BudgetError("indicator: table space exceeds budget", budget);
  if (!checked_pow(domain, *cells, budget))
    throw BudgetError("indicator: table space |B|^(|B|^n) exceeds budget", budget);
}

} // namespace

Structure sn_indicator(const Structure& base, int n, std::size_t budget) {
  if (n < 2) throw std::invalid_argument("sn_indicator: need n >= 2");
  check_table_budget(base.domain_size(), n, budget);
  auto polys = all_polymorphisms(base, n, budget);

  std::vector<std::pair<std::string, Perm>> relations;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> images(n);
    for (int j = 0; j < n; ++j) images[j] = j;
    std::swap(images[i], images[i + 1]);
    relations.emplace_back("s" + std::to_string(i), Perm(std::move(images)));
  }
  return indicator_from(polys, relations, base.domain_size(), n);
}

Structure prim_indicator(const Structure& base, const Group& g, std::size_t budget,
                         std::size_t group_cap) {
  Action prim = prim_action(g, group_cap);
  const int n = prim.points();
  check_table_budget(base.domain_size(), n, budget);
  auto polys = all_polymorphisms(base, n, budget);

  std::vector<std::pair<std::string, Perm>> relations;
  for (std::size_t k = 0; k < prim.generator_images().size(); ++k)
    relations.emplace_back("g" + std::to_string(k), prim.generator_images()[k]);
  return indicator_from(polys, relations, base.domain_size(), n);
}

} // namespace ppcp
