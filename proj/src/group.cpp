#include "ppcp/group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ppcp/errors.hpp"

namespace ppcp {

namespace {

struct BfsClosure {
  std::vector<Perm> elements;               // discovery order, identity first
  std::vector<std::pair<int, int>> parent;  // (parent bfs index, generator index)
};

BfsClosure bfs_closure(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("generate_elements: no generators");
  const int deg = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != deg) throw std::invalid_argument("generate_elements: generators of mixed degree");

  BfsClosure out;
  std::map<Perm, int> index;
  out.elements.emplace_back(deg);
  out.parent.emplace_back(-1, -1);
  index.emplace(out.elements[0], 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm next = out.elements[head] * gens[k];
      if (index.emplace(next, static_cast<int>(out.elements.size())).second) {
        out.elements.push_back(std::move(next));
        out.parent.emplace_back(static_cast<int>(head), static_cast<int>(k));
        if (out.elements.size() > cap)
          throw BudgetError("element closure exceeded cap of " + std::to_string(cap), cap);
      }
    }
  }
  return out;
}

} // namespace

std::vector<Perm> generate_elements(const std::vector<Perm>& generators, std::size_t cap) {
  auto closure = bfs_closure(generators, cap);
  std::sort(closure.elements.begin(), closure.elements.end());
  return std::move(closure.elements);
}

Group::Group(int degree, std::vector<Perm> generators, std::string name, std::size_t closure_cap)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)),
      closure_cap_(closure_cap), state_(std::make_shared<State>()) {
  if (degree_ < 1) throw std::invalid_argument("Group: degree must be positive");
  if (generators_.empty()) throw std::invalid_argument("Group: generator list must be nonempty");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("Group: generator degree mismatch");
}

Group Group::trivial(int degree, std::string name) {
  return Group(degree, {Perm(degree)}, std::move(name));
}

const Group::ElementData& Group::element_data() const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (!state_->elements) {
    auto closure = bfs_closure(generators_, closure_cap_);
    const std::size_t n = closure.elements.size();

    // Words in discovery order, then remapped to the sorted order.
    std::vector<std::vector<int>> bfs_words(n);
    for (std::size_t i = 1; i < n; ++i) {
      auto [p, k] = closure.parent[i];
      bfs_words[i] = bfs_words[p];
      bfs_words[i].push_back(k);
    }

    std::vector<int> by_rank(n);
    for (std::size_t i = 0; i < n; ++i) by_rank[i] = static_cast<int>(i);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int a, int b) { return closure.elements[a] < closure.elements[b]; });

    auto data = std::make_shared<ElementData>();
    data->elements.reserve(n);
    data->words.resize(n);
    data->orders.resize(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
      const int bfs_idx = by_rank[rank];
      data->elements.push_back(closure.elements[bfs_idx]);
      data->words[rank] = std::move(bfs_words[bfs_idx]);
      data->orders[rank] = data->elements.back().order();
      if (data->elements.back().is_identity()) data->identity_index = static_cast<int>(rank);
    }
    for (const auto& g : generators_) {
      auto it = std::lower_bound(data->elements.begin(), data->elements.end(), g);
      data->generator_indices.push_back(static_cast<int>(it - data->elements.begin()));
    }
    state_->elements = std::move(data);
  }
  return *state_->elements;
}

const Group::MultData& Group::mult_data() const {
  const auto& ed = element_data(); // outside the lock below to avoid recursion
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (!state_->mult) {
    const std::size_t n = ed.elements.size();
    if (n > 5000)
      throw BudgetError("multiplication table requested for group of order " + std::to_string(n), 5000);
    auto data = std::make_shared<MultData>();
    data->mult.assign(n * n, -1);
    data->inv.assign(n, -1);
    auto index_of_sorted = [&](const Perm& p) {
      auto it = std::lower_bound(ed.elements.begin(), ed.elements.end(), p);
      return static_cast<int>(it - ed.elements.begin());
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        data->mult[i * n + j] = index_of_sorted(ed.elements[i] * ed.elements[j]);
      data->inv[i] = index_of_sorted(ed.elements[i].inverse());
    }
    state_->mult = std::move(data);
  }
  return *state_->mult;
}

const std::vector<Perm>& Group::elements() const { return element_data().elements; }

int Group::index_of(const Perm& p) const {
  const auto& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || !(*it == p)) return -1;
  return static_cast<int>(it - els.begin());
}

int Group::identity_index() const { return element_data().identity_index; }

const std::vector<int>& Group::generator_indices() const { return element_data().generator_indices; }

const std::vector<int>& Group::word(int i) const { return element_data().words[i]; }

int Group::element_order(int i) const { return element_data().orders[i]; }

int Group::mult(int i, int j) const {
  const auto& md = mult_data();
  return md.mult[static_cast<std::size_t>(i) * order() + j];
}

int Group::inverse_index(int i) const { return mult_data().inv[i]; }

bool Group::is_subgroup_of(const Group& parent) const {
  if (degree_ != parent.degree()) return false;
  for (const auto& g : generators_)
    if (!parent.contains(g)) return false;
  return true;
}

} // namespace ppcp
