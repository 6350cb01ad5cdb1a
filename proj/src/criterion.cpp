#include "ppcp/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

#include "ppcp/act_struct.hpp"
#include "ppcp/errors.hpp"
#include "ppcp/minor.hpp"
#include "ppcp/polymorphism.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

namespace {

// bitset over points, any point count
struct PointSet {
  std::vector<std::uint64_t> words;
  explicit PointSet(int n, bool full) : words((n + 63) / 64, full ? ~0ull : 0ull) {
    if (full && n % 64) words.back() = (1ull << (n % 64)) - 1;
  }
  void intersect(const PointSet& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= o.words[i];
  }
  bool empty() const {
    for (auto w : words)
      if (w) return false;
    return true;
  }
};

struct CriterionData {
  const Action& g;
  const Action& h;
  int x_points;
  int y_points;
  std::vector<PointSet> fixed; // per g-element, the fixed point set

  CriterionData(const Action& gact, const Action& hact)
      : g(gact), h(hact), x_points(gact.points()), y_points(hact.points()) {
    fixed.reserve(g.element_images().size());
    for (const auto& p : g.element_images()) {
      PointSet s(x_points, false);
      for (int x = 0; x < x_points; ++x)
        if (p(x) == x) s.words[x / 64] |= 1ull << (x % 64);
      fixed.push_back(std::move(s));
    }
  }

  // stab_G(H(t)) = {g : g.t in H(t)}; post- and pre-composition commute, so
  // membership of g.t in the orbit is equivalent to setwise stabilization.
  bool orbit_stabilizer_has_fixed_point(const std::vector<int>& t) const {
    std::vector<std::vector<int>> h_orbit;
    h_orbit.reserve(h.element_images().size());
    for (const auto& ph : h.element_images()) {
      std::vector<int> th(t.size());
      for (std::size_t y = 0; y < t.size(); ++y) th[y] = t[ph(static_cast<int>(y))];
      h_orbit.push_back(std::move(th));
    }
    std::sort(h_orbit.begin(), h_orbit.end());
    h_orbit.erase(std::unique(h_orbit.begin(), h_orbit.end()), h_orbit.end());

    PointSet common(x_points, true);
    std::vector<int> gt(t.size());
    for (std::size_t gi = 0; gi < g.element_images().size(); ++gi) {
      const Perm& pg = g.element_images()[gi];
      for (std::size_t y = 0; y < t.size(); ++y) gt[y] = pg(t[y]);
      if (!std::binary_search(h_orbit.begin(), h_orbit.end(), gt)) continue;
      common.intersect(fixed[gi]);
      if (common.empty()) return false;
    }
    return true;
  }

  // multiset variant: H realizes the full symmetric group on Y, so the orbit
  // of t is determined by its value multiset
  bool multiset_stabilizer_has_fixed_point(const std::vector<int>& counts) const {
    PointSet common(x_points, true);
    std::vector<int> moved(counts.size());
    for (std::size_t gi = 0; gi < g.element_images().size(); ++gi) {
      const Perm& pg = g.element_images()[gi];
      for (int x = 0; x < x_points; ++x) moved[pg(x)] = counts[x];
      if (moved != counts) continue;
      common.intersect(fixed[gi]);
      if (common.empty()) return false;
    }
    return true;
  }
};

bool h_is_full_symmetric(const Action& hact) {
  if (hact.points() > 12) return false; // 12! < 2^63, larger never arises here
  return static_cast<long long>(hact.element_images().size()) != 0 &&
         static_cast<long long>(std::set<Perm>(hact.element_images().begin(),
                                               hact.element_images().end())
                                    .size()) == factorial(hact.points());
}

} // namespace

bool action_criterion(const Action& gact, const Action& hact, std::size_t map_budget, int threads) {
  CriterionData data(gact, hact);
  const int X = data.x_points;
  const int Y = data.y_points;

  // witness probe: the identity map settles the self-condition immediately
  if (X == Y) {
    std::vector<int> t(Y);
    for (int y = 0; y < Y; ++y) t[y] = y;
    if (!data.orbit_stabilizer_has_fixed_point(t)) return false;
  }

  if (h_is_full_symmetric(hact)) {
    // enumerate multisets of size Y over X as count vectors
    std::vector<int> counts(X, 0);
    std::size_t total = 1;
    for (int i = 0; i < Y; ++i) {
      total = total * (X + i) / (i + 1); // C(X+Y-1, Y) built incrementally
    }
    if (total > map_budget) throw BudgetError("multiset enumeration exceeds budget", map_budget);
    // recursive generation, flattened
    std::atomic<bool> found_witness{false};
    std::vector<std::vector<int>> all;
    all.reserve(total);
    std::function<void(int, int)> gen = [&](int pos, int remaining) {
      if (pos == X - 1) {
        counts[pos] = remaining;
        all.push_back(counts);
        return;
      }
      for (int c = remaining; c >= 0; --c) {
        counts[pos] = c;
        gen(pos + 1, remaining - c);
      }
      counts[pos] = 0;
    };
    gen(0, Y);

    const int nthreads = std::max(1, threads);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> cursor{0};
    for (int w = 0; w < nthreads; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = cursor.fetch_add(256);
          if (i >= all.size() || found_witness.load()) return;
          std::size_t end = std::min(all.size(), i + 256);
          for (; i < end; ++i) {
            if (!data.multiset_stabilizer_has_fixed_point(all[i])) {
              found_witness.store(true);
              return;
            }
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    return !found_witness.load();
  }

  auto total = checked_pow(static_cast<std::size_t>(X), static_cast<std::size_t>(Y), map_budget);
  if (!total)
    throw BudgetError("map enumeration |X|^|Y| exceeds budget and no witness was found", map_budget);

  const int nthreads = std::max(1, threads);
  std::atomic<bool> found_witness{false};
  std::atomic<std::size_t> cursor{0};
  const std::size_t chunk = 1024;
  std::vector<std::thread> pool;
  for (int w = 0; w < nthreads; ++w) {
    pool.emplace_back([&] {
      std::vector<int> t(Y);
      for (;;) {
        std::size_t start = cursor.fetch_add(chunk);
        if (start >= *total || found_witness.load()) return;
        std::size_t end = std::min(*total, start + chunk);
        for (std::size_t idx = start; idx < end; ++idx) {
          std::size_t rest = idx;
          for (int y = Y - 1; y >= 0; --y) {
            t[y] = static_cast<int>(rest % X);
            rest /= X;
          }
          if (!data.orbit_stabilizer_has_fixed_point(t)) {
            found_witness.store(true);
            return;
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return !found_witness.load();
}

FsSpectrum fs_spectrum(const Group& g, int upto, std::size_t group_cap) {
  if (g.order() < 2) throw std::invalid_argument("fs_spectrum: trivial group");
  if (upto < 1) throw std::invalid_argument("fs_spectrum: bound must be positive");
  auto prim = prim_action(g, group_cap);
  FsSpectrum out;
  out.upto = upto;
  for (const auto& orbit : orbits(prim)) out.component_sizes.push_back(orbit.size());

  std::vector<char> reachable(upto + 1, 0);
  reachable[0] = 1;
  for (int k = 1; k <= upto; ++k) {
    for (std::size_t s : out.component_sizes) {
      if (static_cast<int>(s) <= k && reachable[k - s]) {
        reachable[k] = 1;
        break;
      }
    }
    if (reachable[k]) out.failing_arities.push_back(k);
  }
  out.smallest_failing =
      static_cast<int>(*std::min_element(out.component_sizes.begin(), out.component_sizes.end()));
  out.largest_index =
      static_cast<int>(*std::max_element(out.component_sizes.begin(), out.component_sizes.end()));
  out.index_reading_differs = out.largest_index != out.smallest_failing;
  return out;
}

FiniteOperation minority_polymorphism(const Action& a) {
  FiniteOperation m = FiniteOperation::minority(a.points());
  if (!op_satisfies(m, maltsev_condition()))
    throw std::logic_error("minority_polymorphism: quasi Maltsev check failed");
  if (!is_polymorphism(structure_of_action(a, LabelMode::Generators), m))
    throw std::logic_error("minority_polymorphism: preservation check failed");
  return m;
}

} // namespace ppcp
