#include "ppcp/biaction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ppcp/errors.hpp"

namespace ppcp {

namespace {

using Map = std::vector<int>; // a point of X^Y

Map post_compose(const Perm& g, const Map& t) { // (g.t)(y) = g(t(y))
  Map out(t.size());
  for (std::size_t y = 0; y < t.size(); ++y) out[y] = g(t[y]);
  return out;
}

Map pre_compose(const Map& t, const Perm& h) { // t_h(y) = t(h(y))
  Map out(t.size());
  for (std::size_t y = 0; y < t.size(); ++y) out[y] = t[h(static_cast<int>(y))];
  return out;
}

} // namespace

BiactionReport biaction_subquotient(const Action& gact, const Action& hact,
                                    const std::vector<int>& t, std::size_t budget) {
  if (t.size() != static_cast<std::size_t>(hact.points()))
    throw std::invalid_argument("biaction_subquotient: t must be indexed by H's points");
  for (int v : t)
    if (v < 0 || v >= gact.points())
      throw std::invalid_argument("biaction_subquotient: t value out of X");

  const auto& g_imgs = gact.element_images();
  const auto& h_imgs = hact.element_images();
  const std::size_t work = g_imgs.size() * h_imgs.size() * t.size();
  if (work > budget) throw BudgetError("biaction enumeration exceeds budget", budget);

  std::set<Map> g_orbit, h_orbit;
  for (const auto& g : g_imgs) g_orbit.insert(post_compose(g, t));
  for (const auto& h : h_imgs) h_orbit.insert(pre_compose(t, h));
  std::set<Map> z;
  std::set_intersection(g_orbit.begin(), g_orbit.end(), h_orbit.begin(), h_orbit.end(),
                        std::inserter(z, z.begin()));

  std::vector<int> sg_t, sg_orb, sh_t, sh_orb;
  for (std::size_t i = 0; i < g_imgs.size(); ++i) {
    Map gt = post_compose(g_imgs[i], t);
    if (gt == t) sg_t.push_back(static_cast<int>(i));
    // setwise: g maps H(t) onto H(t)
    bool setwise = true;
    for (const auto& s : h_orbit) {
      if (!h_orbit.count(post_compose(g_imgs[i], s))) {
        setwise = false;
        break;
      }
    }
    if (setwise) sg_orb.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < h_imgs.size(); ++i) {
    if (pre_compose(t, h_imgs[i]) == t) sh_t.push_back(static_cast<int>(i));
    bool setwise = true;
    for (const auto& s : g_orbit) {
      if (!g_orbit.count(pre_compose(s, h_imgs[i]))) {
        setwise = false;
        break;
      }
    }
    if (setwise) sh_orb.push_back(static_cast<int>(i));
  }

  BiactionReport rep;
  rep.z_size = z.size();
  rep.stab_g_t = sg_t.size();
  rep.stab_g_orbit = sg_orb.size();
  rep.stab_h_t = sh_t.size();
  rep.stab_h_orbit = sh_orb.size();
  rep.quotient_order = z.size();

  auto fail = [&](const std::string& why) {
    rep.pass = false;
    rep.detail = why;
    return rep;
  };

  // bijection g stab_G(t) -> g.t from stab_G(H(t))/stab_G(t) onto Z
  std::set<Map> image_g;
  for (int i : sg_orb) image_g.insert(post_compose(g_imgs[i], t));
  if (image_g != z) return fail("G-side map does not surject onto Z");
  if (rep.stab_g_t == 0 || rep.stab_g_orbit % rep.stab_g_t != 0 ||
      rep.stab_g_orbit / rep.stab_g_t != rep.z_size)
    return fail("G-side coset count differs from |Z|");

  std::set<Map> image_h;
  for (int i : sh_orb) image_h.insert(pre_compose(t, h_imgs[i]));
  if (image_h != z) return fail("H-side map does not surject onto Z");
  if (rep.stab_h_t == 0 || rep.stab_h_orbit % rep.stab_h_t != 0 ||
      rep.stab_h_orbit / rep.stab_h_t != rep.z_size)
    return fail("H-side coset count differs from |Z|");

  // normality of stab(t) in the setwise stabilizer, on both sides
  const Group& G = gact.group();
  const Group& H = hact.group();
  auto is_normal_in = [](const Group& grp, const std::vector<int>& small,
                         const std::vector<int>& big) {
    std::set<int> small_set(small.begin(), small.end());
    for (int g : big)
      for (int n : small)
        if (!small_set.count(grp.mult(grp.mult(grp.inverse_index(g), n), g))) return false;
    return true;
  };
  if (!is_normal_in(G, sg_t, sg_orb)) return fail("stab_G(t) not normal in stab_G(H(t))");
  if (!is_normal_in(H, sh_t, sh_orb)) return fail("stab_H(t) not normal in stab_H(G(t))");

  // induced products on Z agree: for z1 = g.t and z2 = t_h, g.z2 == (z1)_h,
  // independently of the chosen representatives
  for (const auto& z1 : z) {
    for (const auto& z2 : z) {
      std::set<Map> via_g, via_h;
      for (int i : sg_orb)
        if (post_compose(g_imgs[i], t) == z1) via_g.insert(post_compose(g_imgs[i], z2));
      for (int i : sh_orb)
        if (pre_compose(t, h_imgs[i]) == z2) via_h.insert(pre_compose(z1, h_imgs[i]));
      if (via_g.size() != 1) return fail("G-side product not well defined");
      if (via_h.size() != 1) return fail("H-side product not well defined");
      if (*via_g.begin() != *via_h.begin()) return fail("induced products disagree");
    }
  }

  rep.pass = true;
  return rep;
}

} // namespace ppcp
