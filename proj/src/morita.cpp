#include "gpd/morita.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gpd {

namespace {

constexpr size_t kNoCap = std::numeric_limits<size_t>::max();

bool same_profile(const MoritaInvariant& a, int i, const MoritaInvariant& b, int j) {
  return a.isotropy[i].elements.size() == b.isotropy[j].elements.size() &&
         a.orders[i] == b.orders[j];
}

}  // namespace

MoritaInvariant morita_invariant(const FiniteGroupoid& g) {
  auto os = orbit_space(g);
  MoritaInvariant inv;
  inv.orbit_rep = os.representative;
  inv.isotropy = os.isotropy;
  for (const auto& grp : inv.isotropy) {
    auto o = element_orders(grp);
    std::sort(o.begin(), o.end());
    inv.orders.push_back(std::move(o));
  }
  return inv;
}

MoritaDecision morita_equivalent(GroupoidRef g, GroupoidRef h, size_t isotropy_cap) {
  auto ig = morita_invariant(*g);
  auto ih = morita_invariant(*h);
  MoritaDecision d;
  bool capped = false;
  for (const auto& grp : ig.isotropy)
    if (grp.elements.size() > isotropy_cap) capped = true;
  for (const auto& grp : ih.isotropy)
    if (grp.elements.size() > isotropy_cap) capped = true;
  d.exact = !capped;
  if (ig.orbit_rep.size() != ih.orbit_rep.size()) return d;

  // label all isotropy groups by isomorphism class, both sides together
  const int ng = (int)ig.orbit_rep.size();
  auto side = [&](int i) -> const MoritaInvariant& { return i < ng ? ig : ih; };
  auto at = [&](int i) { return i < ng ? i : i - ng; };
  const int total = ng + (int)ih.orbit_rep.size();
  std::vector<int> label(total, -1);
  std::vector<int> reps;
  auto same = [&](int i, int j) {
    if (!same_profile(side(i), at(i), side(j), at(j))) return false;
    if (capped) return true;
    return find_group_isomorphism(side(i).isotropy[at(i)], side(j).isotropy[at(j)])
        .has_value();
  };
  for (int i = 0; i < total; ++i) {
    for (int r : reps)
      if (same(r, i)) {
        label[i] = label[r];
        break;
      }
    if (label[i] == -1) {
      label[i] = (int)reps.size();
      reps.push_back(i);
    }
  }
  std::vector<int> gcount(reps.size(), 0), hcount(reps.size(), 0);
  for (int i = 0; i < ng; ++i) ++gcount[label[i]];
  for (int i = ng; i < total; ++i) ++hcount[label[i]];
  if (gcount != hcount) return d;
  d.equivalent = true;
  std::vector<bool> used(ih.orbit_rep.size(), false);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < (int)ih.orbit_rep.size(); ++j)
      if (!used[j] && label[ng + j] == label[i]) {
        used[j] = true;
        d.orbit_matching.push_back({i, j});
        break;
      }
  if (capped) return d;  // decision stands, witness needs exact isomorphisms

  // witness through the skeletons: restrict both sides to orbit
  // representatives, carry the matching across, include back
  auto osg = orbit_space(*g);
  auto osh = orbit_space(*h);
  auto skel_g = restrict_groupoid(g, ig.orbit_rep);
  auto skel_h = restrict_groupoid(h, ih.orbit_rep);
  GroupoidFunctor phi{skel_g, skel_h, std::vector<int>(skel_g->num_objects(), -1),
                      std::vector<int>(skel_g->num_arrows(), -1)};
  for (auto [i, j] : d.orbit_matching) {
    phi.obj_map[i] = j;
    auto iso = find_group_isomorphism(ig.isotropy[i], ih.isotropy[j]);
    if (!iso) throw std::logic_error("matched orbits lost their group isomorphism");
    for (size_t k = 0; k < osg.isotropy_arrows[i].size(); ++k) {
      int orig_g = osg.isotropy_arrows[i][k];
      int orig_h = osh.isotropy_arrows[j][(*iso)[k]];
      phi.arr_map[*skel_g->arrow_index(g->arrows[orig_g])] =
          *skel_h->arrow_index(h->arrows[orig_h]);
    }
  }
  GroupoidFunctor incl_g{skel_g, g, ig.orbit_rep, {}};
  for (const auto& name : skel_g->arrows) incl_g.arr_map.push_back(*g->arrow_index(name));
  GroupoidFunctor incl_h{skel_h, h, ih.orbit_rep, {}};
  for (const auto& name : skel_h->arrows) incl_h.arr_map.push_back(*h->arrow_index(name));
  auto back = invert(from_functor(incl_g));
  d.witness = compose(back.inverse, from_functor(compose_functors(incl_h, phi)));
  return d;
}

std::vector<Bibundle> hs_hom_classes(GroupoidRef g, GroupoidRef h, size_t cap) {
  bool truncated = false;
  auto fs = enumerate_functors(g, h, cap, &truncated);
  require(!truncated, errc::bound_exceeded, "functor enumeration overran the cap");
  std::vector<GroupoidFunctor> reps;
  for (const auto& f : fs) {
    bool fresh = true;
    for (const auto& r : reps)
      if (find_natural_isomorphism(r, f)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(f);
  }
  std::vector<Bibundle> out;
  for (const auto& r : reps) out.push_back(from_functor(r));
  return out;
}

HsFactorization hs_factorization(const Bibundle& p) {
  auto fact = factor_through_cover(p);
  HsFactorization out;
  out.domain = fact.refinement;
  out.equivalence = fact.projection;
  out.functor = fact.functor;
  auto back = invert(from_functor(out.equivalence));
  out.composite = compose(back.inverse, from_functor(out.functor));
  auto w = find_isomorphism(out.composite, p, kNoCap);
  if (!w) throw std::logic_error("factorization lost its isomorphism witness");
  out.witness = *w;
  return out;
}

}  // namespace gpd
