#include "support/oracles.hpp"

#include <stdexcept>

#include "gpd/functor.hpp"

namespace oracles {

using namespace gpd;

std::vector<std::vector<int>> group_homs(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = (int)a.elements.size(), nb = (int)b.elements.size();
  std::vector<std::vector<int>> out;
  std::vector<int> m(na, 0);
  m[a.identity] = b.identity;
  std::vector<int> free_slots;
  for (int i = 0; i < na; ++i)
    if (i != a.identity) free_slots.push_back(i);
  std::vector<int> digit(free_slots.size(), 0);
  while (true) {
    for (size_t i = 0; i < free_slots.size(); ++i) m[free_slots[i]] = digit[i];
    bool hom = true;
    for (int x = 0; x < na && hom; ++x)
      for (int y = 0; y < na; ++y)
        if (m[a.op(x, y)] != b.op(m[x], m[y])) {
          hom = false;
          break;
        }
    if (hom) out.push_back(m);
    size_t k = 0;
    while (k < digit.size() && ++digit[k] == nb) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return out;
}

int hom_classes_up_to_conjugacy(const FiniteGroup& a, const FiniteGroup& b) {
  auto homs = group_homs(a, b);
  const int nb = (int)b.elements.size();
  auto conjugate = [&](const std::vector<int>& m1, const std::vector<int>& m2) {
    for (int c = 0; c < nb; ++c) {
      bool all = true;
      for (size_t x = 0; x < m1.size(); ++x)
        if (m2[x] != b.op(b.op(c, m1[x]), b.inv(c))) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };
  std::vector<std::vector<int>> reps;
  for (const auto& m : homs) {
    bool fresh = true;
    for (const auto& r : reps)
      if (conjugate(r, m)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(m);
  }
  return (int)reps.size();
}

bool biprincipal_bundle_exists(GroupoidRef g, GroupoidRef h, size_t cap) {
  bool truncated = false;
  auto fs = enumerate_functors(g, h, cap, &truncated);
  if (truncated) throw std::runtime_error("oracle functor enumeration overran its cap");
  const FiniteGroupoid& G = *g;
  const FiniteGroupoid& H = *h;
  for (const auto& f : fs) {
    // carrier of the candidate bundle: pairs (x, k) with f(x) = t(k)
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x < G.num_objects(); ++x)
      for (int k = 0; k < H.num_arrows(); ++k)
        if (f.obj_map[x] == H.tgt[k]) pts.push_back({x, k});
    bool good = true;
    // right side: fibers of x under right composition, free and transitive
    for (int x = 0; x < G.num_objects() && good; ++x) {
      std::vector<int> fiber;
      for (int k = 0; k < H.num_arrows(); ++k)
        if (f.obj_map[x] == H.tgt[k]) fiber.push_back(k);
      if (fiber.empty()) good = false;
      for (int k1 : fiber)
        for (int k2 : fiber) {
          int count = 0;
          for (int k = 0; k < H.num_arrows(); ++k)
            if (H.src[k1] == H.tgt[k] && H.compose(k1, k) == k2) ++count;
          if (count != 1) good = false;
        }
    }
    // left side over s(k): surjective, free, transitive
    for (int y = 0; y < H.num_objects() && good; ++y) {
      bool hit = false;
      for (auto& [x, k] : pts)
        if (H.src[k] == y) hit = true;
      if (!hit) good = false;
    }
    for (auto& [x, k] : pts) {
      if (!good) break;
      for (int g1 = 0; g1 < G.num_arrows() && good; ++g1) {
        if (G.src[g1] != x) continue;
        for (int g2 = g1 + 1; g2 < G.num_arrows(); ++g2) {
          if (G.src[g2] != x) continue;
          if (G.tgt[g1] == G.tgt[g2] &&
              H.compose(f.arr_map[g1], k) == H.compose(f.arr_map[g2], k))
            good = false;
        }
      }
    }
    for (auto& [x1, k1] : pts) {
      if (!good) break;
      for (auto& [x2, k2] : pts) {
        if (H.src[k1] != H.src[k2]) continue;
        bool connected = false;
        for (int a = 0; a < G.num_arrows(); ++a)
          if (G.src[a] == x1 && G.tgt[a] == x2 && H.compose(f.arr_map[a], k1) == k2)
            connected = true;
        if (!connected) good = false;
      }
    }
    if (good) return true;
  }
  return false;
}

bool is_equivariant_bijection(const Bibundle& p, const Bibundle& q,
                              const std::vector<int>& m) {
  if ((int)m.size() != p.size() || p.size() != q.size()) return false;
  std::vector<bool> used(q.size(), false);
  for (int a = 0; a < p.size(); ++a) {
    int b = m[a];
    if (b < 0 || b >= q.size() || used[b]) return false;
    used[b] = true;
    if (p.anchor_left[a] != q.anchor_left[b] || p.anchor_right[a] != q.anchor_right[b])
      return false;
  }
  for (int a = 0; a < p.size(); ++a) {
    for (int g = 0; g < p.left->num_arrows(); ++g)
      if (p.ldefined(g, a) && m[p.lapply(g, a)] != q.lapply(g, m[a])) return false;
    for (int h = 0; h < p.right->num_arrows(); ++h)
      if (p.rdefined(a, h) && m[p.rapply(a, h)] != q.rapply(m[a], h)) return false;
  }
  return true;
}

int gauge_class_count(const Graph& g, const FiniteGroup& k) {
  const int E = g.num_edges(), V = g.num_vertices(), n = k.size();
  long long total = 1;
  for (int e = 0; e < E; ++e) total *= n;
  auto pack = [&](const std::vector<int>& label) {
    long long idx = 0;
    for (int e = E - 1; e >= 0; --e) idx = idx * n + label[e];
    return idx;
  };
  std::vector<bool> seen(total, false);
  int orbits = 0;
  std::vector<int> label(E, 0), at(V, 0), moved(E, 0);
  for (long long start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++orbits;
    long long rest = start;
    for (int e = 0; e < E; ++e) {
      label[e] = (int)(rest % n);
      rest /= n;
    }
    std::fill(at.begin(), at.end(), 0);
    while (true) {
      for (int e = 0; e < E; ++e)
        moved[e] = k.op(k.op(at[g.ends[e][1]], label[e]), k.inv(at[g.ends[e][0]]));
      seen[pack(moved)] = true;
      int v = 0;
      while (v < V && at[v] == n - 1) at[v++] = 0;
      if (v == V) break;
      ++at[v];
    }
  }
  return orbits;
}

long long functor_class_count(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  auto og = orbit_space(g);
  auto oh = orbit_space(h);
  long long total = 1;
  for (const auto& gi : og.isotropy) {
    long long per_orbit = 0;
    for (const auto& hj : oh.isotropy) per_orbit += hom_classes_up_to_conjugacy(gi, hj);
    total *= per_orbit;
  }
  return total;
}

}  // namespace oracles
