#include "gpd/bibundle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gpd {

namespace {

constexpr size_t kNoCap = std::numeric_limits<size_t>::max();

// Suffixes every name with its position if the plain names collide.
void dedupe(std::vector<std::string>& names) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() == names.size()) return;
  for (size_t i = 0; i < names.size(); ++i) names[i] += "#" + std::to_string(i);
}

}  // namespace

LeftAction Bibundle::left_action() const {
  return LeftAction{left, carrier, anchor_left, left_act};
}

RightAction Bibundle::right_action() const {
  return RightAction{right, carrier, anchor_right, right_act};
}

PrincipalBundle Bibundle::right_bundle() const {
  return PrincipalBundle{right_action(), left->objects, anchor_left};
}

ValidationReport validate_bibundle(const Bibundle& b) {
  ValidationReport rep;
  const size_t n = b.carrier.size();
  if (!b.left || !b.right) {
    rep.add("MissingTable", "both groupoid references are required");
    return rep;
  }
  if (b.anchor_left.size() != n || b.anchor_right.size() != n) {
    rep.add("AnchorShape", "one anchor pair per carrier point required");
    return rep;
  }
  if (b.left_act.size() != (size_t)b.left->num_arrows() * n ||
      b.right_act.size() != n * (size_t)b.right->num_arrows()) {
    rep.add("TableShape", "action table has the wrong size");
    return rep;
  }
  {
    std::set<std::string> seen(b.carrier.begin(), b.carrier.end());
    if (seen.size() != n) {
      rep.add("DuplicateName", "carrier points must have distinct names");
      return rep;
    }
  }
  for (int a : b.anchor_left)
    if (a < 0 || a >= b.left->num_objects()) {
      rep.add("RangeError", "left anchor out of range");
      return rep;
    }
  for (int a : b.anchor_right)
    if (a < 0 || a >= b.right->num_objects()) {
      rep.add("RangeError", "right anchor out of range");
      return rep;
    }
  for (const auto& v : validate_left_action(b.left_action()).violations)
    rep.add(v.rule, "left action: " + v.detail);
  for (const auto& v : validate_right_action(b.right_action()).violations)
    rep.add(v.rule, "right action: " + v.detail);
  if (!rep.ok()) return rep;

  const FiniteGroupoid& G = *b.left;
  const FiniteGroupoid& H = *b.right;
  for (int g = 0; g < G.num_arrows(); ++g)
    for (int p = 0; p < (int)n; ++p) {
      if (!b.ldefined(g, p)) continue;
      if (b.anchor_right[b.lapply(g, p)] != b.anchor_right[p])
        rep.add("AnchorInvariance",
                "right anchor moves under " + G.arrows[g] + " · " + b.carrier[p]);
    }
  for (int p = 0; p < (int)n; ++p)
    for (int h = 0; h < H.num_arrows(); ++h) {
      if (!b.rdefined(p, h)) continue;
      if (b.anchor_left[b.rapply(p, h)] != b.anchor_left[p])
        rep.add("AnchorInvariance",
                "left anchor moves under " + b.carrier[p] + " · " + H.arrows[h]);
    }
  if (!rep.ok()) return rep;
  for (int g = 0; g < G.num_arrows(); ++g)
    for (int p = 0; p < (int)n; ++p) {
      if (!b.ldefined(g, p)) continue;
      for (int h = 0; h < H.num_arrows(); ++h) {
        if (!b.rdefined(p, h)) continue;
        if (b.lapply(g, b.rapply(p, h)) != b.rapply(b.lapply(g, p), h))
          rep.add("CommutingActions",
                  G.arrows[g] + " · " + b.carrier[p] + " · " + H.arrows[h]);
      }
    }
  if (!rep.ok()) return rep;
  auto pr = is_principal(b.right_bundle());
  if (!pr.surjective)
    rep.add("NotPrincipal", "left anchor misses " + G.objects[*pr.missed_base]);
  if (!pr.free) {
    auto [p, h1, h2] = *pr.collision;
    rep.add("NotPrincipal", "right action not free: " + b.carrier[p] + " · " + H.arrows[h1] +
                                " = " + b.carrier[p] + " · " + H.arrows[h2]);
  }
  if (!pr.transitive) {
    auto [p1, p2] = *pr.disconnected;
    rep.add("NotPrincipal", "right action not transitive on the fiber of " + b.carrier[p1] +
                                " and " + b.carrier[p2]);
  }
  return rep;
}

Bibundle checked(Bibundle b) {
  auto rep = validate_bibundle(b);
  if (!rep.ok())
    throw std::logic_error("internal construction produced an invalid bibundle:\n" +
                           rep.to_string());
  return b;
}

Bibundle from_functor(const GroupoidFunctor& f) {
  const FiniteGroupoid& G = *f.source;
  const FiniteGroupoid& H = *f.target;
  Bibundle b;
  b.left = f.source;
  b.right = f.target;
  std::vector<std::pair<int, int>> pts;  // (x, h) with f(x) = t(h)
  std::unordered_map<long long, int> index;
  for (int x = 0; x < G.num_objects(); ++x)
    for (int h = 0; h < H.num_arrows(); ++h)
      if (f.obj_map[x] == H.tgt[h]) {
        index[(long long)x * H.num_arrows() + h] = (int)pts.size();
        pts.push_back({x, h});
        b.carrier.push_back("(" + G.objects[x] + "|" + H.arrows[h] + ")");
        b.anchor_left.push_back(x);
        b.anchor_right.push_back(H.src[h]);
      }
  dedupe(b.carrier);
  const int n = (int)pts.size();
  b.left_act.assign((size_t)G.num_arrows() * n, -1);
  b.right_act.assign((size_t)n * H.num_arrows(), -1);
  for (int g = 0; g < G.num_arrows(); ++g)
    for (int p = 0; p < n; ++p) {
      auto [x, h] = pts[p];
      if (G.src[g] != x) continue;
      int hh = H.compose(f.arr_map[g], h);
      b.left_act[(size_t)g * n + p] = index.at((long long)G.tgt[g] * H.num_arrows() + hh);
    }
  for (int p = 0; p < n; ++p) {
    auto [x, h] = pts[p];
    for (int k = 0; k < H.num_arrows(); ++k) {
      if (H.src[h] != H.tgt[k]) continue;
      b.right_act[(size_t)p * H.num_arrows() + k] =
          index.at((long long)x * H.num_arrows() + H.compose(h, k));
    }
  }
  return checked(std::move(b));
}

Bibundle compose(const Bibundle& p, const Bibundle& q) {
  require(*p.right == *q.left, errc::middle_mismatch,
          "middle groupoids of the composition factors differ");
  const FiniteGroupoid& H = *p.right;
  std::vector<std::pair<int, int>> pairs;  // (a, b) with aR(a) = aL(b)
  std::unordered_map<long long, int> index;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (p.anchor_right[a] == q.anchor_left[b]) {
        index[(long long)a * q.size() + b] = (int)pairs.size();
        pairs.push_back({a, b});
      }
  const int m = (int)pairs.size();

  // orbits of (a, b) · h = (a·h, h⁻¹·b)
  std::vector<int> root(m);
  for (int i = 0; i < m; ++i) root[i] = i;
  auto find = [&](int i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (int i = 0; i < m; ++i) {
    auto [a, b] = pairs[i];
    for (int h = 0; h < H.num_arrows(); ++h) {
      if (!p.rdefined(a, h)) continue;
      int j = index.at((long long)p.rapply(a, h) * q.size() + q.lapply(H.inv[h], b));
      int ri = find(i), rj = find(j);
      if (ri != rj) root[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::vector<int> class_of(m, -1), reps;
  for (int i = 0; i < m; ++i)
    if (find(i) == i) {
      class_of[i] = (int)reps.size();
      reps.push_back(i);
    }
  for (int i = 0; i < m; ++i) class_of[i] = class_of[find(i)];

  Bibundle r;
  r.left = p.left;
  r.right = q.right;
  for (int rep : reps) {
    auto [a, b] = pairs[rep];
    r.carrier.push_back("[" + p.carrier[a] + "|" + q.carrier[b] + "]");
    r.anchor_left.push_back(p.anchor_left[a]);
    r.anchor_right.push_back(q.anchor_right[b]);
  }
  dedupe(r.carrier);
  const int n = (int)reps.size();
  const FiniteGroupoid& G = *p.left;
  const FiniteGroupoid& K = *q.right;
  r.left_act.assign((size_t)G.num_arrows() * n, -1);
  r.right_act.assign((size_t)n * K.num_arrows(), -1);
  for (int c = 0; c < n; ++c) {
    auto [a, b] = pairs[reps[c]];
    for (int g = 0; g < G.num_arrows(); ++g) {
      if (!p.ldefined(g, a)) continue;
      r.left_act[(size_t)g * n + c] =
          class_of[index.at((long long)p.lapply(g, a) * q.size() + b)];
    }
    for (int k = 0; k < K.num_arrows(); ++k) {
      if (!q.rdefined(b, k)) continue;
      r.right_act[(size_t)c * K.num_arrows() + k] =
          class_of[index.at((long long)a * q.size() + q.rapply(b, k))];
    }
  }
  return checked(std::move(r));
}

namespace {

// Propagating backtracker behind find_isomorphism.  Assigning one point
// forces its whole orbit under both actions, so the branching factor is one
// candidate image per orbit.
struct IsoSearch {
  const Bibundle &p, &q;
  std::vector<int> img, pre;

  bool compatible(int a, int b) const {
    return p.anchor_left[a] == q.anchor_left[b] && p.anchor_right[a] == q.anchor_right[b];
  }

  bool propagate(int a0, int b0, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{a0, b0}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (img[a] != -1) {
        if (img[a] != b) return false;
        continue;
      }
      if (pre[b] != -1 || !compatible(a, b)) return false;
      img[a] = b;
      pre[b] = a;
      trail.push_back(a);
      for (int g = 0; g < p.left->num_arrows(); ++g)
        if (p.ldefined(g, a)) queue.push_back({p.lapply(g, a), q.lapply(g, b)});
      for (int h = 0; h < p.right->num_arrows(); ++h)
        if (p.rdefined(a, h)) queue.push_back({p.rapply(a, h), q.rapply(b, h)});
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int a : trail) {
      pre[img[a]] = -1;
      img[a] = -1;
    }
  }

  bool extend() {
    int a = -1;
    for (int i = 0; i < p.size(); ++i)
      if (img[i] == -1) {
        a = i;
        break;
      }
    if (a == -1) return true;
    for (int b = 0; b < q.size(); ++b) {
      if (pre[b] != -1 || !compatible(a, b)) continue;
      std::vector<int> trail;
      if (propagate(a, b, trail) && extend()) return true;
      undo(trail);
    }
    return false;
  }

  bool verify() const {
    for (int a = 0; a < p.size(); ++a) {
      if (!compatible(a, img[a])) return false;
      for (int g = 0; g < p.left->num_arrows(); ++g)
        if (p.ldefined(g, a) && img[p.lapply(g, a)] != q.lapply(g, img[a])) return false;
      for (int h = 0; h < p.right->num_arrows(); ++h)
        if (p.rdefined(a, h) && img[p.rapply(a, h)] != q.rapply(img[a], h)) return false;
    }
    return true;
  }
};

std::optional<std::vector<int>> find_isomorphism_impl(const Bibundle& p, const Bibundle& q,
                                                      size_t cap) {
  require(*p.left == *q.left && *p.right == *q.right, errc::endpoint_mismatch,
          "isomorphism candidates must share both groupoids");
  require((size_t)p.size() <= cap && (size_t)q.size() <= cap, errc::bound_exceeded,
          "carrier larger than the search cap");
  if (p.size() != q.size()) return std::nullopt;
  IsoSearch s{p, q, std::vector<int>(p.size(), -1), std::vector<int>(q.size(), -1)};
  if (!s.extend()) return std::nullopt;
  if (!s.verify())
    throw std::logic_error("isomorphism search produced a non-equivariant map");
  return s.img;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Bibundle& p, const Bibundle& q,
                                                 size_t cap) {
  return find_isomorphism_impl(p, q, cap);
}

TorsorReport is_left_principal(const Bibundle& b) {
  TorsorReport rep;
  const FiniteGroupoid& G = *b.left;
  std::vector<bool> hit(b.right->num_objects(), false);
  for (int a : b.anchor_right) hit[a] = true;
  for (size_t y = 0; y < hit.size(); ++y)
    if (!hit[y]) {
      rep.surjective = false;
      rep.missed_base = (int)y;
      break;
    }
  for (int p = 0; p < b.size() && rep.free; ++p)
    for (int g1 = 0; g1 < G.num_arrows() && rep.free; ++g1) {
      if (!b.ldefined(g1, p)) continue;
      for (int g2 = g1 + 1; g2 < G.num_arrows(); ++g2) {
        if (!b.ldefined(g2, p)) continue;
        if (b.lapply(g1, p) == b.lapply(g2, p)) {
          rep.free = false;
          rep.collision = {{g1, g2, p}};
          break;
        }
      }
    }
  for (int p1 = 0; p1 < b.size() && rep.transitive; ++p1)
    for (int p2 = 0; p2 < b.size(); ++p2) {
      if (b.anchor_right[p1] != b.anchor_right[p2]) continue;
      bool found = false;
      for (int g : G.arrows_from(b.anchor_left[p1]))
        if (b.lapply(g, p1) == p2) {
          found = true;
          break;
        }
      if (!found) {
        rep.transitive = false;
        rep.disconnected = {p1, p2};
        break;
      }
    }
  return rep;
}

InverseBibundle invert(const Bibundle& p) {
  auto tr = is_left_principal(p);
  if (!tr.surjective)
    fail(errc::not_left_principal,
         "right anchor misses " + p.right->objects[*tr.missed_base]);
  if (!tr.free) {
    auto [g1, g2, x] = *tr.collision;
    fail(errc::not_left_principal, "left action not free: " + p.left->arrows[g1] + " · " +
                                       p.carrier[x] + " = " + p.left->arrows[g2] + " · " +
                                       p.carrier[x]);
  }
  if (!tr.transitive) {
    auto [x1, x2] = *tr.disconnected;
    fail(errc::not_left_principal, "left action not transitive on the fiber of " +
                                       p.carrier[x1] + " and " + p.carrier[x2]);
  }

  const FiniteGroupoid& G = *p.left;
  const FiniteGroupoid& H = *p.right;
  Bibundle inv;
  inv.left = p.right;
  inv.right = p.left;
  inv.carrier = p.carrier;
  inv.anchor_left = p.anchor_right;
  inv.anchor_right = p.anchor_left;
  const int n = p.size();
  inv.left_act.assign((size_t)H.num_arrows() * n, -1);
  inv.right_act.assign((size_t)n * G.num_arrows(), -1);
  for (int h = 0; h < H.num_arrows(); ++h)
    for (int x = 0; x < n; ++x)
      if (H.src[h] == p.anchor_right[x])
        inv.left_act[(size_t)h * n + x] = p.rapply(x, H.inv[h]);
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < G.num_arrows(); ++g)
      if (p.anchor_left[x] == G.tgt[g])
        inv.right_act[(size_t)x * G.num_arrows() + g] = p.lapply(G.inv[g], x);
  InverseBibundle out{checked(std::move(inv)), {}, {}};

  auto left_unit = find_isomorphism_impl(compose(p, out.inverse),
                                         from_functor(identity_functor(p.left)), kNoCap);
  auto right_unit = find_isomorphism_impl(compose(out.inverse, p),
                                          from_functor(identity_functor(p.right)), kNoCap);
  if (!left_unit || !right_unit)
    throw std::logic_error("inverse bibundle failed its unit isomorphisms");
  out.unit_left = *left_unit;
  out.unit_right = *right_unit;
  return out;
}

EquivalencePrincipalityReport equivalence_iff_principal(const GroupoidFunctor& f) {
  EquivalencePrincipalityReport rep;
  rep.equivalence = is_equivalence(f);
  rep.principality = is_left_principal(from_functor(f));
  rep.agree = rep.equivalence.ok() == rep.principality.ok();
  return rep;
}

GroupoidFunctor section_to_functor(const Bibundle& p, const std::vector<int>& section) {
  const FiniteGroupoid& G = *p.left;
  require((int)section.size() == G.num_objects(), errc::not_a_section,
          "one section point per object required");
  for (int x = 0; x < G.num_objects(); ++x) {
    require(section[x] >= 0 && section[x] < p.size(), errc::not_a_section,
            "section point out of range at " + G.objects[x]);
    require(p.anchor_left[section[x]] == x, errc::not_a_section,
            "section misses the fiber over " + G.objects[x]);
  }
  GroupoidFunctor f;
  f.source = p.left;
  f.target = p.right;
  f.obj_map.resize(G.num_objects());
  for (int x = 0; x < G.num_objects(); ++x) f.obj_map[x] = p.anchor_right[section[x]];
  auto bundle = p.right_bundle();
  f.arr_map.resize(G.num_arrows());
  for (int g = 0; g < G.num_arrows(); ++g)
    f.arr_map[g] = division(bundle, section[G.tgt[g]], p.lapply(g, section[G.src[g]]));
  auto rep = validate_functor(f);
  if (!rep.ok())
    throw std::logic_error("section produced an invalid functor:\n" + rep.to_string());
  return f;
}

CoverFactorization factor_through_cover(const Bibundle& p, const SetCover* cover) {
  const FiniteGroupoid& G = *p.left;
  SetCover c;
  if (cover) {
    c = *cover;
    auto rep = validate_cover(c);
    if (!rep.ok()) fail(errc::parse_error, "invalid cover:\n" + rep.to_string());
    require(c.base == G.objects, errc::unknown_object,
            "cover base must list the objects of the left groupoid");
    std::vector<bool> hit(c.base.size(), false);
    for (const auto& piece : c.pieces)
      for (int x : piece) hit[x] = true;
    for (size_t x = 0; x < hit.size(); ++x)
      require(hit[x], errc::not_surjective, "cover misses " + c.base[x]);
  } else {
    c.base = G.objects;
    c.pieces.push_back({});
    for (int x = 0; x < G.num_objects(); ++x) c.pieces[0].push_back(x);
  }
  auto pts = cover_points(c);
  std::vector<std::string> names;
  std::vector<int> to_objects;
  for (const auto& pt : pts) {
    names.push_back(cover_point_name(c, pt));
    to_objects.push_back(pt.point);
  }
  auto pb = pullback_groupoid(p.left, names, to_objects);
  CoverFactorization out{std::move(c), pb.groupoid, pb.projection,
                         compose(from_functor(pb.projection), p), {}, {}};
  std::vector<int> section(out.refinement->num_objects(), -1);
  for (int u = 0; u < out.refinement->num_objects(); ++u)
    for (int x = 0; x < out.pulled_back.size(); ++x)
      if (out.pulled_back.anchor_left[x] == u) {
        section[u] = x;
        break;
      }
  out.functor = section_to_functor(out.pulled_back, section);
  auto witness = find_isomorphism_impl(from_functor(out.functor), out.pulled_back, kNoCap);
  if (!witness) throw std::logic_error("cover factorization lost its isomorphism witness");
  out.witness = *witness;
  return out;
}

}  // namespace gpd
