#include "gpd/functor.hpp"

#include <algorithm>
#include <set>

#include "gpd/error.hpp"

namespace gpd {

ValidationReport validate_functor(const GroupoidFunctor& f) {
  ValidationReport rep;
  const FiniteGroupoid &G = *f.source, &H = *f.target;
  if ((int)f.obj_map.size() != G.num_objects() || (int)f.arr_map.size() != G.num_arrows()) {
    rep.add("MapShape", "object or arrow map has wrong length");
    return rep;
  }
  for (int x : f.obj_map)
    if (x < 0 || x >= H.num_objects()) {
      rep.add("RangeError", "object image out of range");
      return rep;
    }
  for (int a : f.arr_map)
    if (a < 0 || a >= H.num_arrows()) {
      rep.add("RangeError", "arrow image out of range");
      return rep;
    }
  for (int x = 0; x < G.num_objects(); ++x)
    if (f.obj_map[x] != H.src[f.arr_map[G.unit[x]]])
      rep.add("ObjectMapMismatch", "object map disagrees with arrows at " + G.objects[x]);
  for (int a = 0; a < G.num_arrows(); ++a) {
    int b = f.arr_map[a];
    if (H.src[b] != f.obj_map[G.src[a]] || H.tgt[b] != f.obj_map[G.tgt[a]])
      rep.add("EndpointViolation", G.arrows[a]);
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < G.num_objects(); ++x)
    if (f.arr_map[G.unit[x]] != H.unit[f.obj_map[x]])
      rep.add("UnitViolation", G.objects[x]);
  for (int a = 0; a < G.num_arrows(); ++a)
    if (f.arr_map[G.inv[a]] != H.inv[f.arr_map[a]])
      rep.add("InverseViolation", G.arrows[a]);
  for (int g = 0; g < G.num_arrows(); ++g)
    for (int fa = 0; fa < G.num_arrows(); ++fa) {
      if (!G.composable(g, fa)) continue;
      if (f.arr_map[G.compose(g, fa)] != H.compose(f.arr_map[g], f.arr_map[fa]))
        rep.add("CompositionViolation", "(" + G.arrows[g] + ", " + G.arrows[fa] + ")");
    }
  return rep;
}

GroupoidFunctor identity_functor(GroupoidRef g) {
  GroupoidFunctor f;
  f.source = g;
  f.target = g;
  f.obj_map.resize(g->num_objects());
  f.arr_map.resize(g->num_arrows());
  for (int i = 0; i < g->num_objects(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < g->num_arrows(); ++i) f.arr_map[i] = i;
  return f;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& outer, const GroupoidFunctor& inner) {
  require(*inner.target == *outer.source, errc::boundary_mismatch,
          "functor composition needs matching middle groupoid");
  GroupoidFunctor r;
  r.source = inner.source;
  r.target = outer.target;
  r.obj_map.resize(inner.obj_map.size());
  r.arr_map.resize(inner.arr_map.size());
  for (size_t i = 0; i < inner.obj_map.size(); ++i) r.obj_map[i] = outer.obj_map[inner.obj_map[i]];
  for (size_t i = 0; i < inner.arr_map.size(); ++i) r.arr_map[i] = outer.arr_map[inner.arr_map[i]];
  return r;
}

EquivalenceVerdict is_equivalence(const GroupoidFunctor& f) {
  const FiniteGroupoid &G = *f.source, &H = *f.target;
  EquivalenceVerdict v;

  // (1) injectivity on (src, tgt, image) triples
  for (int a = 0; a < G.num_arrows() && !v.collision; ++a)
    for (int b = a + 1; b < G.num_arrows(); ++b)
      if (G.src[a] == G.src[b] && G.tgt[a] == G.tgt[b] && f.arr_map[a] == f.arr_map[b]) {
        v.collision = {a, b};
        break;
      }
  // (1) surjectivity onto compatible triples
  if (!v.collision) {
    for (int x = 0; x < G.num_objects() && !v.missing_triple; ++x)
      for (int y = 0; y < G.num_objects() && !v.missing_triple; ++y) {
        std::set<int> hit;
        for (int a : G.hom(x, y)) hit.insert(f.arr_map[a]);
        for (int h : H.hom(f.obj_map[x], f.obj_map[y]))
          if (!hit.count(h)) {
            v.missing_triple = {{x, y, h}};
            break;
          }
      }
  }
  v.fully_faithful = !v.collision && !v.missing_triple;

  // (2) reachability: (x, h) with target of h in the image, sent to src h
  std::vector<bool> in_image(H.num_objects(), false), reached(H.num_objects(), false);
  for (int x : f.obj_map) in_image[x] = true;
  for (int h = 0; h < H.num_arrows(); ++h)
    if (in_image[H.tgt[h]]) reached[H.src[h]] = true;
  for (int b = 0; b < H.num_objects(); ++b)
    if (!reached[b]) {
      v.unreached_object = b;
      break;
    }
  v.essentially_surjective = !v.unreached_object;
  return v;
}

namespace {

struct FunctorSearch {
  const FiniteGroupoid &G, &H;
  GroupoidRef gref, href;
  size_t cap;
  bool truncated = false;
  std::vector<int> obj_img, arr_img;
  std::vector<GroupoidFunctor> out;

  bool assign(int arrow, int value, std::vector<int>& trail) {
    if (arr_img[arrow] >= 0) return arr_img[arrow] == value;
    if (H.src[value] != obj_img[G.src[arrow]] || H.tgt[value] != obj_img[G.tgt[arrow]])
      return false;
    arr_img[arrow] = value;
    trail.push_back(arrow);
    if (!assign(G.inv[arrow], H.inv[value], trail)) return false;
    for (int other = 0; other < G.num_arrows(); ++other) {
      if (arr_img[other] < 0) continue;
      if (G.composable(arrow, other) &&
          !assign(G.compose(arrow, other), H.compose(arr_img[arrow], arr_img[other]), trail))
        return false;
      if (other != arrow && G.composable(other, arrow) &&
          !assign(G.compose(other, arrow), H.compose(arr_img[other], arr_img[arrow]), trail))
        return false;
    }
    return true;
  }

  void arrows(int next) {
    if (out.size() >= cap) {
      truncated = true;
      return;
    }
    while (next < G.num_arrows() && arr_img[next] >= 0) ++next;
    if (next == G.num_arrows()) {
      GroupoidFunctor f{gref, href, obj_img, arr_img};
      out.push_back(std::move(f));
      return;
    }
    for (int cand : H.hom(obj_img[G.src[next]], obj_img[G.tgt[next]])) {
      std::vector<int> trail;
      if (assign(next, cand, trail)) arrows(next + 1);
      for (int a : trail) arr_img[a] = -1;
      if (out.size() >= cap) {
        truncated = true;
        return;
      }
    }
  }

  void objects(int next) {
    if (out.size() >= cap) {
      truncated = true;
      return;
    }
    if (next == G.num_objects()) {
      for (int x = 0; x < G.num_objects(); ++x)
        for (int y = 0; y < G.num_objects(); ++y)
          if (!G.hom(x, y).empty() && H.hom(obj_img[x], obj_img[y]).empty()) return;
      std::fill(arr_img.begin(), arr_img.end(), -1);
      std::vector<int> trail;
      bool ok = true;
      for (int x = 0; x < G.num_objects() && ok; ++x)
        ok = assign(G.unit[x], H.unit[obj_img[x]], trail);
      if (ok) arrows(0);
      std::fill(arr_img.begin(), arr_img.end(), -1);
      return;
    }
    for (int cand = 0; cand < H.num_objects(); ++cand) {
      obj_img[next] = cand;
      objects(next + 1);
      if (out.size() >= cap) {
        truncated = true;
        return;
      }
    }
    obj_img[next] = -1;
  }
};

}  // namespace

std::vector<GroupoidFunctor> enumerate_functors(GroupoidRef source, GroupoidRef target,
                                                size_t cap, bool* truncated) {
  FunctorSearch s{*source, *target, source, target, cap, false, {}, {}, {}};
  s.obj_img.assign(source->num_objects(), -1);
  s.arr_img.assign(source->num_arrows(), -1);
  if (source->num_objects() == 0) {
    s.out.push_back(GroupoidFunctor{source, target, {}, {}});
  } else if (target->num_objects() > 0) {
    s.objects(0);
  }
  if (truncated) *truncated = s.truncated;
  return std::move(s.out);
}

ValidationReport validate_transform(const NatTransform& t) {
  ValidationReport rep;
  if (!(*t.from.source == *t.to.source) || !(*t.from.target == *t.to.target)) {
    rep.add("BoundaryMismatch", "parallel functors required");
    return rep;
  }
  const FiniteGroupoid &G = *t.from.source, &H = *t.from.target;
  if ((int)t.component.size() != G.num_objects()) {
    rep.add("ComponentShape", "one component per source object required");
    return rep;
  }
  for (int x = 0; x < G.num_objects(); ++x) {
    int c = t.component[x];
    if (c < 0 || c >= H.num_arrows() || H.src[c] != t.from.obj_map[x] ||
        H.tgt[c] != t.to.obj_map[x]) {
      rep.add("ComponentEndpoints", G.objects[x]);
      return rep;
    }
  }
  for (int a = 0; a < G.num_arrows(); ++a) {
    int lhs = H.compose(t.component[G.tgt[a]], t.from.arr_map[a]);
    int rhs = H.compose(t.to.arr_map[a], t.component[G.src[a]]);
    if (lhs != rhs) rep.add("NaturalityViolation", G.arrows[a]);
  }
  return rep;
}

NatTransform identity_transform(const GroupoidFunctor& f) {
  NatTransform t{f, f, {}};
  t.component.resize(f.obj_map.size());
  for (size_t x = 0; x < f.obj_map.size(); ++x) t.component[x] = f.target->unit[f.obj_map[x]];
  return t;
}

NatTransform vertical_compose(const NatTransform& beta, const NatTransform& alpha) {
  require(alpha.to == beta.from, errc::boundary_mismatch,
          "vertical composition needs matching middle functor");
  const FiniteGroupoid& H = *alpha.from.target;
  NatTransform t{alpha.from, beta.to, {}};
  t.component.resize(alpha.component.size());
  for (size_t x = 0; x < alpha.component.size(); ++x)
    t.component[x] = H.compose(beta.component[x], alpha.component[x]);
  return t;
}

NatTransform horizontal_compose(const NatTransform& beta, const NatTransform& alpha) {
  require(*alpha.from.target == *beta.from.source, errc::boundary_mismatch,
          "horizontal composition needs matching middle groupoid");
  const FiniteGroupoid& K = *beta.from.target;
  NatTransform t{compose_functors(beta.from, alpha.from), compose_functors(beta.to, alpha.to), {}};
  t.component.resize(alpha.component.size());
  for (size_t x = 0; x < alpha.component.size(); ++x) {
    int gx = alpha.to.obj_map[x];
    t.component[x] = K.compose(beta.component[gx], beta.from.arr_map[alpha.component[x]]);
  }
  return t;
}

namespace {

struct TransformSearch {
  const GroupoidFunctor &f, &g;
  const FiniteGroupoid &G, &H;
  std::vector<int> comp;

  bool natural_at(int a) const {
    return H.compose(comp[G.tgt[a]], f.arr_map[a]) == H.compose(g.arr_map[a], comp[G.src[a]]);
  }

  bool go(int x) {
    if (x == G.num_objects()) return true;
    for (int cand : H.hom(f.obj_map[x], g.obj_map[x])) {
      comp[x] = cand;
      bool ok = true;
      for (int a = 0; a < G.num_arrows() && ok; ++a)
        if (std::max(G.src[a], G.tgt[a]) == x) ok = natural_at(a);
      if (ok && go(x + 1)) return true;
      comp[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<NatTransform> find_natural_isomorphism(const GroupoidFunctor& f,
                                                     const GroupoidFunctor& g) {
  require(*f.source == *g.source && *f.target == *g.target, errc::boundary_mismatch,
          "parallel functors required");
  TransformSearch s{f, g, *f.source, *f.target, {}};
  s.comp.assign(f.source->num_objects(), -1);
  if (!s.go(0)) return std::nullopt;
  return NatTransform{f, g, s.comp};
}

}  // namespace gpd
