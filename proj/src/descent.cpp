#include "gpd/descent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpd {

namespace {

// base index of a carrier point of bundle i
int base_of(const DescentDatum& d, int i, int q) {
  return d.cover.pieces[i][d.bundles[i].proj[q]];
}

std::vector<std::vector<bool>> piece_membership(const DescentDatum& d) {
  std::vector<std::vector<bool>> in(d.cover.pieces.size(),
                                    std::vector<bool>(d.cover.base.size(), false));
  for (size_t i = 0; i < d.cover.pieces.size(); ++i)
    for (int m : d.cover.pieces[i]) in[i][m] = true;
  return in;
}

std::string flag_text(const PrincipalityReport& pr) {
  if (!pr.surjective) return "fiber over a base point is empty";
  if (!pr.invariant) return "action moves a point between fibers";
  if (!pr.free) return "action has a stabilizer";
  return "fiber is not a single orbit";
}

}  // namespace

ValidationReport validate_descent(const DescentDatum& d) {
  ValidationReport rep;
  if (!d.h) {
    rep.add("MissingTable", "groupoid reference is required");
    return rep;
  }
  {
    auto cr = validate_cover(d.cover);
    for (auto& v : cr.violations) rep.add(v.rule, "cover: " + v.detail);
  }
  if (d.bundles.size() != d.cover.pieces.size())
    rep.add("MissingTable", "one bundle per cover piece required");
  if (!rep.ok()) return rep;

  const int n = (int)d.bundles.size();
  for (int i = 0; i < n; ++i) {
    const auto& b = d.bundles[i];
    const auto tag = "bundle " + std::to_string(i);
    if (!b.action.groupoid || !(*b.action.groupoid == *d.h)) {
      rep.add("PieceViolation", tag + " does not act along the datum's groupoid");
      continue;
    }
    std::vector<std::string> expected;
    for (int m : d.cover.pieces[i]) expected.push_back(d.cover.base[m]);
    if (b.base != expected) {
      rep.add("PieceViolation", tag + " is not based on its cover piece");
      continue;
    }
    auto ar = validate_right_action(b.action);
    for (auto& v : ar.violations) rep.add(v.rule, tag + ": " + v.detail);
    if (b.proj.size() != b.action.carrier.size()) {
      rep.add("TableShape", tag + ": one projection value per carrier point required");
      continue;
    }
    for (int p : b.proj)
      if (p < 0 || p >= (int)b.base.size()) {
        rep.add("RangeError", tag + ": projection out of range");
        break;
      }
    if (!rep.ok()) continue;
    auto pr = is_principal(b);
    if (!pr.ok()) rep.add("NotPrincipal", tag + ": " + flag_text(pr));
  }
  if (!rep.ok()) return rep;

  auto in = piece_membership(d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!d.transitions.count({i, j}))
        rep.add("MissingTable",
                "transition (" + std::to_string(i) + ", " + std::to_string(j) + ") absent");
  for (const auto& [key, table] : d.transitions) {
    auto [i, j] = key;
    const auto tag = "transition (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
      rep.add("TransitionViolation", tag + " does not name two distinct pieces");
      continue;
    }
    const auto& from = d.bundles[j];
    const auto& to = d.bundles[i];
    if (table.size() != from.action.carrier.size()) {
      rep.add("TableShape", tag + ": one entry per carrier point required");
      continue;
    }
    int expected_hits = 0;
    for (int p = 0; p < (int)to.action.carrier.size(); ++p)
      if (in[j][base_of(d, i, p)]) ++expected_hits;
    std::vector<bool> hit(to.action.carrier.size(), false);
    int hits = 0;
    bool broken = false;
    for (int q = 0; q < (int)table.size() && !broken; ++q) {
      int m = base_of(d, j, q);
      if (!in[i][m]) {
        if (table[q] != -1) {
          rep.add("TransitionViolation", tag + " is defined off the overlap at " +
                                             from.action.carrier[q]);
          broken = true;
        }
        continue;
      }
      int p = table[q];
      if (p < 0 || p >= (int)to.action.carrier.size()) {
        rep.add("TransitionViolation", tag + " misses the overlap point " +
                                           from.action.carrier[q]);
        broken = true;
        break;
      }
      if (base_of(d, i, p) != m) {
        rep.add("TransitionViolation", tag + " moves " + from.action.carrier[q] +
                                           " to another base point");
        broken = true;
        break;
      }
      if (hit[p]) {
        rep.add("TransitionViolation", tag + " identifies two points with " +
                                           to.action.carrier[p]);
        broken = true;
        break;
      }
      hit[p] = true;
      ++hits;
      if (to.action.anchor[p] != from.action.anchor[q]) {
        rep.add("EquivarianceViolation", tag + " changes the anchor of " +
                                             from.action.carrier[q]);
        broken = true;
        break;
      }
      for (int h = 0; h < d.h->num_arrows() && !broken; ++h) {
        if (!from.action.defined(q, h)) continue;
        if (table[from.action.apply(q, h)] != to.action.apply(p, h)) {
          rep.add("EquivarianceViolation", tag + " breaks at " + from.action.carrier[q] +
                                               " · " + d.h->arrows[h]);
          broken = true;
        }
      }
    }
    if (!broken && hits != expected_hits)
      rep.add("TransitionViolation", tag + " does not reach every overlap point");
  }
  return rep;
}

std::vector<int> transition(const DescentDatum& d, int i, int j) {
  if (i == j) {
    std::vector<int> id(d.bundles[i].action.carrier.size());
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  if (auto it = d.transitions.find({i, j}); it != d.transitions.end()) return it->second;
  const auto& stored = d.transitions.at({j, i});
  std::vector<int> out(d.bundles[j].action.carrier.size(), -1);
  for (int p = 0; p < (int)stored.size(); ++p)
    if (stored[p] >= 0) out[stored[p]] = p;
  return out;
}

CocycleReport check_cocycle(const DescentDatum& d) {
  {
    auto rep = validate_descent(d);
    require(rep.ok(), errc::mismatch, "invalid descent datum:\n" + rep.to_string());
  }
  const int n = (int)d.bundles.size();
  auto in = piece_membership(d);
  std::vector<std::vector<std::vector<int>>> t(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = transition(d, i, j);

  CocycleReport out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int q = 0; q < (int)d.bundles[k].action.carrier.size(); ++q) {
          int m = base_of(d, k, q);
          if (!in[i][m] || !in[j][m]) continue;
          int direct = t[i][k][q];
          int via = t[i][j][t[j][k][q]];
          if (direct == via) continue;
          out.ok = false;
          out.i = i;
          out.j = j;
          out.k = k;
          out.point = q;
          out.detail = "point " + d.bundles[k].action.carrier[q] + " over " + d.cover.base[m] +
                       ": direct route gives " + d.bundles[i].action.carrier[direct] +
                       ", through piece " + std::to_string(j) + " gives " +
                       d.bundles[i].action.carrier[via];
          return out;
        }
  return out;
}

ValidationReport validate_descent_arrow(const DescentDatum& from, const DescentDatum& to,
                                        const DescentArrow& a) {
  ValidationReport rep;
  if (!(*from.h == *to.h) || from.cover.base != to.cover.base ||
      from.cover.pieces != to.cover.pieces) {
    rep.add("EndpointViolation", "data live over different covers");
    return rep;
  }
  const int n = (int)from.bundles.size();
  if ((int)a.maps.size() != n) {
    rep.add("TableShape", "one map per piece required");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    const auto& f = from.bundles[i];
    const auto& t = to.bundles[i];
    const auto& m = a.maps[i];
    const auto tag = "piece " + std::to_string(i);
    if (m.size() != f.action.carrier.size() ||
        f.action.carrier.size() != t.action.carrier.size()) {
      rep.add("TableShape", tag + ": map does not match the carriers");
      continue;
    }
    std::vector<bool> hit(t.action.carrier.size(), false);
    for (int q = 0; q < (int)m.size(); ++q) {
      if (m[q] < 0 || m[q] >= (int)t.action.carrier.size() || hit[m[q]]) {
        rep.add("PieceViolation", tag + ": not a bijection at " + f.action.carrier[q]);
        break;
      }
      hit[m[q]] = true;
      if (t.proj[m[q]] != f.proj[q] || t.action.anchor[m[q]] != f.action.anchor[q]) {
        rep.add("PieceViolation", tag + ": " + f.action.carrier[q] + " changes fiber or anchor");
        break;
      }
      bool fine = true;
      for (int h = 0; h < from.h->num_arrows() && fine; ++h) {
        if (!f.action.defined(q, h)) continue;
        if (m[f.action.apply(q, h)] != t.action.apply(m[q], h)) {
          rep.add("EquivarianceViolation", tag + ": breaks at " + f.action.carrier[q] + " · " +
                                               from.h->arrows[h]);
          fine = false;
        }
      }
      if (!fine) break;
    }
  }
  if (!rep.ok()) return rep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto tf = transition(from, i, j);
      auto tt = transition(to, i, j);
      for (int q = 0; q < (int)tf.size(); ++q) {
        if (tf[q] < 0) continue;
        if (a.maps[i][tf[q]] != tt[a.maps[j][q]]) {
          rep.add("TransitionViolation", "square (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ") fails at " +
                                             from.bundles[j].action.carrier[q]);
          return rep;
        }
      }
    }
  return rep;
}

DescentDatum restrict_to_cover(const PrincipalBundle& p, const SetCover& cover) {
  require(cover.base == p.base, errc::mismatch, "cover does not name the bundle's base");
  {
    auto rep = validate_cover(cover);
    for (const auto& v : rep.violations) {
      if (v.rule == "NotSurjective")
        fail(errc::not_surjective, "pieces do not cover base point " + v.detail);
      fail(errc::unknown_object, v.rule + ": " + v.detail);
    }
  }
  DescentDatum d;
  d.h = p.action.groupoid;
  d.cover = cover;
  const int n = (int)cover.pieces.size();
  const int arrows = d.h->num_arrows();

  std::vector<std::vector<int>> local(n);  // original carrier -> piece position
  for (int i = 0; i < n; ++i) {
    std::vector<int> pos(p.base.size(), -1);
    for (size_t k = 0; k < cover.pieces[i].size(); ++k) pos[cover.pieces[i][k]] = (int)k;
    PrincipalBundle b;
    b.action.groupoid = p.action.groupoid;
    for (int m : cover.pieces[i]) b.base.push_back(p.base[m]);
    local[i].assign(p.action.carrier.size(), -1);
    std::vector<int> points;
    for (int q = 0; q < (int)p.action.carrier.size(); ++q)
      if (pos[p.proj[q]] >= 0) {
        local[i][q] = (int)points.size();
        points.push_back(q);
      }
    for (int q : points) {
      b.action.carrier.push_back(p.action.carrier[q]);
      b.action.anchor.push_back(p.action.anchor[q]);
      b.proj.push_back(pos[p.proj[q]]);
    }
    b.action.act.assign(points.size() * arrows, -1);
    for (size_t t = 0; t < points.size(); ++t)
      for (int h = 0; h < arrows; ++h) {
        int r = p.action.apply(points[t], h);
        if (r >= 0) b.action.act[t * arrows + h] = local[i][r];
      }
    d.bundles.push_back(std::move(b));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> table;
      for (int q = 0; q < (int)p.action.carrier.size(); ++q)
        if (local[j][q] >= 0) table.push_back(local[i][q]);
      d.transitions[{i, j}] = std::move(table);
    }

  auto rep = validate_descent(d);
  if (!rep.ok())
    throw std::logic_error("restriction produced an invalid datum:\n" + rep.to_string());
  auto cc = check_cocycle(d);
  if (!cc.ok) throw std::logic_error("restriction broke the triple identity: " + cc.detail);
  return d;
}

GluedBundle glue(const DescentDatum& d) {
  auto cc = check_cocycle(d);
  require(cc.ok, errc::cocycle_failure,
          "triple (" + std::to_string(cc.i) + ", " + std::to_string(cc.j) + ", " +
              std::to_string(cc.k) + ") fails: " + cc.detail);

  const int n = (int)d.bundles.size();
  const int arrows = d.h->num_arrows();
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i)
    offset[i + 1] = offset[i] + (int)d.bundles[i].action.carrier.size();
  std::vector<int> parent(offset[n]);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = root(a);
    b = root(b);
    parent[std::max(a, b)] = std::min(a, b);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto t = transition(d, i, j);
      for (int q = 0; q < (int)t.size(); ++q)
        if (t[q] >= 0) unite(offset[i] + t[q], offset[j] + q);
    }

  std::vector<int> cls(offset[n], -1);
  GluedBundle out;
  out.bundle.action.groupoid = d.h;
  out.bundle.base = d.cover.base;
  for (int x = 0; x < offset[n]; ++x) {
    if (root(x) != x) continue;
    int i = (int)(std::upper_bound(offset.begin(), offset.end(), x) - offset.begin()) - 1;
    int p = x - offset[i];
    cls[x] = (int)out.bundle.action.carrier.size();
    out.bundle.action.carrier.push_back("U" + std::to_string(i) + ":" +
                                        d.bundles[i].action.carrier[p]);
    out.bundle.action.anchor.push_back(d.bundles[i].action.anchor[p]);
    out.bundle.proj.push_back(base_of(d, i, p));
  }
  for (int x = 0; x < offset[n]; ++x) cls[x] = cls[root(x)];

  const int total = (int)out.bundle.action.carrier.size();
  out.bundle.action.act.assign((size_t)total * arrows, -1);
  for (int x = 0; x < offset[n]; ++x) {
    if (root(x) != x) continue;
    int i = (int)(std::upper_bound(offset.begin(), offset.end(), x) - offset.begin()) - 1;
    int p = x - offset[i];
    for (int h = 0; h < arrows; ++h) {
      int r = d.bundles[i].action.apply(p, h);
      if (r >= 0) out.bundle.action.act[(size_t)cls[x] * arrows + h] = cls[offset[i] + r];
    }
  }

  out.piece_member.assign(total, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < (int)d.bundles[i].action.carrier.size(); ++p) {
      int c = cls[offset[i] + p];
      if (out.piece_member[c][i] >= 0 && out.piece_member[c][i] != p)
        throw std::logic_error("a glued point meets one piece twice");
      out.piece_member[c][i] = p;
    }
  auto in = piece_membership(d);
  for (int c = 0; c < total; ++c)
    for (int i = 0; i < n; ++i)
      if (in[i][out.bundle.proj[c]] && out.piece_member[c][i] < 0)
        throw std::logic_error("a glued point misses a piece over its base point");

  auto rep = validate_right_action(out.bundle.action);
  if (!rep.ok()) throw std::logic_error("glued action invalid:\n" + rep.to_string());
  if (!is_principal(out.bundle).ok()) throw std::logic_error("glued bundle is not principal");
  return out;
}

DescentArrow compare_restriction(const GluedBundle& g, const DescentDatum& d) {
  auto r = restrict_to_cover(g.bundle, d.cover);
  DescentArrow a;
  for (size_t i = 0; i < r.bundles.size(); ++i) {
    std::vector<int> map;
    for (const auto& name : r.bundles[i].action.carrier) {
      // restricted piece points are glued points; recover their index
      int c = -1;
      for (int x = 0; x < (int)g.bundle.action.carrier.size(); ++x)
        if (g.bundle.action.carrier[x] == name) c = x;
      if (c < 0 || g.piece_member[c][i] < 0)
        throw std::logic_error("glued point missing from its own restriction");
      map.push_back(g.piece_member[c][i]);
    }
    a.maps.push_back(std::move(map));
  }
  return a;
}

FiberProduct fiber_product_with_atlas(const PrincipalBundle& p) {
  {
    auto rep = validate_right_action(p.action);
    require(rep.ok(), errc::not_principal, "invalid action:\n" + rep.to_string());
    require(p.proj.size() == p.action.carrier.size(), errc::not_principal,
            "one projection value per carrier point required");
    for (int m : p.proj)
      require(m >= 0 && m < (int)p.base.size(), errc::not_principal, "projection out of range");
  }
  auto pr = is_principal(p);
  require(pr.ok(), errc::not_principal, flag_text(pr));
  return {p.action.carrier, p.proj, p.action.anchor};
}

AtlasReconstruction groupoid_from_atlas(GroupoidRef g) {
  GroupoidData data;
  data.objects = g->objects;
  // an arrow y -> x is determined by where the least arrow into y goes
  std::map<std::array<int, 3>, int> index;
  std::vector<std::array<int, 3>> triples;  // (x, y, image of least arrow into y)
  for (int x = 0; x < g->num_objects(); ++x)
    for (int y = 0; y < g->num_objects(); ++y) {
      int h0 = g->arrows_into(y).front();
      for (int p : g->hom(g->src[h0], x)) {
        index[{x, y, p}] = (int)triples.size();
        triples.push_back({x, y, p});
        data.arrows.push_back("(" + g->objects[x] + "|" + g->objects[y] + "|" + g->arrows[p] +
                              ")");
        data.src.push_back(y);
        data.tgt.push_back(x);
      }
    }
  auto underlying = [&](int a) {
    // the arrow of g acting as triples[a] on the whole fiber
    auto [x, y, p] = triples[a];
    return g->compose(p, g->inv[g->arrows_into(y).front()]);
  };
  data.unit.resize(g->num_objects());
  for (int z = 0; z < g->num_objects(); ++z)
    data.unit[z] = index.at({z, z, g->arrows_into(z).front()});
  data.inv.resize(triples.size());
  for (int a = 0; a < (int)triples.size(); ++a) {
    auto [x, y, p] = triples[a];
    int back = g->inv[underlying(a)];
    data.inv[a] = index.at({y, x, g->compose(back, g->arrows_into(x).front())});
  }
  for (int a = 0; a < (int)triples.size(); ++a)
    for (int b = 0; b < (int)triples.size(); ++b) {
      auto [x1, x2a, pa] = triples[a];
      auto [x2b, x3, pb] = triples[b];
      if (x2a != x2b) continue;
      data.comp.push_back({a, b, index.at({x1, x3, g->compose(underlying(a), pb)})});
    }

  AtlasReconstruction out;
  out.rebuilt = make_groupoid(data);
  out.from_original.source = g;
  out.from_original.target = out.rebuilt;
  out.from_original.obj_map.resize(g->num_objects());
  std::iota(out.from_original.obj_map.begin(), out.from_original.obj_map.end(), 0);
  for (int a = 0; a < g->num_arrows(); ++a) {
    int y = g->src[a];
    out.from_original.arr_map.push_back(
        index.at({g->tgt[a], y, g->compose(a, g->arrows_into(y).front())}));
  }
  auto rep = validate_functor(out.from_original);
  if (!rep.ok()) throw std::logic_error("atlas comparison is not a functor:\n" + rep.to_string());
  if (out.rebuilt->num_arrows() != g->num_arrows())
    throw std::logic_error("atlas reconstruction changed the arrow count");
  std::vector<bool> hit(out.rebuilt->num_arrows(), false);
  for (int a : out.from_original.arr_map) {
    if (hit[a]) throw std::logic_error("atlas comparison is not injective");
    hit[a] = true;
  }
  return out;
}

Bibundle as_bibundle(const PrincipalBundle& p) {
  Bibundle b;
  b.left = discrete_groupoid(p.base);
  b.right = p.action.groupoid;
  b.carrier = p.action.carrier;
  b.anchor_left = p.proj;
  b.anchor_right = p.action.anchor;
  b.left_act.assign((size_t)b.left->num_arrows() * b.carrier.size(), -1);
  for (int q = 0; q < (int)b.carrier.size(); ++q)
    b.left_act[(size_t)p.proj[q] * b.carrier.size() + q] = q;
  b.right_act = p.action.act;
  return checked(std::move(b));
}

}  // namespace gpd
