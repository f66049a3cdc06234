#include "gpd/constructions.hpp"

#include <algorithm>

namespace gpd {

ValidationReport validate_cover(const SetCover& c) {
  ValidationReport rep;
  const int m = (int)c.base.size();
  std::vector<int> hit(m, 0);
  for (size_t i = 0; i < c.pieces.size(); ++i) {
    std::vector<int> seen(m, 0);
    for (int p : c.pieces[i]) {
      if (p < 0 || p >= m) {
        rep.add("RangeError", "piece " + std::to_string(i));
        return rep;
      }
      if (seen[p]++) rep.add("DuplicatePoint", "piece " + std::to_string(i) + ", " + c.base[p]);
      hit[p] = 1;
    }
  }
  for (int p = 0; p < m; ++p)
    if (!hit[p]) rep.add("NotSurjective", c.base[p]);
  return rep;
}

std::vector<CoverPoint> cover_points(const SetCover& c) {
  std::vector<CoverPoint> pts;
  for (size_t i = 0; i < c.pieces.size(); ++i)
    for (int p : c.pieces[i]) pts.push_back({(int)i, p});
  return pts;
}

std::string cover_point_name(const SetCover& c, const CoverPoint& p) {
  return std::to_string(p.piece) + ":" + c.base[p.point];
}

GroupoidRef action_groupoid(const GroupAction& a) {
  {
    auto rep = validate_action(a);
    require(rep.ok(), errc::invalid_action, "action tables invalid\n" + rep.to_string());
  }
  const int n = a.group.size(), m = (int)a.carrier.size();
  GroupoidData d;
  d.objects = a.carrier;
  auto arrow = [m](int g, int x) { return g * m + x; };
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x) {
      d.arrows.push_back("(" + a.group.elements[g] + "," + a.carrier[x] + ")");
      d.src.push_back(x);
      d.tgt.push_back(a.apply(g, x));
      d.inv.push_back(arrow(a.group.inv(g), a.apply(g, x)));
    }
  for (int x = 0; x < m; ++x) d.unit.push_back(arrow(a.group.identity, x));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x)
      for (int h = 0; h < n; ++h)
        d.comp.push_back({arrow(h, a.apply(g, x)), arrow(g, x), arrow(a.group.op(h, g), x)});
  return make_groupoid(d);
}

CechGroupoid cech_groupoid(const SetCover& c) {
  {
    auto rep = validate_cover(c);
    for (const auto& v : rep.violations) {
      if (v.rule == "NotSurjective")
        fail(errc::not_surjective, "pieces do not cover base point " + v.detail);
      fail(errc::unknown_object, v.rule + ": " + v.detail);
    }
  }
  CechGroupoid out;
  out.points = cover_points(c);
  const int u = (int)out.points.size();
  for (const auto& p : out.points) out.proj.push_back(p.point);

  GroupoidData d;
  for (const auto& p : out.points) d.objects.push_back(cover_point_name(c, p));
  std::vector<std::vector<int>> pair_arrow(u, std::vector<int>(u, -1));
  for (int p = 0; p < u; ++p)
    for (int q = 0; q < u; ++q) {
      if (out.proj[p] != out.proj[q]) continue;
      pair_arrow[p][q] = (int)d.arrows.size();
      d.arrows.push_back("(" + d.objects[p] + "," + d.objects[q] + ")");
      d.src.push_back(p);
      d.tgt.push_back(q);
    }
  d.inv.assign(d.arrows.size(), 0);
  for (int p = 0; p < u; ++p) {
    if (pair_arrow[p][p] >= 0) d.unit.push_back(pair_arrow[p][p]);
    for (int q = 0; q < u; ++q)
      if (pair_arrow[p][q] >= 0) d.inv[pair_arrow[p][q]] = pair_arrow[q][p];
  }
  for (int x = 0; x < u; ++x)
    for (int y = 0; y < u; ++y) {
      if (pair_arrow[x][y] < 0) continue;
      for (int z = 0; z < u; ++z)
        if (pair_arrow[y][z] >= 0)
          d.comp.push_back({pair_arrow[y][z], pair_arrow[x][y], pair_arrow[x][z]});
    }
  out.groupoid = make_groupoid(d);
  return out;
}

PullbackGroupoid pullback_groupoid(GroupoidRef g, const std::vector<std::string>& domain,
                                   const std::vector<int>& to_objects) {
  require(domain.size() == to_objects.size(), errc::unknown_object,
          "domain and object map must have the same length");
  for (int x : to_objects)
    require(x >= 0 && x < g->num_objects(), errc::unknown_object,
            "object index " + std::to_string(x) + " out of range");
  const int n = (int)domain.size();
  const FiniteGroupoid& G = *g;

  GroupoidData d;
  d.objects = domain;
  struct Triple {
    int x, y, arrow;
  };
  std::vector<Triple> triples;
  std::vector<std::vector<int>> index(n * n);  // (x, y) -> arrows by original index
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a : G.hom(to_objects[x], to_objects[y])) {
        index[x * n + y].push_back((int)triples.size());
        triples.push_back({x, y, a});
        d.arrows.push_back("(" + domain[x] + "," + domain[y] + "," + G.arrows[a] + ")");
        d.src.push_back(x);
        d.tgt.push_back(y);
      }
  auto find_triple = [&](int x, int y, int a) {
    for (int t : index[x * n + y])
      if (triples[t].arrow == a) return t;
    return -1;
  };
  for (const auto& t : triples) {
    d.inv.push_back(find_triple(t.y, t.x, G.inv[t.arrow]));
  }
  for (int x = 0; x < n; ++x) d.unit.push_back(find_triple(x, x, G.unit[to_objects[x]]));
  for (size_t i = 0; i < triples.size(); ++i)
    for (size_t j = 0; j < triples.size(); ++j) {
      const auto &gt = triples[i], &ft = triples[j];
      if (gt.x != ft.y) continue;
      d.comp.push_back({(int)i, (int)j,
                        find_triple(ft.x, gt.y, G.compose(gt.arrow, ft.arrow))});
    }

  PullbackGroupoid out;
  out.groupoid = make_groupoid(d);
  out.projection.source = out.groupoid;
  out.projection.target = g;
  out.projection.obj_map = to_objects;
  for (const auto& t : triples) out.projection.arr_map.push_back(t.arrow);
  return out;
}

GroupoidRef discrete_groupoid(const std::vector<std::string>& objects) {
  GroupoidData d;
  for (int i = 0; i < (int)objects.size(); ++i) {
    d.objects.push_back(objects[i]);
    d.arrows.push_back("1" + objects[i]);
    d.src.push_back(i);
    d.tgt.push_back(i);
    d.unit.push_back(i);
    d.comp.push_back({i, i, i});
    d.inv.push_back(i);
  }
  return make_groupoid(d);
}

GroupoidRef restrict_groupoid(GroupoidRef g, const std::vector<int>& objects) {
  const FiniteGroupoid& G = *g;
  std::vector<int> pos(G.num_objects(), -1);
  for (size_t i = 0; i < objects.size(); ++i) {
    int x = objects[i];
    require(x >= 0 && x < G.num_objects(), errc::unknown_object,
            "object index " + std::to_string(x) + " out of range");
    require(pos[x] < 0, errc::unknown_object, "object " + G.objects[x] + " listed twice");
    pos[x] = (int)i;
  }
  GroupoidData d;
  for (int x : objects) d.objects.push_back(G.objects[x]);
  std::vector<int> arr_pos(G.num_arrows(), -1);
  for (int a = 0; a < G.num_arrows(); ++a) {
    if (pos[G.src[a]] < 0 || pos[G.tgt[a]] < 0) continue;
    arr_pos[a] = (int)d.arrows.size();
    d.arrows.push_back(G.arrows[a]);
    d.src.push_back(pos[G.src[a]]);
    d.tgt.push_back(pos[G.tgt[a]]);
  }
  for (int a = 0; a < G.num_arrows(); ++a)
    if (arr_pos[a] >= 0) d.inv.push_back(arr_pos[G.inv[a]]);
  for (int x : objects) d.unit.push_back(arr_pos[G.unit[x]]);
  for (const auto& e : G.comp_entries)
    if (arr_pos[e[0]] >= 0 && arr_pos[e[1]] >= 0)
      d.comp.push_back({arr_pos[e[0]], arr_pos[e[1]], arr_pos[e[2]]});
  return make_groupoid(d);
}

bool is_proper(const FiniteGroupoid&) { return true; }
bool is_etale(const FiniteGroupoid&) { return true; }

}  // namespace gpd
