#include "gpd/graph_bundles.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpd {

ValidationReport validate_graph(const Graph& g) {
  ValidationReport rep;
  for (int e = 0; e < g.num_edges(); ++e)
    for (int side = 0; side < 2; ++side)
      if (g.ends[e][side] < 0 || g.ends[e][side] >= g.num_vertices()) {
        rep.add("RangeError", "edge " + std::to_string(e) + " has an endpoint out of range");
        break;
      }
  return rep;
}

GraphRef make_graph(Graph g) {
  auto rep = validate_graph(g);
  if (!rep.ok())
    throw std::logic_error("internal construction produced an invalid graph:\n" + rep.to_string());
  return std::make_shared<const Graph>(std::move(g));
}

GraphRef cycle_graph(int n) {
  assert(n >= 1);
  Graph g;
  for (int i = 0; i < n; ++i) {
    g.vertices.push_back("v" + std::to_string(i));
    g.ends.push_back({i, (i + 1) % n});
  }
  return make_graph(std::move(g));
}

GraphRef path_graph(int n) {
  assert(n >= 1);
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.ends.push_back({i, i + 1});
  return make_graph(std::move(g));
}

void check_path(const Graph& g, const EdgePath& p) {
  require(p.src >= 0 && p.src < g.num_vertices() && p.tgt >= 0 && p.tgt < g.num_vertices(),
          errc::not_a_path, "path endpoints out of range");
  int at = p.src;
  for (const auto& s : p.steps) {
    require(s.edge >= 0 && s.edge < g.num_edges(), errc::not_a_path,
            "path uses an edge out of range");
    require(edge_tail(g, s) == at, errc::not_a_path,
            "path breaks at edge " + std::to_string(s.edge));
    at = edge_head(g, s);
  }
  require(at == p.tgt, errc::not_a_path, "path ends at the wrong vertex");
}

EdgePath reduce_path(const Graph& g, EdgePath p) {
  check_path(g, p);
  std::vector<OrientedEdge> out;
  for (const auto& s : p.steps) {
    if (!out.empty() && out.back() == reversed(s))
      out.pop_back();
    else
      out.push_back(s);
  }
  p.steps = std::move(out);
  return p;
}

ValidationReport validate_cocycle(const EdgeCocycle& c) {
  ValidationReport rep;
  if (!c.graph) {
    rep.add("MissingTable", "cocycle has no graph");
    return rep;
  }
  {
    auto grep = validate_group(c.group);
    for (auto& v : grep.violations) rep.add(v.rule, "group: " + v.detail);
  }
  if ((int)c.label.size() != c.graph->num_edges()) {
    rep.add("MissingTable", "label table does not match the edge count");
    return rep;
  }
  for (int e = 0; e < (int)c.label.size(); ++e)
    if (c.label[e] < 0 || c.label[e] >= c.group.size())
      rep.add("RangeError", "label of edge " + std::to_string(e) + " out of range");
  return rep;
}

EdgeCocycle trivial_cocycle(GraphRef g, FiniteGroup k) {
  EdgeCocycle c;
  c.label.assign(g->num_edges(), k.identity);
  c.graph = std::move(g);
  c.group = std::move(k);
  return c;
}

int holonomy(const EdgeCocycle& c, const EdgePath& p) {
  check_path(*c.graph, p);
  int value = c.group.identity;
  for (const auto& s : p.steps) value = c.group.op(c.value(s), value);
  return value;
}

GaugeTransform identity_gauge(const Graph& g, const FiniteGroup& k) {
  return {std::vector<int>(g.num_vertices(), k.identity)};
}

GaugeTransform compose_gauge(const FiniteGroup& k, const GaugeTransform& second,
                             const GaugeTransform& first) {
  require(second.at.size() == first.at.size(), errc::mismatch,
          "gauge transforms live on different vertex sets");
  GaugeTransform out = second;
  for (size_t v = 0; v < out.at.size(); ++v) out.at[v] = k.op(second.at[v], first.at[v]);
  return out;
}

GaugeTransform inverse_gauge(const FiniteGroup& k, const GaugeTransform& t) {
  GaugeTransform out = t;
  for (auto& a : out.at) a = k.inv(a);
  return out;
}

EdgeCocycle apply_gauge(const GaugeTransform& t, const EdgeCocycle& c) {
  require((int)t.at.size() == c.graph->num_vertices(), errc::mismatch,
          "gauge transform does not match the vertex set");
  const FiniteGroup& k = c.group;
  EdgeCocycle out = c;
  for (int e = 0; e < c.graph->num_edges(); ++e) {
    auto [tail, head] = c.graph->ends[e];
    out.label[e] = k.op(k.op(t.at[head], c.label[e]), k.inv(t.at[tail]));
  }
  return out;
}

namespace {

// Spanning forest by breadth-first search: component roots ascending,
// neighbors scanned in edge order.
struct Forest {
  std::vector<int> component;                          // per vertex
  std::vector<std::vector<int>> members;               // BFS order per component
  std::vector<OrientedEdge> parent;                    // step into each non-root vertex
  std::vector<int> tree_edges;                         // ascending
};

Forest spanning_forest(const Graph& g) {
  Forest f;
  f.component.assign(g.num_vertices(), -1);
  f.parent.assign(g.num_vertices(), {});
  std::vector<std::vector<OrientedEdge>> adj(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    adj[g.ends[e][0]].push_back({e, true});
    if (g.ends[e][1] != g.ends[e][0]) adj[g.ends[e][1]].push_back({e, false});
  }
  std::set<int> in_tree;
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (f.component[root] >= 0) continue;
    int c = (int)f.members.size();
    f.members.push_back({root});
    f.component[root] = c;
    for (size_t i = 0; i < f.members[c].size(); ++i) {
      int u = f.members[c][i];
      for (const auto& s : adj[u]) {
        int v = edge_head(g, s);
        if (f.component[v] >= 0) continue;
        f.component[v] = c;
        f.parent[v] = s;
        f.members[c].push_back(v);
        in_tree.insert(s.edge);
      }
    }
  }
  f.tree_edges.assign(in_tree.begin(), in_tree.end());
  return f;
}

// Gauge values on one component sending c1 to c2, given the value at the
// root; propagation over tree steps is forced, the leftover edges decide.
bool try_component(const EdgeCocycle& c1, const EdgeCocycle& c2, const Forest& f, int comp,
                   int root_value, std::vector<int>& at) {
  const FiniteGroup& k = c1.group;
  at[f.members[comp][0]] = root_value;
  for (size_t i = 1; i < f.members[comp].size(); ++i) {
    int v = f.members[comp][i];
    const auto& s = f.parent[v];
    int u = edge_tail(*c1.graph, s);
    at[v] = k.op(k.op(c2.value(s), at[u]), k.inv(c1.value(s)));
  }
  for (int e = 0; e < c1.graph->num_edges(); ++e) {
    auto [tail, head] = c1.graph->ends[e];
    if (f.component[tail] != comp) continue;
    if (c2.label[e] != k.op(k.op(at[head], c1.label[e]), k.inv(at[tail]))) return false;
  }
  return true;
}

}  // namespace

std::optional<GaugeTransform> gauge_equivalent(const EdgeCocycle& c1, const EdgeCocycle& c2) {
  require(*c1.graph == *c2.graph, errc::mismatch, "cocycles live on different graphs");
  require(c1.group == c2.group, errc::mismatch, "cocycles take values in different groups");
  const FiniteGroup& k = c1.group;
  auto f = spanning_forest(*c1.graph);
  GaugeTransform t{std::vector<int>(c1.graph->num_vertices(), k.identity)};
  for (int comp = 0; comp < (int)f.members.size(); ++comp) {
    bool found = false;
    for (int r = 0; r < k.size() && !found; ++r) found = try_component(c1, c2, f, comp, r, t.at);
    if (!found) return std::nullopt;
  }
  return t;
}

BundleClassification classify_bundles(GraphRef g, const FiniteGroup& k) {
  BundleClassification out;
  out.graph = g;
  out.group = k;
  auto f = spanning_forest(*g);
  out.forest = f.tree_edges;
  for (int e = 0; e < g->num_edges(); ++e)
    if (!std::binary_search(out.forest.begin(), out.forest.end(), e)) out.chords.push_back(e);

  // distinct conjugation-orbit minima of the chord tuples, per component
  std::vector<std::vector<std::vector<int>>> classes(f.members.size());
  for (int comp = 0; comp < (int)f.members.size(); ++comp) {
    std::vector<int> chords;
    for (int e : out.chords)
      if (f.component[g->ends[e][0]] == comp) chords.push_back(e);
    std::set<std::vector<int>> reps;
    std::vector<int> tuple(chords.size(), 0);
    while (true) {
      std::vector<int> best = tuple;
      for (int c = 0; c < k.size(); ++c) {
        std::vector<int> conj(tuple.size());
        for (size_t i = 0; i < tuple.size(); ++i) conj[i] = k.op(k.op(c, tuple[i]), k.inv(c));
        best = std::min(best, conj);
      }
      reps.insert(best);
      size_t i = tuple.size();
      while (i > 0 && tuple[i - 1] == k.size() - 1) tuple[--i] = 0;
      if (i == 0) break;
      ++tuple[i - 1];
    }
    for (auto& chosen : reps) {
      std::vector<int> full(g->num_edges(), -1);
      for (size_t i = 0; i < chords.size(); ++i) full[chords[i]] = chosen[i];
      classes[comp].push_back(std::move(full));
    }
  }

  // one representative per choice of class in every component
  std::vector<size_t> pick(f.members.size(), 0);
  while (true) {
    EdgeCocycle c = trivial_cocycle(g, k);
    for (size_t comp = 0; comp < pick.size(); ++comp)
      for (int e = 0; e < g->num_edges(); ++e)
        if (classes[comp][pick[comp]][e] >= 0) c.label[e] = classes[comp][pick[comp]][e];
    out.representatives.push_back(std::move(c));
    size_t i = pick.size();
    while (i > 0 && pick[i - 1] + 1 == classes[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return out;
}

GraphRef subgraph(const Graph& g, const Subgraph& sel) {
  std::vector<int> pos(g.num_vertices(), -1);
  for (size_t i = 0; i < sel.vertices.size(); ++i) {
    int v = sel.vertices[i];
    require(v >= 0 && v < g.num_vertices(), errc::not_subgraph, "vertex selection out of range");
    require(pos[v] < 0, errc::not_subgraph, "vertex " + g.vertices[v] + " selected twice");
    pos[v] = (int)i;
  }
  Graph sub;
  for (int v : sel.vertices) sub.vertices.push_back(g.vertices[v]);
  std::vector<bool> seen(g.num_edges(), false);
  for (int e : sel.edges) {
    require(e >= 0 && e < g.num_edges(), errc::not_subgraph, "edge selection out of range");
    require(!seen[e], errc::not_subgraph, "edge " + std::to_string(e) + " selected twice");
    seen[e] = true;
    require(pos[g.ends[e][0]] >= 0 && pos[g.ends[e][1]] >= 0, errc::not_subgraph,
            "edge " + std::to_string(e) + " leaves the chosen vertices");
    sub.ends.push_back({pos[g.ends[e][0]], pos[g.ends[e][1]]});
  }
  return make_graph(std::move(sub));
}

EdgeCocycle restrict_cocycle(const EdgeCocycle& c, const Subgraph& sel) {
  EdgeCocycle out;
  out.graph = subgraph(*c.graph, sel);
  out.group = c.group;
  for (int e : sel.edges) out.label.push_back(c.label[e]);
  return out;
}

namespace {

// All gauges between two cocycles on a connected tree: one per root value.
std::vector<GaugeTransform> tree_gauges(const EdgeCocycle& c1, const EdgeCocycle& c2) {
  auto f = spanning_forest(*c1.graph);
  assert(f.members.size() == 1);
  std::vector<GaugeTransform> out;
  for (int r = 0; r < c1.group.size(); ++r) {
    GaugeTransform t{std::vector<int>(c1.graph->num_vertices(), c1.group.identity)};
    if (try_component(c1, c2, f, 0, r, t.at)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

CircleDemo circle_demo(int n, const FiniteGroup& k) {
  require(n >= 3, errc::arc_cover_undefined, "the two-arc cover needs at least three edges");
  CircleDemo d;
  d.circle = cycle_graph(n);
  int m = n / 2;
  for (int v = 0; v <= m; ++v) d.arc1.vertices.push_back(v);
  for (int e = 0; e < m; ++e) d.arc1.edges.push_back(e);
  for (int v = m; v < n; ++v) d.arc2.vertices.push_back(v);
  d.arc2.vertices.push_back(0);
  for (int e = m; e < n; ++e) d.arc2.edges.push_back(e);
  d.overlap = {0, m};

  d.plain = trivial_cocycle(d.circle, k);
  d.twisted = d.plain;
  int twist = k.identity;
  for (int a = 0; a < k.size(); ++a)
    if (a != k.identity) {
      twist = a;
      break;
    }
  d.twisted.label[n - 1] = twist;

  d.global_classes = classify_bundles(d.circle, k).count();
  d.arc1_classes = classify_bundles(subgraph(*d.circle, d.arc1), k).count();
  d.arc2_classes = classify_bundles(subgraph(*d.circle, d.arc2), k).count();

  auto g1 = tree_gauges(restrict_cocycle(d.plain, d.arc1), restrict_cocycle(d.twisted, d.arc1));
  auto g2 = tree_gauges(restrict_cocycle(d.plain, d.arc2), restrict_cocycle(d.twisted, d.arc2));
  if (g1.empty() || g2.empty()) throw std::logic_error("arc restrictions must be equivalent");
  d.on_arc1 = g1.front();
  d.on_arc2 = g2.front();

  // positions of the overlap vertices inside each arc
  auto locate = [](const Subgraph& arc, int v) {
    return (int)(std::find(arc.vertices.begin(), arc.vertices.end(), v) - arc.vertices.begin());
  };
  d.obstruction = true;
  for (const auto& t1 : g1)
    for (const auto& t2 : g2) {
      bool agree = true;
      for (int v : d.overlap)
        if (t1.at[locate(d.arc1, v)] != t2.at[locate(d.arc2, v)]) agree = false;
      if (agree) d.obstruction = false;
    }
  if (d.obstruction == gauge_equivalent(d.plain, d.twisted).has_value())
    throw std::logic_error("overlap obstruction must match the global search");
  return d;
}

std::string CircleDemo::to_string() const {
  std::ostringstream out;
  const FiniteGroup& k = plain.group;
  out << "cycle with " << circle->num_edges() << " edges, group of order " << k.size() << "\n";
  out << "global classes: " << global_classes << "\n";
  out << "arc classes: " << arc1_classes << ", " << arc2_classes << "\n";
  auto print_arc = [&](const char* name, const Subgraph& arc, const GaugeTransform& t) {
    out << name << " transform:";
    for (size_t i = 0; i < arc.vertices.size(); ++i)
      out << " " << circle->vertices[arc.vertices[i]] << "=" << k.elements[t.at[i]];
    out << "\n";
  };
  print_arc("arc 1", arc1, on_arc1);
  print_arc("arc 2", arc2, on_arc2);
  auto locate = [](const Subgraph& arc, int v) {
    return (int)(std::find(arc.vertices.begin(), arc.vertices.end(), v) - arc.vertices.begin());
  };
  for (int v : overlap) {
    int a = on_arc1.at[locate(arc1, v)];
    int b = on_arc2.at[locate(arc2, v)];
    out << "overlap " << circle->vertices[v] << ": arc 1 gives " << k.elements[a]
        << ", arc 2 gives " << k.elements[b] << (a == b ? " (agree)" : " (mismatch)") << "\n";
  }
  out << "gluing obstruction: " << (obstruction ? "present" : "absent") << "\n";
  return out.str();
}

}  // namespace gpd
