#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpd/error.hpp"
#include "gpd/group.hpp"

namespace gpd {

// Undirected multigraph; loops allowed.  Each edge carries two
// orientations: forward runs ends[e][0] -> ends[e][1].
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> ends;

  int num_vertices() const { return (int)vertices.size(); }
  int num_edges() const { return (int)ends.size(); }
  bool operator==(const Graph&) const = default;
};

using GraphRef = std::shared_ptr<const Graph>;

ValidationReport validate_graph(const Graph& g);

// For internal construction; throws std::logic_error on a violation.
GraphRef make_graph(Graph g);

GraphRef cycle_graph(int n);
GraphRef path_graph(int n);  // n vertices, n-1 edges

struct OrientedEdge {
  int edge = -1;
  bool forward = true;
  bool operator==(const OrientedEdge&) const = default;
  auto operator<=>(const OrientedEdge&) const = default;
};

inline OrientedEdge reversed(OrientedEdge e) { return {e.edge, !e.forward}; }
inline int edge_tail(const Graph& g, OrientedEdge e) { return g.ends[e.edge][e.forward ? 0 : 1]; }
inline int edge_head(const Graph& g, OrientedEdge e) { return g.ends[e.edge][e.forward ? 1 : 0]; }

// A walk; steps[0] is traversed first.  The empty path sits at one vertex.
struct EdgePath {
  int src = -1, tgt = -1;
  std::vector<OrientedEdge> steps;
  bool operator==(const EdgePath&) const = default;
};

// Throws not_a_path unless consecutive steps chain from src to tgt.
void check_path(const Graph& g, const EdgePath& p);

// Cancels immediate backtracking (a step followed by its reverse) until
// none remains.  The result is independent of cancellation order.
EdgePath reduce_path(const Graph& g, EdgePath p);

// Group labels on oriented edges with label(reverse) = label^-1, stored on
// the forward orientations.
struct EdgeCocycle {
  GraphRef graph;
  FiniteGroup group;
  std::vector<int> label;

  int value(OrientedEdge e) const {
    return e.forward ? label[e.edge] : group.inv(label[e.edge]);
  }
  bool operator==(const EdgeCocycle& o) const {
    return *graph == *o.graph && group == o.group && label == o.label;
  }
};

ValidationReport validate_cocycle(const EdgeCocycle& c);

EdgeCocycle trivial_cocycle(GraphRef g, FiniteGroup k);

// Product of the step labels along the path, first step rightmost.
int holonomy(const EdgeCocycle& c, const EdgePath& p);

// Vertex relabeling; sends label(e) to at[head]·label(e)·at[tail]^-1.
struct GaugeTransform {
  std::vector<int> at;
  bool operator==(const GaugeTransform&) const = default;
};

GaugeTransform identity_gauge(const Graph& g, const FiniteGroup& k);
GaugeTransform compose_gauge(const FiniteGroup& k, const GaugeTransform& second,
                             const GaugeTransform& first);
GaugeTransform inverse_gauge(const FiniteGroup& k, const GaugeTransform& t);
EdgeCocycle apply_gauge(const GaugeTransform& t, const EdgeCocycle& c);

// A transform t with apply_gauge(t, c1) == c2, or nullopt.  Propagates over
// a spanning forest, trying every group element at each component root, and
// checks the leftover edges.  Throws mismatch unless the cocycles share
// their graph and group.
std::optional<GaugeTransform> gauge_equivalent(const EdgeCocycle& c1, const EdgeCocycle& c2);

// Gauge classes of K-cocycles on g.  Fixing a spanning forest trivializes
// its edges; what remains is one K-value per leftover edge, with the
// residual relabelings acting by simultaneous conjugation per component.
// Representatives carry the identity on forest edges and the
// lexicographically least tuple of its conjugation orbit on the rest.
struct BundleClassification {
  GraphRef graph;
  FiniteGroup group;
  std::vector<int> forest;  // edge indices, ascending
  std::vector<int> chords;  // the rest, ascending
  std::vector<EdgeCocycle> representatives;

  int count() const { return (int)representatives.size(); }
};

BundleClassification classify_bundles(GraphRef g, const FiniteGroup& k);

// A subgraph named by parent indices.
struct Subgraph {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Throws not_subgraph on an index out of range, a duplicate, or an edge
// with an endpoint outside the chosen vertices.
GraphRef subgraph(const Graph& g, const Subgraph& sel);

EdgeCocycle restrict_cocycle(const EdgeCocycle& c, const Subgraph& sel);

// The cycle C_n covered by two overlapping arcs, with the trivial and the
// one-twisted-edge cocycle.  The arcs are trees, so both cocycles become
// equivalent on each arc; globally they are not (for a group with at least
// two elements), and no choice of arc transforms agrees on the whole
// overlap.  Throws arc_cover_undefined for n < 3.
struct CircleDemo {
  GraphRef circle;
  Subgraph arc1, arc2;
  EdgeCocycle plain, twisted;
  int global_classes = 0;
  int arc1_classes = 0;
  int arc2_classes = 0;
  GaugeTransform on_arc1, on_arc2;  // rewrite plain into twisted on each arc
  std::vector<int> overlap;         // vertices on both arcs
  bool obstruction = false;
  std::string to_string() const;
};

CircleDemo circle_demo(int n, const FiniteGroup& k = cyclic_group(2));

}  // namespace gpd
