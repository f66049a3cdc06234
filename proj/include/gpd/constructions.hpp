#pragma once

#include "gpd/error.hpp"
#include "gpd/functor.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

// A cover of a finite base set.  Pieces are subsets given by base indices;
// the total space is their disjoint union, points tagged with piece index,
// so intersections of pieces become literal fiber products.
struct SetCover {
  std::vector<std::string> base;
  std::vector<std::vector<int>> pieces;
};

ValidationReport validate_cover(const SetCover& c);

struct CoverPoint {
  int piece;
  int point;  // base index
  bool operator==(const CoverPoint&) const = default;
};

// Points of the total space, lexicographic by (piece, position in piece).
std::vector<CoverPoint> cover_points(const SetCover& c);
std::string cover_point_name(const SetCover& c, const CoverPoint& p);

// Arrows are pairs (g, x), with (h, g·x)(g, x) = (hg, x).
// Throws invalid_action if the action tables fail their axioms.
GroupoidRef action_groupoid(const GroupAction& a);

struct CechGroupoid {
  GroupoidRef groupoid;            // objects are the tagged cover points
  std::vector<CoverPoint> points;  // object index -> tagged point
  std::vector<int> proj;           // object index -> base index
};

// Objects the total space, arrows the pairs of points over a common base
// point; (y,z)(x,y) = (x,z).  Throws not_surjective if the pieces miss part
// of the base.
CechGroupoid cech_groupoid(const SetCover& c);

struct PullbackGroupoid {
  GroupoidRef groupoid;        // objects the domain, arrows the triples (x, y, g)
  GroupoidFunctor projection;  // (x, y, g) -> g
};

// Pullback along to_objects: domain -> objects of g, with
// (y,z,h)(x,y,g) = (x,z,hg).  Throws unknown_object on a bad index.
PullbackGroupoid pullback_groupoid(GroupoidRef g, const std::vector<std::string>& domain,
                                   const std::vector<int>& to_objects);

// Full subgroupoid on the listed objects (arrows with both endpoints inside).
// Object order follows the list; throws unknown_object on bad or repeated
// entries.
GroupoidRef restrict_groupoid(GroupoidRef g, const std::vector<int>& objects);

// Units only; arrow names prefix the object names with "1".
GroupoidRef discrete_groupoid(const std::vector<std::string>& objects);

// Diagnostics kept for parity with the geometric story.  On finite discrete
// data (s, t): G1 -> G0 x G0 is automatically proper and s is automatically a
// local bijection, so both always hold for a validated groupoid.
bool is_proper(const FiniteGroupoid& g);
bool is_etale(const FiniteGroupoid& g);

}  // namespace gpd
