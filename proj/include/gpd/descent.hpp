#pragma once

#include <map>
#include <utility>

#include "gpd/actions.hpp"
#include "gpd/bibundle.hpp"
#include "gpd/constructions.hpp"
#include "gpd/error.hpp"

namespace gpd {

// Local principal bundles over the pieces of a cover, glued along
// equivariant identifications on the overlaps.  A transition keyed (i, j)
// carries points of bundle j to points of bundle i, as a full table over
// bundle j's carrier with -1 off the overlap.  Only keys with i < j are
// required; the reverse direction is derived as the inverse when absent,
// and the diagonal is always the identity.
struct DescentDatum {
  GroupoidRef h;
  SetCover cover;
  std::vector<PrincipalBundle> bundles;  // bundle i lives over cover.pieces[i]
  std::map<std::pair<int, int>, std::vector<int>> transitions;
};

ValidationReport validate_descent(const DescentDatum& d);

// The identification carrying bundle j into bundle i, stored or derived.
// Assumes a structurally valid datum.
std::vector<int> transition(const DescentDatum& d, int i, int j);

struct CocycleReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // first violating ordered triple
  int point = -1;              // carrier point of bundle k
  std::string detail;
};

// Verifies the triple identity: going k -> i directly agrees with going
// k -> j -> i wherever all three pieces meet.  Ordered triples are scanned
// lexicographically, repeats included, so an explicitly stored reverse
// that fails to invert its partner is caught at (i, j, i).  Throws
// mismatch unless the datum is structurally valid.
CocycleReport check_cocycle(const DescentDatum& d);

// Per-piece carrier maps between two data over the same cover and groupoid.
struct DescentArrow {
  std::vector<std::vector<int>> maps;
};

// Valid when every piece map is an equivariant bijection over its piece
// and the square with each transition commutes.
ValidationReport validate_descent_arrow(const DescentDatum& from, const DescentDatum& to,
                                        const DescentArrow& a);

// Pulls a bundle over the whole base back to every piece; overlaps are
// identified literally, so the triple identity holds by construction.
// Throws mismatch if the cover is not a cover of the bundle's base,
// not_surjective if it misses part of it.
DescentDatum restrict_to_cover(const PrincipalBundle& p, const SetCover& cover);

struct GluedBundle {
  PrincipalBundle bundle;                      // over the datum's full base
  std::vector<std::vector<int>> piece_member;  // [point][piece] -> carrier point or -1
};

// Disjoint union of the piece carriers modulo the identifications; each
// class is represented by its least (piece, point) member and meets every
// piece over its base point exactly once.  Throws cocycle_failure if
// check_cocycle rejects.
GluedBundle glue(const DescentDatum& d);

// The canonical comparison restrict_to_cover(glue(d)) -> d, sending a
// glued point to its member in each piece.
DescentArrow compare_restriction(const GluedBundle& g, const DescentDatum& d);

struct FiberProduct {
  std::vector<std::string> total;  // the bundle's carrier
  std::vector<int> to_base;        // projection to the base set
  std::vector<int> to_objects;     // projection to the groupoid's objects
};

// The fiber product of the classifying map named by p with the canonical
// atlas: concretely p's own total space with its two projections.  Verifies
// that the base projection is onto and each fiber is one free orbit; throws
// not_principal otherwise.
FiberProduct fiber_product_with_atlas(const PrincipalBundle& p);

struct AtlasReconstruction {
  GroupoidRef rebuilt;
  GroupoidFunctor from_original;  // bijective on objects and on arrows
};

// Rebuilds a groupoid from its canonical atlas: same objects, arrows the
// equivariant bijections between fibers of the arrow bundle, composition by
// composing bijections.  The returned functor is checked to be an
// isomorphism onto the rebuilt groupoid.
AtlasReconstruction groupoid_from_atlas(GroupoidRef g);

// A bundle over a set, rephrased as a bibundle out of the discrete
// groupoid on that set.
Bibundle as_bibundle(const PrincipalBundle& p);

}  // namespace gpd
