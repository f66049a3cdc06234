#pragma once

#include "gpd/bibundle.hpp"

namespace gpd {

// Per-orbit skeleton data: representative object and its isotropy group,
// with element orders precomputed.  Two groupoids are linked by an invertible
// bibundle exactly when these lists match up to orbitwise group isomorphism.
struct MoritaInvariant {
  std::vector<int> orbit_rep;          // least object of each orbit
  std::vector<FiniteGroup> isotropy;   // loops at the representative
  std::vector<std::vector<int>> orders;  // sorted element orders per orbit
};

MoritaInvariant morita_invariant(const FiniteGroupoid& g);

struct MoritaDecision {
  bool equivalent = false;
  // false when some isotropy group exceeded the cap, so groups were compared
  // by element orders only and no witness was attempted
  bool exact = true;
  std::vector<std::pair<int, int>> orbit_matching;  // G orbit -> H orbit
  std::optional<Bibundle> witness;                  // invertible, G -> H
};

// Decides equivalence by matching orbits with isomorphic isotropy, then
// builds a witness through the common skeleton.  Isotropy groups above
// isotropy_cap are matched by order profile alone and flagged.
MoritaDecision morita_equivalent(GroupoidRef g, GroupoidRef h, size_t isotropy_cap = 16);

// One bibundle per isomorphism class of bibundles g -> h.  Enumerates
// functors (every bundle here admits a section), groups them by natural
// isomorphism, and returns the bundle of the first functor in each class.
// Throws bound_exceeded if the functor enumeration overruns cap.
std::vector<Bibundle> hs_hom_classes(GroupoidRef g, GroupoidRef h, size_t cap = 4096);

struct HsFactorization {
  GroupoidRef domain;           // G', a cover refinement of the left groupoid
  GroupoidFunctor equivalence;  // w': G' -> G
  GroupoidFunctor functor;      // f': G' -> H
  Bibundle composite;           // <f'> after the inverse of <w'>
  std::vector<int> witness;     // iso: composite -> p
};

// Presents any bibundle as a functor bundle composed with the inverse of an
// equivalence bundle: the two-step shape of arrows in the localization.
HsFactorization hs_factorization(const Bibundle& p);

}  // namespace gpd
