#pragma once

#include "gpd/actions.hpp"
#include "gpd/constructions.hpp"
#include "gpd/functor.hpp"

namespace gpd {

// A left G-, right H-bibundle.  The right action is principal over the left
// anchor; the right anchor is invariant under the left action and the two
// actions commute.  validate_bibundle checks all of it.
struct Bibundle {
  GroupoidRef left;   // G
  GroupoidRef right;  // H
  std::vector<std::string> carrier;
  std::vector<int> anchor_left;   // carrier -> G objects
  std::vector<int> anchor_right;  // carrier -> H objects
  std::vector<int> left_act;      // |G1| x |carrier|, -1 outside the domain
  std::vector<int> right_act;     // |carrier| x |H1|, -1 outside the domain

  int size() const { return (int)carrier.size(); }
  bool ldefined(int g, int p) const { return left->src[g] == anchor_left[p]; }
  bool rdefined(int p, int h) const { return anchor_right[p] == right->tgt[h]; }
  int lapply(int g, int p) const { return left_act[(size_t)g * carrier.size() + p]; }
  int rapply(int p, int h) const { return right_act[(size_t)p * right->num_arrows() + h]; }

  LeftAction left_action() const;
  RightAction right_action() const;
  PrincipalBundle right_bundle() const;  // right action over the left anchor
};

ValidationReport validate_bibundle(const Bibundle& b);

// Validates and throws std::logic_error on failure; for internal outputs.
Bibundle checked(Bibundle b);

// The bundle of a functor: carrier pairs (x, h) with f(x) = tgt(h),
// g·(x,h) = (tgt g, f(g)h) and (x,h)·k = (x, hk).
Bibundle from_functor(const GroupoidFunctor& f);

// Middle quotient composite: carrier the H-orbits of compatible pairs,
// (p,q) ~ (p·h, h⁻¹·q); class representatives are the least pairs.
// P goes G -> H, Q goes H -> K, the result G -> K.
// Throws middle_mismatch if P's right groupoid differs from Q's left.
Bibundle compose(const Bibundle& p, const Bibundle& q);

// Equivariant anchor-preserving bijection of carriers, found by matching
// one orbit representative at a time and propagating along both actions.
// Throws endpoint_mismatch on groupoid mismatch, bound_exceeded above cap.
std::optional<std::vector<int>> find_isomorphism(const Bibundle& p, const Bibundle& q,
                                                 size_t cap = 64);

// Principality of the left action over the right anchor: the missing half of
// biprincipality.  Invariance of the right anchor is a bibundle axiom and is
// not rechecked here.
struct TorsorReport {
  bool surjective = true, free = true, transitive = true;
  std::optional<int> missed_base;                   // right object with empty fiber
  std::optional<std::array<int, 3>> collision;      // (g1, g2, p) with g1·p = g2·p
  std::optional<std::pair<int, int>> disconnected;  // same right fiber, no g
  bool ok() const { return surjective && free && transitive; }
};

TorsorReport is_left_principal(const Bibundle& b);

struct InverseBibundle {
  Bibundle inverse;
  std::vector<int> unit_left;   // iso: compose(p, inverse) -> <id> on the left groupoid
  std::vector<int> unit_right;  // iso: compose(inverse, p) -> <id> on the right groupoid
};

// Swaps anchors and transposes both actions through groupoid inversion.
// Requires the left action principal over the right anchor
// (throws not_left_principal otherwise).
InverseBibundle invert(const Bibundle& p);

// The two finite checks behind "invertible iff equivalence": functor
// equivalence on one side, left-principality of its bundle on the other.
struct EquivalencePrincipalityReport {
  EquivalenceVerdict equivalence;
  TorsorReport principality;
  bool agree = false;  // both verdicts equal
};

EquivalencePrincipalityReport equivalence_iff_principal(const GroupoidFunctor& f);

// Rebuilds a functor from a global section of the left anchor:
// f(x) = right anchor of the section point, f(g) by fiberwise division.
// Throws not_a_section if the section misses or drifts.
GroupoidFunctor section_to_functor(const Bibundle& p, const std::vector<int>& section);

struct CoverFactorization {
  SetCover cover;              // of the left groupoid's objects
  GroupoidRef refinement;      // pullback of the left groupoid along the cover
  GroupoidFunctor projection;  // refinement -> left groupoid, an equivalence
  Bibundle pulled_back;        // compose(<projection>, p)
  GroupoidFunctor functor;     // refinement -> right groupoid
  std::vector<int> witness;    // iso: <functor> -> pulled_back
};

// Presents p as the bundle of a functor after pulling back along a cover.
// With no cover given the identity cover works: finite fibers always admit
// a global section, chosen lexicographically.  A caller-supplied cover
// exercises the general refinement route.
CoverFactorization factor_through_cover(const Bibundle& p, const SetCover* cover = nullptr);

}  // namespace gpd
