#pragma once

#include <optional>
#include <utility>

#include "gpd/error.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

struct GroupoidFunctor {
  GroupoidRef source, target;
  std::vector<int> obj_map;  // per source object
  std::vector<int> arr_map;  // per source arrow

  bool operator==(const GroupoidFunctor& o) const {
    return *source == *o.source && *target == *o.target && obj_map == o.obj_map &&
           arr_map == o.arr_map;
  }
};

ValidationReport validate_functor(const GroupoidFunctor& f);

GroupoidFunctor identity_functor(GroupoidRef g);

// outer ∘ inner, i.e. inner applied first.
GroupoidFunctor compose_functors(const GroupoidFunctor& outer, const GroupoidFunctor& inner);

// Equivalence is decided by two finite checks:
//  (1) arrows map bijectively onto triples (x, y, h) with h: F(x) -> F(y);
//  (2) every target object receives an arrow from the image of F.
// Witnesses name the first counterexample in lexicographic order.
struct EquivalenceVerdict {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  std::optional<std::pair<int, int>> collision;      // two arrows, same (src, tgt, image)
  std::optional<std::array<int, 3>> missing_triple;  // (x, y, h) hit by no arrow
  std::optional<int> unreached_object;               // target object
  bool ok() const { return fully_faithful && essentially_surjective; }
};

EquivalenceVerdict is_equivalence(const GroupoidFunctor& f);

// All functors source -> target, lexicographic by object then arrow images.
// Stops after cap results; *truncated reports whether the cap was hit.
std::vector<GroupoidFunctor> enumerate_functors(GroupoidRef source, GroupoidRef target,
                                                size_t cap, bool* truncated = nullptr);

struct NatTransform {
  GroupoidFunctor from, to;
  std::vector<int> component;  // per source object: target arrow from(x) -> to(x)
};

ValidationReport validate_transform(const NatTransform& t);

NatTransform identity_transform(const GroupoidFunctor& f);

// Composite of alpha: f => g followed by beta: g => h.
NatTransform vertical_compose(const NatTransform& beta, const NatTransform& alpha);

// Whiskered composite across functor composition: alpha between functors
// G -> H, beta between functors H -> K; result lives between the composites.
NatTransform horizontal_compose(const NatTransform& beta, const NatTransform& alpha);

// Components in a groupoid are automatically invertible, so any natural
// transformation found is an isomorphism.  First found in lexicographic
// component order, std::nullopt if none.
std::optional<NatTransform> find_natural_isomorphism(const GroupoidFunctor& f,
                                                     const GroupoidFunctor& g);

}  // namespace gpd
