#pragma once

#include <vector>

#include "gpd/bibundle.hpp"
#include "gpd/graph_bundles.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"

// Independent cross-checks used by the test suites.  These deliberately take
// the slow road: raw enumeration plus first-principles definitions, no reuse
// of the decision procedures they are meant to confirm.
namespace oracles {

// All group homomorphisms a -> b, each as an element map.
std::vector<std::vector<int>> group_homs(const gpd::FiniteGroup& a, const gpd::FiniteGroup& b);

// Homomorphisms up to conjugation in the target.
int hom_classes_up_to_conjugacy(const gpd::FiniteGroup& a, const gpd::FiniteGroup& b);

// Searches the functor bundles <f> for one that is principal on both sides,
// checking principality from the definitions.  Every invertible bundle is
// isomorphic to such an <f>, so this decides equivalence by search.
bool biprincipal_bundle_exists(gpd::GroupoidRef g, gpd::GroupoidRef h, size_t cap = 100000);

// Point-by-point check that m is a bijection of carriers preserving both
// anchors and both actions.
bool is_equivariant_bijection(const gpd::Bibundle& p, const gpd::Bibundle& q,
                              const std::vector<int>& m);

// Orbitwise classification count: a functor class picks, for every orbit of
// the source, a target orbit and a conjugacy class of isotropy homomorphisms.
long long functor_class_count(const gpd::FiniteGroupoid& g, const gpd::FiniteGroupoid& h);

// Gauge classes by brute force: every edge labeling, modulo every vertex
// relabeling.  Only fit for |K|^(E+V) in the millions.
int gauge_class_count(const gpd::Graph& g, const gpd::FiniteGroup& k);

}  // namespace oracles
