#pragma once

#include "gpd/error.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

// Right action of a groupoid on a finite set along an anchor map.
// p·h is defined exactly when anchor(p) = tgt(h), and then lands at src(h).
struct RightAction {
  GroupoidRef groupoid;
  std::vector<std::string> carrier;
  std::vector<int> anchor;  // carrier -> objects
  std::vector<int> act;     // |carrier| x |arrows|, -1 outside the domain

  bool defined(int p, int h) const { return anchor[p] == groupoid->tgt[h]; }
  int apply(int p, int h) const { return act[(size_t)p * groupoid->num_arrows() + h]; }
};

ValidationReport validate_right_action(const RightAction& a);

// Left action: g·p defined exactly when src(g) = anchor(p), landing at tgt(g).
struct LeftAction {
  GroupoidRef groupoid;
  std::vector<std::string> carrier;
  std::vector<int> anchor;
  std::vector<int> act;  // |arrows| x |carrier|, -1 outside the domain

  bool defined(int g, int p) const { return groupoid->src[g] == anchor[p]; }
  int apply(int g, int p) const { return act[(size_t)g * carrier.size() + p]; }
};

ValidationReport validate_left_action(const LeftAction& a);

struct PrincipalBundle {
  RightAction action;
  std::vector<std::string> base;
  std::vector<int> proj;  // carrier -> base
};

// Principality is the bijectivity of (p, h) -> (p, p·h) onto pairs in a
// common fiber, together with fiberwise invariance and a surjective
// projection.  Witness indices name the first failure found.
struct PrincipalityReport {
  bool surjective = true, invariant = true, free = true, transitive = true;
  std::optional<int> missed_base;                  // base point with empty fiber
  std::optional<std::pair<int, int>> drift;        // (p, h) moving between fibers
  std::optional<std::array<int, 3>> collision;     // (p, h1, h2) with p·h1 = p·h2
  std::optional<std::pair<int, int>> disconnected; // same fiber, no connecting arrow
  bool ok() const { return surjective && invariant && free && transitive; }
};

PrincipalityReport is_principal(const PrincipalBundle& b);

// The unique h with p1·h = p2 for two points of one fiber.
// Throws different_fibers if proj disagrees, not_principal if no h exists.
int division(const PrincipalBundle& b, int p1, int p2);

// H acting on its own arrows by composition: proj = tgt, anchor = src.
PrincipalBundle unit_bundle(GroupoidRef h);

}  // namespace gpd
