#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gpd {

struct Violation {
  std::string rule;    // which identity failed
  std::string detail;  // witnesses, human readable
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string detail) {
    violations.push_back({std::move(rule), std::move(detail)});
  }
  std::string to_string() const;
};

// Finite group as a full multiplication table.  op(a,b) composes like
// functions: apply b first, then a.  This matches groupoid composition
// (see FiniteGroupoid::compose) so isotropy groups embed verbatim.
struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<int> table;  // table[a*n + b] = a·b
  int identity = 0;
  std::vector<int> inverse;

  int size() const { return (int)elements.size(); }
  int op(int a, int b) const { return table[a * size() + b]; }
  int inv(int a) const { return inverse[a]; }

  bool operator==(const FiniteGroup&) const = default;
};

ValidationReport validate_group(const FiniteGroup& g);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);

// Multiplicative order of each element.
std::vector<int> element_orders(const FiniteGroup& g);

// Backtracking search for a group isomorphism a -> image[a].
// Deterministic: lexicographically first found, std::nullopt if none.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b);

// Left action of a finite group on a finite set: act[g*|X| + x] = g·x.
struct GroupAction {
  FiniteGroup group;
  std::vector<std::string> carrier;
  std::vector<int> act;

  int apply(int g, int x) const { return act[g * (int)carrier.size() + x]; }
};

ValidationReport validate_action(const GroupAction& a);

}  // namespace gpd
