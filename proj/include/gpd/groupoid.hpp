#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpd/group.hpp"

namespace gpd {

// Unvalidated five-table description.  Indices refer to positions in the
// objects/arrows lists; identifiers keep input order throughout.
struct GroupoidData {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;                // per arrow
  std::vector<int> unit;                    // per object
  std::vector<std::array<int, 3>> comp;     // entries (g, f, m) with m = g∘f
  std::vector<int> inv;                     // per arrow
};

// A validated finite groupoid.  compose(g, f) is "f then g", i.e. g∘f,
// defined exactly when src(g) == tgt(f).  Every module uses this convention.
class FiniteGroupoid {
public:
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;
  std::vector<int> unit;
  std::vector<int> inv;
  std::vector<std::array<int, 3>> comp_entries;  // sorted by (g, f)

  int num_objects() const { return (int)objects.size(); }
  int num_arrows() const { return (int)arrows.size(); }
  bool composable(int g, int f) const { return src[g] == tgt[f]; }
  int compose(int g, int f) const;  // precondition: composable(g, f)
  int inverse(int f) const { return inv[f]; }
  bool is_unit(int a) const { return unit[src[a]] == a; }

  const std::vector<int>& arrows_from(int x) const { return from_[x]; }
  const std::vector<int>& arrows_into(int x) const { return into_[x]; }
  const std::vector<int>& hom(int x, int y) const { return hom_[x * num_objects() + y]; }

  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& name) const;

  bool operator==(const FiniteGroupoid& o) const;

  // Builds lookup structures; call after filling the tables.  Trusts shapes.
  void index();

private:
  std::unordered_map<long long, int> comp_;
  std::vector<std::vector<int>> from_, into_, hom_;
  std::unordered_map<std::string, int> obj_by_name_, arr_by_name_;
};

using GroupoidRef = std::shared_ptr<const FiniteGroupoid>;

struct ValidatedGroupoid {
  ValidationReport report;
  GroupoidRef groupoid;  // null unless report.ok()
};

// Checks the five tables against the groupoid axioms.  Structural problems
// (shapes, ranges, composition domain) stop the deeper law checks; law
// violations are all collected with first witnesses named.
ValidatedGroupoid validate_groupoid(const GroupoidData& raw);

// For internally constructed groupoids: validate and throw std::logic_error
// on any violation (a construction bug, not a user error).
GroupoidRef make_groupoid(const GroupoidData& data);

struct OrbitPartition {
  std::vector<std::vector<int>> classes;  // each ascending; ordered by first object
  std::vector<int> class_of;              // object -> class
  std::vector<int> representative;        // per class: its least object
  std::vector<FiniteGroup> isotropy;      // loops at the representative
  std::vector<std::vector<int>> isotropy_arrows;  // arrow indices behind each group
};

OrbitPartition orbit_space(const FiniteGroupoid& g);

}  // namespace gpd
