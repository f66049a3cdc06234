#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// Five tables minus inverses: a finite category.  Same composition
// convention as the groupoid tables, compose(g, f) = g∘f.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;
  std::vector<int> unit;
  std::vector<std::array<int, 3>> comp;
};

class FiniteCategory {
public:
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;
  std::vector<int> unit;
  std::vector<std::array<int, 3>> comp_entries;

  int num_objects() const { return (int)objects.size(); }
  int num_arrows() const { return (int)arrows.size(); }
  bool composable(int g, int f) const { return src[g] == tgt[f]; }
  int compose(int g, int f) const;
  bool is_unit(int a) const { return src[a] == tgt[a] && unit[src[a]] == a; }

  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& name) const;

  bool operator==(const FiniteCategory& o) const;

  void index();

private:
  std::unordered_map<long long, int> comp_;
  std::unordered_map<std::string, int> obj_by_name_, arr_by_name_;
};

using CategoryRef = std::shared_ptr<const FiniteCategory>;

struct ValidatedCategory {
  ValidationReport report;
  CategoryRef category;  // null unless report.ok()
};

ValidatedCategory validate_category(const CategoryData& raw);

// For internal construction; throws std::logic_error on a violation.
CategoryRef make_category(const CategoryData& data);

// Forgets the inverses.
CategoryRef category_of(const FiniteGroupoid& g);

struct CategoryFunctor {
  CategoryRef source, target;
  std::vector<int> obj_map;
  std::vector<int> arr_map;
};

ValidationReport validate_category_functor(const CategoryFunctor& f);

CategoryFunctor identity_category_functor(CategoryRef c);

}  // namespace gpd
