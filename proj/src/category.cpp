#include "gpd/category.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gpd {

namespace {
long long key(int g, int f, int num_arrows) { return (long long)g * num_arrows + f; }
}

int FiniteCategory::compose(int g, int f) const {
  auto it = comp_.find(key(g, f, num_arrows()));
  assert(it != comp_.end());
  return it->second;
}

std::optional<int> FiniteCategory::object_index(const std::string& name) const {
  auto it = obj_by_name_.find(name);
  if (it == obj_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FiniteCategory::arrow_index(const std::string& name) const {
  auto it = arr_by_name_.find(name);
  if (it == arr_by_name_.end()) return std::nullopt;
  return it->second;
}

bool FiniteCategory::operator==(const FiniteCategory& o) const {
  return objects == o.objects && arrows == o.arrows && src == o.src && tgt == o.tgt &&
         unit == o.unit && comp_entries == o.comp_entries;
}

void FiniteCategory::index() {
  std::sort(comp_entries.begin(), comp_entries.end());
  comp_.clear();
  comp_.reserve(comp_entries.size());
  for (const auto& e : comp_entries) comp_[key(e[0], e[1], num_arrows())] = e[2];
  obj_by_name_.clear();
  arr_by_name_.clear();
  for (int i = 0; i < num_objects(); ++i) obj_by_name_[objects[i]] = i;
  for (int i = 0; i < num_arrows(); ++i) arr_by_name_[arrows[i]] = i;
}

ValidatedCategory validate_category(const CategoryData& raw) {
  ValidatedCategory out;
  ValidationReport& rep = out.report;
  const int n = (int)raw.objects.size();
  const int a = (int)raw.arrows.size();

  if ((int)raw.src.size() != a) rep.add("MissingTable", "src has " + std::to_string(raw.src.size()) + " entries, expected " + std::to_string(a));
  if ((int)raw.tgt.size() != a) rep.add("MissingTable", "tgt has " + std::to_string(raw.tgt.size()) + " entries, expected " + std::to_string(a));
  if ((int)raw.unit.size() != n) rep.add("MissingTable", "unit has " + std::to_string(raw.unit.size()) + " entries, expected " + std::to_string(n));
  if (!rep.ok()) return out;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (raw.objects[i] == raw.objects[j])
        rep.add("DuplicateName", "object " + raw.objects[i]);
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j)
      if (raw.arrows[i] == raw.arrows[j]) rep.add("DuplicateName", "arrow " + raw.arrows[i]);

  auto obj_ok = [&](int x) { return x >= 0 && x < n; };
  auto arr_ok = [&](int f) { return f >= 0 && f < a; };
  for (int i = 0; i < a; ++i)
    if (!obj_ok(raw.src[i]) || !obj_ok(raw.tgt[i]))
      rep.add("RangeError", "arrow " + raw.arrows[i] + " has out-of-range endpoints");
  for (int x = 0; x < n; ++x)
    if (!arr_ok(raw.unit[x]))
      rep.add("RangeError", "unit of object " + raw.objects[x] + " out of range");
  for (const auto& e : raw.comp)
    if (!arr_ok(e[0]) || !arr_ok(e[1]) || !arr_ok(e[2]))
      rep.add("RangeError", "composition entry out of range");
  if (!rep.ok()) return out;

  for (int x = 0; x < n; ++x) {
    int u = raw.unit[x];
    if (raw.src[u] != x || raw.tgt[u] != x)
      rep.add("UnitViolation",
              "unit of " + raw.objects[x] + " is " + raw.arrows[u] + " with wrong endpoints");
  }

  std::unordered_map<long long, int> comp;
  comp.reserve(raw.comp.size());
  for (const auto& e : raw.comp) {
    if (raw.src[e[0]] != raw.tgt[e[1]]) {
      rep.add("NonComposablePairInTable",
              "(" + raw.arrows[e[0]] + ", " + raw.arrows[e[1]] + ")");
      continue;
    }
    auto [it, fresh] = comp.emplace(key(e[0], e[1], a), e[2]);
    if (!fresh && it->second != e[2])
      rep.add("ConflictingCompositionEntry",
              "(" + raw.arrows[e[0]] + ", " + raw.arrows[e[1]] + ")");
  }
  for (int g = 0; g < a; ++g)
    for (int f = 0; f < a; ++f)
      if (raw.src[g] == raw.tgt[f] && !comp.count(key(g, f, a)))
        rep.add("MissingCompositionEntry",
                "(" + raw.arrows[g] + ", " + raw.arrows[f] + ")");
  if (!rep.ok()) return out;

  auto m = [&](int g, int f) { return comp.at(key(g, f, a)); };

  for (int g = 0; g < a; ++g)
    for (int f = 0; f < a; ++f) {
      if (raw.src[g] != raw.tgt[f]) continue;
      int c = m(g, f);
      if (raw.src[c] != raw.src[f] || raw.tgt[c] != raw.tgt[g])
        rep.add("CompositionEndpointViolation",
                raw.arrows[g] + "∘" + raw.arrows[f] + " = " + raw.arrows[c]);
    }
  if (!rep.ok()) return out;

  for (int f = 0; f < a; ++f)
    for (int g = 0; g < a; ++g) {
      if (raw.src[g] != raw.tgt[f]) continue;
      for (int h = 0; h < a; ++h) {
        if (raw.src[h] != raw.tgt[g]) continue;
        if (m(h, m(g, f)) != m(m(h, g), f)) {
          rep.add("AssociativityViolation",
                  "(" + raw.arrows[h] + ", " + raw.arrows[g] + ", " + raw.arrows[f] + ")");
          goto assoc_done;  // first witness in lexicographic (f, g, h) order
        }
      }
    }
assoc_done:

  for (int f = 0; f < a; ++f)
    if (m(f, raw.unit[raw.src[f]]) != f || m(raw.unit[raw.tgt[f]], f) != f)
      rep.add("UnitViolation", raw.arrows[f]);

  if (!rep.ok()) return out;

  auto c = std::make_shared<FiniteCategory>();
  c->objects = raw.objects;
  c->arrows = raw.arrows;
  c->src = raw.src;
  c->tgt = raw.tgt;
  c->unit = raw.unit;
  c->comp_entries.assign(raw.comp.begin(), raw.comp.end());
  c->index();
  out.category = c;
  return out;
}

CategoryRef make_category(const CategoryData& data) {
  auto v = validate_category(data);
  if (!v.report.ok())
    throw std::logic_error("internal construction produced an invalid category:\n" +
                           v.report.to_string());
  return v.category;
}

CategoryRef category_of(const FiniteGroupoid& g) {
  CategoryData d;
  d.objects = g.objects;
  d.arrows = g.arrows;
  d.src = g.src;
  d.tgt = g.tgt;
  d.unit = g.unit;
  d.comp = g.comp_entries;
  return make_category(d);
}

ValidationReport validate_category_functor(const CategoryFunctor& f) {
  ValidationReport rep;
  if (!f.source || !f.target) {
    rep.add("MissingTable", "both category references are required");
    return rep;
  }
  const FiniteCategory& C = *f.source;
  const FiniteCategory& D = *f.target;
  if ((int)f.obj_map.size() != C.num_objects() || (int)f.arr_map.size() != C.num_arrows()) {
    rep.add("MissingTable", "object and arrow maps must cover the source");
    return rep;
  }
  for (int x : f.obj_map)
    if (x < 0 || x >= D.num_objects()) {
      rep.add("RangeError", "object image out of range");
      return rep;
    }
  for (int a : f.arr_map)
    if (a < 0 || a >= D.num_arrows()) {
      rep.add("RangeError", "arrow image out of range");
      return rep;
    }
  for (int a = 0; a < C.num_arrows(); ++a) {
    if (D.src[f.arr_map[a]] != f.obj_map[C.src[a]] ||
        D.tgt[f.arr_map[a]] != f.obj_map[C.tgt[a]])
      rep.add("EndpointViolation", "arrow " + C.arrows[a]);
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < C.num_objects(); ++x)
    if (f.arr_map[C.unit[x]] != D.unit[f.obj_map[x]])
      rep.add("UnitViolation", "object " + C.objects[x]);
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int h = 0; h < C.num_arrows(); ++h) {
      if (C.src[g] != C.tgt[h]) continue;
      if (f.arr_map[C.compose(g, h)] != D.compose(f.arr_map[g], f.arr_map[h]))
        rep.add("CompositionViolation", C.arrows[g] + "∘" + C.arrows[h]);
    }
  return rep;
}

CategoryFunctor identity_category_functor(CategoryRef c) {
  CategoryFunctor f{c, c, {}, {}};
  f.obj_map.resize(c->num_objects());
  f.arr_map.resize(c->num_arrows());
  for (int i = 0; i < c->num_objects(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->num_arrows(); ++i) f.arr_map[i] = i;
  return f;
}

}  // namespace gpd
