#include "gpd/groupoid.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace gpd {

namespace {
long long key(int g, int f, int num_arrows) { return (long long)g * num_arrows + f; }
}

int FiniteGroupoid::compose(int g, int f) const {
  auto it = comp_.find(key(g, f, num_arrows()));
  assert(it != comp_.end());
  return it->second;
}

std::optional<int> FiniteGroupoid::object_index(const std::string& name) const {
  auto it = obj_by_name_.find(name);
  if (it == obj_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FiniteGroupoid::arrow_index(const std::string& name) const {
  auto it = arr_by_name_.find(name);
  if (it == arr_by_name_.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& o) const {
  return objects == o.objects && arrows == o.arrows && src == o.src && tgt == o.tgt &&
         unit == o.unit && inv == o.inv && comp_entries == o.comp_entries;
}

void FiniteGroupoid::index() {
  const int n = num_objects(), a = num_arrows();
  from_.assign(n, {});
  into_.assign(n, {});
  hom_.assign((size_t)n * n, {});
  for (int i = 0; i < a; ++i) {
    from_[src[i]].push_back(i);
    into_[tgt[i]].push_back(i);
    hom_[(size_t)src[i] * n + tgt[i]].push_back(i);
  }
  std::sort(comp_entries.begin(), comp_entries.end());
  comp_.clear();
  comp_.reserve(comp_entries.size());
  for (const auto& e : comp_entries) comp_[key(e[0], e[1], a)] = e[2];
  obj_by_name_.clear();
  arr_by_name_.clear();
  for (int i = 0; i < n; ++i) obj_by_name_[objects[i]] = i;
  for (int i = 0; i < a; ++i) arr_by_name_[arrows[i]] = i;
}

ValidatedGroupoid validate_groupoid(const GroupoidData& raw) {
  ValidatedGroupoid out;
  ValidationReport& rep = out.report;
  const int n = (int)raw.objects.size();
  const int a = (int)raw.arrows.size();

  if ((int)raw.src.size() != a) rep.add("MissingTable", "src has " + std::to_string(raw.src.size()) + " entries, expected " + std::to_string(a));
  if ((int)raw.tgt.size() != a) rep.add("MissingTable", "tgt has " + std::to_string(raw.tgt.size()) + " entries, expected " + std::to_string(a));
  if ((int)raw.unit.size() != n) rep.add("MissingTable", "unit has " + std::to_string(raw.unit.size()) + " entries, expected " + std::to_string(n));
  if ((int)raw.inv.size() != a) rep.add("MissingTable", "inv has " + std::to_string(raw.inv.size()) + " entries, expected " + std::to_string(a));
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
  for (int i = 0; i < a; ++i) {
    if (!obj_ok(raw.src[i]) || !obj_ok(raw.tgt[i]))
      rep.add("RangeError", "arrow " + raw.arrows[i] + " has out-of-range endpoints");
    if (!arr_ok(raw.inv[i]))
      rep.add("RangeError", "inv of arrow " + raw.arrows[i] + " out of range");
  }
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

  // composition domain: defined exactly on composable pairs, no conflicts
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

  for (int f = 0; f < a; ++f) {
    if (m(f, raw.unit[raw.src[f]]) != f || m(raw.unit[raw.tgt[f]], f) != f)
      rep.add("UnitViolation", raw.arrows[f]);
  }

  for (int f = 0; f < a; ++f) {
    int i = raw.inv[f];
    if (raw.src[i] != raw.tgt[f] || raw.tgt[i] != raw.src[f]) {
      rep.add("InverseViolation", raw.arrows[f] + " (endpoints)");
      continue;
    }
    if (m(i, f) != raw.unit[raw.src[f]] || m(f, i) != raw.unit[raw.tgt[f]])
      rep.add("InverseViolation", raw.arrows[f]);
  }

  if (!rep.ok()) return out;

  auto g = std::make_shared<FiniteGroupoid>();
  g->objects = raw.objects;
  g->arrows = raw.arrows;
  g->src = raw.src;
  g->tgt = raw.tgt;
  g->unit = raw.unit;
  g->inv = raw.inv;
  g->comp_entries.assign(raw.comp.begin(), raw.comp.end());
  g->index();
  out.groupoid = g;
  return out;
}

GroupoidRef make_groupoid(const GroupoidData& data) {
  auto v = validate_groupoid(data);
  if (!v.report.ok())
    throw std::logic_error("internal construction produced an invalid groupoid:\n" +
                           v.report.to_string());
  return v.groupoid;
}

OrbitPartition orbit_space(const FiniteGroupoid& g) {
  OrbitPartition p;
  const int n = g.num_objects();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < g.num_arrows(); ++f) {
    int a = find(g.src[f]), b = find(g.tgt[f]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (p.class_of[r] < 0) {
      p.class_of[r] = (int)p.classes.size();
      p.classes.push_back({});
      p.representative.push_back(r);
    }
    p.class_of[x] = p.class_of[r];
    p.classes[p.class_of[x]].push_back(x);
  }
  for (size_t c = 0; c < p.classes.size(); ++c) {
    int r = p.representative[c];
    std::vector<int> loops;
    for (int f : g.hom(r, r)) loops.push_back(f);
    FiniteGroup grp;
    std::vector<int> pos(g.num_arrows(), -1);
    for (size_t i = 0; i < loops.size(); ++i) {
      pos[loops[i]] = (int)i;
      grp.elements.push_back(g.arrows[loops[i]]);
    }
    const int k = (int)loops.size();
    grp.table.resize((size_t)k * k);
    grp.inverse.resize(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) grp.table[i * k + j] = pos[g.compose(loops[i], loops[j])];
      grp.inverse[i] = pos[g.inverse(loops[i])];
    }
    grp.identity = pos[g.unit[r]];
    p.isotropy.push_back(std::move(grp));
    p.isotropy_arrows.push_back(std::move(loops));
  }
  return p;
}

}  // namespace gpd
