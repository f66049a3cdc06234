#include "gpd/group.hpp"

#include <algorithm>
#include <sstream>

namespace gpd {

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  if (ok()) {
    os << "valid";
    return os.str();
  }
  for (const auto& v : violations) os << v.rule << ": " << v.detail << "\n";
  return os.str();
}

ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport rep;
  const int n = g.size();
  if ((int)g.table.size() != n * n) {
    rep.add("table shape", "expected " + std::to_string(n * n) + " entries, got " +
                               std::to_string(g.table.size()));
    return rep;
  }
  if ((int)g.inverse.size() != n) {
    rep.add("inverse shape", "expected " + std::to_string(n) + " entries");
    return rep;
  }
  if (g.identity < 0 || g.identity >= n) {
    rep.add("identity range", "index " + std::to_string(g.identity));
    return rep;
  }
  for (int a = 0; a < n * n; ++a)
    if (g.table[a] < 0 || g.table[a] >= n) {
      rep.add("table range", "entry " + std::to_string(a));
      return rep;
    }
  for (int a = 0; a < n; ++a) {
    if (g.op(g.identity, a) != a || g.op(a, g.identity) != a)
      rep.add("identity law", g.elements[a]);
    if (g.inverse[a] < 0 || g.inverse[a] >= n || g.op(g.inverse[a], a) != g.identity ||
        g.op(a, g.inverse[a]) != g.identity)
      rep.add("inverse law", g.elements[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
          rep.add("associativity", "(" + g.elements[a] + "," + g.elements[b] + "," +
                                       g.elements[c] + ")");
          return rep;  // one witness is enough at cubic cost
        }
  return rep;
}

FiniteGroup trivial_group() {
  FiniteGroup g;
  g.elements = {"1"};
  g.table = {0};
  g.identity = 0;
  g.inverse = {0};
  return g;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.elements.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      g.elements.push_back("1");
    else if (i == 1 && n == 2)
      g.elements.push_back("s");
    else
      g.elements.push_back("g" + std::to_string(i));
  }
  g.table.resize(n * n);
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  g.identity = 0;
  return g;
}

std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> ord(g.size());
  for (int a = 0; a < g.size(); ++a) {
    int x = a, k = 1;
    while (x != g.identity) {
      x = g.op(a, x);
      ++k;
    }
    ord[a] = k;
  }
  return ord;
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto orda = element_orders(a), ordb = element_orders(b);
  {
    auto sa = orda, sb = ordb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> img(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  img[a.identity] = b.identity;
  used[b.identity] = true;
  struct Rec {
    const FiniteGroup &a, &b;
    const std::vector<int>&orda, &ordb;
    std::vector<int>& img;
    std::vector<bool>& used;
    bool go(int next) {
      const int n = a.size();
      while (next < n && img[next] >= 0) ++next;
      if (next >= n) return true;
      for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || ordb[cand] != orda[next]) continue;
        img[next] = cand;
        used[cand] = true;
        bool consistent = true;
        for (int x = 0; x < n && consistent; ++x) {
          if (img[x] < 0) continue;
          for (int y = 0; y < n; ++y) {
            if (img[y] < 0) continue;
            int p = a.op(x, y);
            if (img[p] >= 0 && img[p] != b.op(img[x], img[y])) {
              consistent = false;
              break;
            }
          }
        }
        if (consistent && go(next + 1)) return true;
        img[next] = -1;
        used[cand] = false;
      }
      return false;
    }
  } rec{a, b, orda, ordb, img, used};
  if (rec.go(0)) return img;
  return std::nullopt;
}

ValidationReport validate_action(const GroupAction& a) {
  ValidationReport rep = validate_group(a.group);
  if (!rep.ok()) return rep;
  const int n = a.group.size(), m = (int)a.carrier.size();
  if ((int)a.act.size() != n * m) {
    rep.add("action shape", "expected " + std::to_string(n * m) + " entries");
    return rep;
  }
  for (int i = 0; i < n * m; ++i)
    if (a.act[i] < 0 || a.act[i] >= m) {
      rep.add("action range", "entry " + std::to_string(i));
      return rep;
    }
  for (int x = 0; x < m; ++x)
    if (a.apply(a.group.identity, x) != x) rep.add("unit acts trivially", a.carrier[x]);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < m; ++x)
        if (a.apply(a.group.op(g, h), x) != a.apply(g, a.apply(h, x)))
          rep.add("compatibility", "(" + a.group.elements[g] + "," + a.group.elements[h] +
                                       "," + a.carrier[x] + ")");
  return rep;
}

}  // namespace gpd
