#include "gpd/actions.hpp"

namespace gpd {

namespace {

bool shapes_ok(ValidationReport& rep, size_t carrier, size_t anchors, size_t table,
               size_t expect_table, int num_objects, const std::vector<int>& anchor) {
  if (anchors != carrier) {
    rep.add("AnchorShape", "one anchor per carrier point required");
    return false;
  }
  if (table != expect_table) {
    rep.add("TableShape", "action table has the wrong size");
    return false;
  }
  for (int a : anchor)
    if (a < 0 || a >= num_objects) {
      rep.add("RangeError", "anchor out of range");
      return false;
    }
  return true;
}

}  // namespace

ValidationReport validate_right_action(const RightAction& a) {
  ValidationReport rep;
  const FiniteGroupoid& H = *a.groupoid;
  const int np = (int)a.carrier.size(), na = H.num_arrows();
  if (!shapes_ok(rep, a.carrier.size(), a.anchor.size(), a.act.size(), (size_t)np * na,
                 H.num_objects(), a.anchor))
    return rep;
  for (int p = 0; p < np; ++p)
    for (int h = 0; h < na; ++h) {
      int r = a.apply(p, h);
      if (!a.defined(p, h)) {
        if (r != -1) rep.add("DomainViolation", a.carrier[p] + " · " + H.arrows[h] + " should be undefined");
        continue;
      }
      if (r < 0 || r >= np) {
        rep.add("DomainViolation", a.carrier[p] + " · " + H.arrows[h] + " missing");
        continue;
      }
      if (a.anchor[r] != H.src[h])
        rep.add("AnchorViolation", a.carrier[p] + " · " + H.arrows[h]);
    }
  if (!rep.ok()) return rep;
  for (int p = 0; p < np; ++p)
    if (a.apply(p, H.unit[a.anchor[p]]) != p) rep.add("UnitViolation", a.carrier[p]);
  for (int p = 0; p < np; ++p)
    for (int h1 = 0; h1 < na; ++h1) {
      if (!a.defined(p, h1)) continue;
      for (int h2 = 0; h2 < na; ++h2) {
        if (H.src[h1] != H.tgt[h2]) continue;
        if (a.apply(a.apply(p, h1), h2) != a.apply(p, H.compose(h1, h2)))
          rep.add("CompatibilityViolation",
                  a.carrier[p] + " · " + H.arrows[h1] + " · " + H.arrows[h2]);
      }
    }
  return rep;
}

ValidationReport validate_left_action(const LeftAction& a) {
  ValidationReport rep;
  const FiniteGroupoid& G = *a.groupoid;
  const int np = (int)a.carrier.size(), na = G.num_arrows();
  if (!shapes_ok(rep, a.carrier.size(), a.anchor.size(), a.act.size(), (size_t)na * np,
                 G.num_objects(), a.anchor))
    return rep;
  for (int g = 0; g < na; ++g)
    for (int p = 0; p < np; ++p) {
      int r = a.apply(g, p);
      if (!a.defined(g, p)) {
        if (r != -1) rep.add("DomainViolation", G.arrows[g] + " · " + a.carrier[p] + " should be undefined");
        continue;
      }
      if (r < 0 || r >= np) {
        rep.add("DomainViolation", G.arrows[g] + " · " + a.carrier[p] + " missing");
        continue;
      }
      if (a.anchor[r] != G.tgt[g]) rep.add("AnchorViolation", G.arrows[g] + " · " + a.carrier[p]);
    }
  if (!rep.ok()) return rep;
  for (int p = 0; p < np; ++p)
    if (a.apply(G.unit[a.anchor[p]], p) != p) rep.add("UnitViolation", a.carrier[p]);
  for (int g2 = 0; g2 < na; ++g2)
    for (int g1 = 0; g1 < na; ++g1) {
      if (G.src[g2] != G.tgt[g1]) continue;
      for (int p = 0; p < np; ++p) {
        if (!a.defined(g1, p)) continue;
        if (a.apply(g2, a.apply(g1, p)) != a.apply(G.compose(g2, g1), p))
          rep.add("CompatibilityViolation",
                  G.arrows[g2] + " · " + G.arrows[g1] + " · " + a.carrier[p]);
      }
    }
  return rep;
}

PrincipalityReport is_principal(const PrincipalBundle& b) {
  PrincipalityReport rep;
  const FiniteGroupoid& H = *b.action.groupoid;
  const int np = (int)b.action.carrier.size();
  std::vector<bool> hit(b.base.size(), false);
  for (int p : b.proj)
    if (p >= 0 && p < (int)b.base.size()) hit[p] = true;
  for (size_t m = 0; m < b.base.size(); ++m)
    if (!hit[m]) {
      rep.surjective = false;
      rep.missed_base = (int)m;
      break;
    }
  for (int p = 0; p < np && rep.invariant; ++p)
    for (int h = 0; h < H.num_arrows(); ++h) {
      if (!b.action.defined(p, h)) continue;
      if (b.proj[b.action.apply(p, h)] != b.proj[p]) {
        rep.invariant = false;
        rep.drift = {p, h};
        break;
      }
    }
  for (int p = 0; p < np && rep.free; ++p)
    for (int h1 = 0; h1 < H.num_arrows() && rep.free; ++h1) {
      if (!b.action.defined(p, h1)) continue;
      for (int h2 = h1 + 1; h2 < H.num_arrows(); ++h2) {
        if (!b.action.defined(p, h2)) continue;
        if (b.action.apply(p, h1) == b.action.apply(p, h2)) {
          rep.free = false;
          rep.collision = {{p, h1, h2}};
          break;
        }
      }
    }
  for (int p1 = 0; p1 < np && rep.transitive; ++p1)
    for (int p2 = 0; p2 < np; ++p2) {
      if (b.proj[p1] != b.proj[p2]) continue;
      bool found = false;
      for (int h : H.arrows_into(b.action.anchor[p1]))
        if (b.action.apply(p1, h) == p2) {
          found = true;
          break;
        }
      if (!found) {
        rep.transitive = false;
        rep.disconnected = {p1, p2};
        break;
      }
    }
  return rep;
}

int division(const PrincipalBundle& b, int p1, int p2) {
  require(b.proj[p1] == b.proj[p2], errc::different_fibers,
          b.action.carrier[p1] + " and " + b.action.carrier[p2] + " sit over different base points");
  const FiniteGroupoid& H = *b.action.groupoid;
  for (int h : H.arrows_into(b.action.anchor[p1]))
    if (b.action.apply(p1, h) == p2) return h;
  fail(errc::not_principal, "no arrow carries " + b.action.carrier[p1] + " to " +
                                b.action.carrier[p2] + " inside their fiber");
}

PrincipalBundle unit_bundle(GroupoidRef h) {
  PrincipalBundle b;
  const FiniteGroupoid& H = *h;
  b.action.groupoid = h;
  b.action.carrier = H.arrows;
  b.action.anchor = H.src;
  b.base = H.objects;
  b.proj = H.tgt;
  b.action.act.assign((size_t)H.num_arrows() * H.num_arrows(), -1);
  for (int p = 0; p < H.num_arrows(); ++p)
    for (int k = 0; k < H.num_arrows(); ++k)
      if (H.src[p] == H.tgt[k])
        b.action.act[(size_t)p * H.num_arrows() + k] = H.compose(p, k);
  return b;
}

}  // namespace gpd
