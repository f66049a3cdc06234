#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gpd/bibundle.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace gpd;

namespace {

// Relabels and permutes the carrier: point i of the result is point perm[i]
// of the input, with a fresh name.
Bibundle shuffled(const Bibundle& b, const std::vector<int>& perm) {
  const int n = b.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  Bibundle out;
  out.left = b.left;
  out.right = b.right;
  out.left_act.assign(b.left_act.size(), -1);
  out.right_act.assign(b.right_act.size(), -1);
  for (int i = 0; i < n; ++i) {
    out.carrier.push_back("pt" + std::to_string(i));
    out.anchor_left.push_back(b.anchor_left[perm[i]]);
    out.anchor_right.push_back(b.anchor_right[perm[i]]);
  }
  for (int g = 0; g < b.left->num_arrows(); ++g)
    for (int i = 0; i < n; ++i)
      if (out.ldefined(g, i)) out.left_act[(size_t)g * n + i] = inv[b.lapply(g, perm[i])];
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < b.right->num_arrows(); ++h)
      if (out.rdefined(i, h))
        out.right_act[(size_t)i * b.right->num_arrows() + h] = inv[b.rapply(perm[i], h)];
  return out;
}

using oracles::is_equivariant_bijection;

GroupoidFunctor point_into_bz2() {
  return fixtures::include_object(fixtures::pt(), fixtures::bz2(), 0);
}

}  // namespace

TEST_CASE("bundle of the identity functor is the groupoid acting on itself") {
  for (auto& g : {fixtures::bz2(), fixtures::z2_swap(), fixtures::pair_groupoid(3)}) {
    auto b = from_functor(identity_functor(g));
    CHECK(validate_bibundle(b).ok());
    REQUIRE(b.size() == g->num_arrows());
    // arrows sit in the carrier as (t(h), h); both actions are composition
    std::vector<int> at(g->num_arrows(), -1);
    for (int h = 0; h < g->num_arrows(); ++h) {
      std::string name = "(" + g->objects[g->tgt[h]] + "|" + g->arrows[h] + ")";
      auto it = std::find(b.carrier.begin(), b.carrier.end(), name);
      REQUIRE(it != b.carrier.end());
      at[h] = (int)(it - b.carrier.begin());
      CHECK(b.anchor_left[at[h]] == g->tgt[h]);
      CHECK(b.anchor_right[at[h]] == g->src[h]);
    }
    for (int k = 0; k < g->num_arrows(); ++k)
      for (int h = 0; h < g->num_arrows(); ++h) {
        if (g->composable(k, h)) CHECK(b.lapply(k, at[h]) == at[g->compose(k, h)]);
        if (g->composable(h, k)) CHECK(b.rapply(at[h], k) == at[g->compose(h, k)]);
      }
  }
}

TEST_CASE("bundle of the point inclusion into BZ2 is the two point torsor") {
  auto b = from_functor(point_into_bz2());
  CHECK(validate_bibundle(b).ok());
  CHECK(b.size() == 2);
  CHECK(b.anchor_left == std::vector<int>{0, 0});
  CHECK(b.anchor_right == std::vector<int>{0, 0});
  // the nonidentity arrow swaps the two points
  CHECK(b.rapply(0, 1) == 1);
  CHECK(b.rapply(1, 1) == 0);
}

TEST_CASE("bundles between identity groupoids are graphs of functions") {
  auto m3 = fixtures::disc(3), n2 = fixtures::disc(2);
  GroupoidFunctor f{m3, n2, {1, 0, 1}, {1, 0, 1}};
  REQUIRE(validate_functor(f).ok());
  auto b = from_functor(f);
  CHECK(b.size() == 3);
  std::vector<int> graph(3, -1);
  for (int i = 0; i < b.size(); ++i) {
    CHECK(graph[b.anchor_left[i]] == -1);  // left anchor is a bijection
    graph[b.anchor_left[i]] = b.anchor_right[i];
  }
  CHECK(graph == f.obj_map);

  // maps between two graphs exist exactly when the functions agree
  GroupoidFunctor g{m3, n2, {1, 1, 1}, {1, 1, 1}};
  REQUIRE(validate_functor(g).ok());
  CHECK(find_isomorphism(b, from_functor(f)).has_value());
  CHECK_FALSE(find_isomorphism(b, from_functor(g)).has_value());
}

TEST_CASE("composition with identity bundles is the identity up to isomorphism") {
  auto torsor = from_functor(point_into_bz2());
  auto idp = from_functor(identity_functor(fixtures::pt()));
  auto idh = from_functor(identity_functor(torsor.right));
  auto left_unit = compose(idp, torsor);
  auto right_unit = compose(torsor, idh);
  CHECK(find_isomorphism(left_unit, torsor).has_value());
  CHECK(find_isomorphism(right_unit, torsor).has_value());
}

TEST_CASE("torsor composed with the collapse has a single point") {
  auto torsor = from_functor(point_into_bz2());
  auto collapse = from_functor(fixtures::collapse_to_pt(torsor.right, fixtures::pt()));
  auto qp = compose(torsor, collapse);
  CHECK(qp.size() == 1);
  CHECK(validate_bibundle(qp).ok());
}

TEST_CASE("composition refuses mismatched middle groupoids") {
  auto torsor = from_functor(point_into_bz2());
  CHECK_THROWS_AS(compose(torsor, torsor), gpd::error&);
  try {
    compose(torsor, torsor);
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::middle_mismatch);
  }
}

TEST_CASE("bundle of a composite is the composite of the bundles") {
  auto z2s = fixtures::z2_swap();
  auto b2 = fixtures::bz2();
  auto pt = fixtures::pt();
  auto f = fixtures::collapse_to_pt(z2s, pt);
  auto g = fixtures::include_object(pt, b2, 0);
  auto lhs = from_functor(compose_functors(g, f));
  auto rhs = compose(from_functor(f), from_functor(g));
  CHECK(find_isomorphism(lhs, rhs).has_value());
}

TEST_CASE("self isomorphism search returns the identity") {
  auto b = from_functor(identity_functor(fixtures::z2_swap()));
  auto m = find_isomorphism(b, b);
  REQUIRE(m.has_value());
  std::vector<int> id(b.size());
  std::iota(id.begin(), id.end(), 0);
  CHECK(*m == id);
}

TEST_CASE("identity and collapse endomorphism bundles of BZ2 are distinct") {
  auto b2 = fixtures::bz2();
  auto id = from_functor(identity_functor(b2));
  GroupoidFunctor trivial{b2, b2, {0}, {0, 0}};
  REQUIRE(validate_functor(trivial).ok());
  CHECK_FALSE(find_isomorphism(id, from_functor(trivial)).has_value());
}

TEST_CASE("relabeled copies are found isomorphic") {
  auto b = from_functor(fixtures::include_object(fixtures::pt(), fixtures::bz4(), 0));
  std::vector<int> perm = {2, 0, 3, 1};
  auto q = shuffled(b, perm);
  REQUIRE(validate_bibundle(q).ok());
  auto m = find_isomorphism(b, q);
  REQUIRE(m.has_value());
  CHECK(is_equivariant_bijection(b, q, *m));
}

TEST_CASE("isomorphism search guards its inputs") {
  auto b = from_functor(point_into_bz2());
  auto other = from_functor(identity_functor(fixtures::bz2()));
  CHECK_THROWS_AS((void)find_isomorphism(b, other), gpd::error&);
  try {
    (void)find_isomorphism(b, other);
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::endpoint_mismatch);
  }
  CHECK_THROWS_AS((void)find_isomorphism(b, b, 1), gpd::error&);
  try {
    (void)find_isomorphism(b, b, 1);
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::bound_exceeded);
  }
}

TEST_CASE("composition is associative up to isomorphism") {
  auto z2s = fixtures::z2_swap();
  auto pt = fixtures::pt();
  auto b2 = fixtures::bz2();
  auto p = from_functor(fixtures::collapse_to_pt(z2s, pt));
  auto q = from_functor(fixtures::include_object(pt, b2, 0));
  auto r = from_functor(fixtures::collapse_to_pt(b2, pt));
  auto lhs = compose(compose(p, q), r);
  auto rhs = compose(p, compose(q, r));
  CHECK(find_isomorphism(lhs, rhs).has_value());
}

TEST_CASE("left principality matches functor equivalence") {
  auto pair2 = fixtures::pair_groupoid(2);
  auto pt = fixtures::pt();

  auto collapse = equivalence_iff_principal(fixtures::collapse_to_pt(pair2, pt));
  CHECK(collapse.equivalence.ok());
  CHECK(collapse.principality.ok());
  CHECK(collapse.agree);

  auto include = equivalence_iff_principal(fixtures::include_object(pt, fixtures::disc(2), 0));
  CHECK_FALSE(include.equivalence.ok());
  CHECK_FALSE(include.principality.ok());
  CHECK(include.principality.missed_base == 1);
  CHECK(include.agree);

  auto ident = equivalence_iff_principal(identity_functor(fixtures::bs3()));
  CHECK(ident.equivalence.ok());
  CHECK(ident.principality.ok());
  CHECK(ident.agree);
}

TEST_CASE("inverting the identity bundle gives the identity bundle") {
  auto g = fixtures::z2_swap();
  auto id = from_functor(identity_functor(g));
  auto inv = invert(id);
  CHECK(find_isomorphism(inv.inverse, id).has_value());
  CHECK(is_equivariant_bijection(compose(id, inv.inverse), from_functor(identity_functor(g)),
                        inv.unit_left));
  CHECK(is_equivariant_bijection(compose(inv.inverse, id), from_functor(identity_functor(g)),
                        inv.unit_right));
}

TEST_CASE("the point torsor into BZ2 has no inverse") {
  auto torsor = from_functor(point_into_bz2());
  CHECK_THROWS_AS(invert(torsor), gpd::error&);
  try {
    invert(torsor);
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::not_left_principal);
  }
}

TEST_CASE("equivalence functors give invertible bundles") {
  // cover of a three point set by two overlapping pieces
  SetCover c{{"m0", "m1", "m2"}, {{0, 1}, {1, 2}}};
  auto cech = cech_groupoid(c);
  auto d3 = fixtures::disc(3);
  GroupoidFunctor down{cech.groupoid, d3, {}, {}};
  down.obj_map = cech.proj;
  for (int a = 0; a < cech.groupoid->num_arrows(); ++a)
    down.arr_map.push_back(d3->unit[cech.proj[cech.groupoid->src[a]]]);
  REQUIRE(validate_functor(down).ok());
  REQUIRE(is_equivalence(down).ok());

  auto b = from_functor(down);
  auto inv = invert(b);
  CHECK(validate_bibundle(inv.inverse).ok());
  CHECK(find_isomorphism(compose(b, inv.inverse),
                         from_functor(identity_functor(cech.groupoid)))
            .has_value());
}

TEST_CASE("sections rebuild functors") {
  auto z2s = fixtures::z2_swap();
  auto b2 = fixtures::bz2();
  auto f = fixtures::collapse_to_pt(z2s, fixtures::pt());
  auto fq = fixtures::include_object(fixtures::pt(), b2, 0);
  auto comp = compose_functors(fq, f);
  auto p = from_functor(comp);

  SUBCASE("lexicographic section recovers the functor up to natural isomorphism") {
    std::vector<int> section(z2s->num_objects(), -1);
    for (int x = 0; x < z2s->num_objects(); ++x)
      for (int i = 0; i < p.size(); ++i)
        if (p.anchor_left[i] == x) {
          section[x] = i;
          break;
        }
    auto g = section_to_functor(p, section);
    CHECK(find_natural_isomorphism(comp, g).has_value());
    CHECK(find_isomorphism(from_functor(g), p).has_value());
  }
  SUBCASE("unit section of an identity bundle returns the identity") {
    auto id = from_functor(identity_functor(b2));
    std::vector<int> section(b2->num_objects());
    for (int x = 0; x < b2->num_objects(); ++x)
      for (int i = 0; i < id.size(); ++i)
        if (id.anchor_left[i] == x && b2->is_unit(i)) section[x] = i;
    auto g = section_to_functor(id, section);
    CHECK(g.obj_map == identity_functor(b2).obj_map);
    CHECK(g.arr_map == identity_functor(b2).arr_map);
  }
  SUBCASE("a non section is rejected") {
    std::vector<int> bad(z2s->num_objects(), 0);
    bad[1] = 0;  // both entries point into the fiber over object 0
    CHECK_THROWS_AS(section_to_functor(p, bad), gpd::error&);
  }
}

TEST_CASE("every bundle factors through a cover") {
  auto z2s = fixtures::z2_swap();
  auto b2 = fixtures::bz2();
  auto p = from_functor(compose_functors(
      fixtures::include_object(fixtures::pt(), b2, 0),
      fixtures::collapse_to_pt(z2s, fixtures::pt())));

  SUBCASE("default run uses the one piece cover") {
    auto fact = factor_through_cover(p);
    CHECK(fact.cover.pieces.size() == 1);
    CHECK(fact.projection.source == fact.refinement);
    CHECK(is_equivalence(fact.projection).ok());
    CHECK(validate_functor(fact.functor).ok());
    CHECK(is_equivariant_bijection(from_functor(fact.functor), fact.pulled_back, fact.witness));
  }
  SUBCASE("an explicit cover with overlap works too") {
    SetCover c{z2s->objects, {{0, 1}, {1}}};
    auto fact = factor_through_cover(p, &c);
    CHECK(fact.refinement->num_objects() == 3);
    CHECK(is_equivalence(fact.projection).ok());
    CHECK(is_equivariant_bijection(from_functor(fact.functor), fact.pulled_back, fact.witness));
    // both routes factor the same bundle
    auto plain = factor_through_cover(p);
    CHECK(find_isomorphism(compose(from_functor(fact.projection), p), fact.pulled_back)
              .has_value());
    (void)plain;
  }
  SUBCASE("covers that miss an object are rejected") {
    SetCover c{z2s->objects, {{0}}};
    CHECK_THROWS_AS(factor_through_cover(p, &c), gpd::error&);
  }
}

TEST_CASE("principal bundles with sections pull back the unit bundle") {
  // a BZ2 bundle over two base points, seen as a bundle from disc(2)
  auto d2 = fixtures::disc(2);
  auto b2 = fixtures::bz2();
  Bibundle p;
  p.left = d2;
  p.right = b2;
  p.carrier = {"u0", "u1", "v0", "v1"};
  p.anchor_left = {0, 0, 1, 1};
  p.anchor_right = {0, 0, 0, 0};
  p.left_act.assign((size_t)d2->num_arrows() * 4, -1);
  for (int i = 0; i < 4; ++i) p.left_act[(size_t)(p.anchor_left[i]) * 4 + i] = i;
  p.right_act.assign(4 * 2, -1);
  int swap[4] = {1, 0, 3, 2};
  for (int i = 0; i < 4; ++i) {
    p.right_act[(size_t)i * 2 + 0] = i;
    p.right_act[(size_t)i * 2 + 1] = swap[i];
  }
  REQUIRE(validate_bibundle(p).ok());

  // section: least point of each fiber; its anchors define a functor whose
  // bundle is the pullback of the unit bundle
  auto f = section_to_functor(p, {0, 2});
  auto pulled = from_functor(f);
  auto m = find_isomorphism(p, pulled);
  REQUIRE(m.has_value());
  CHECK(is_equivariant_bijection(p, pulled, *m));

  // equivariant fiber preserving maps between such bundles are bijections
  int count = 0;
  for (int i0 = 0; i0 < 4; ++i0)
    for (int i1 = 0; i1 < 4; ++i1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int i3 = 0; i3 < 4; ++i3) {
          std::vector<int> m2 = {i0, i1, i2, i3};
          bool hom = true;
          for (int a = 0; a < 4 && hom; ++a) {
            if (p.anchor_left[m2[a]] != p.anchor_left[a] ||
                p.anchor_right[m2[a]] != p.anchor_right[a])
              hom = false;
            for (int h = 0; h < 2 && hom; ++h)
              if (p.rdefined(a, h) && m2[p.rapply(a, h)] != p.rapply(m2[a], h)) hom = false;
          }
          if (!hom) continue;
          ++count;
          std::vector<int> seen;
          seen = m2;
          std::sort(seen.begin(), seen.end());
          CHECK(seen == std::vector<int>{0, 1, 2, 3});
        }
  CHECK(count == 4);  // one choice per fiber, each forced equivariantly
}

TEST_CASE("natural transformations induce bundle isomorphisms") {
  auto pair2 = fixtures::pair_groupoid(2);
  auto b2 = fixtures::bz2();
  bool truncated = false;
  auto fs = enumerate_functors(pair2, b2, 64, &truncated);
  REQUIRE_FALSE(truncated);
  REQUIRE(fs.size() >= 2);
  // carrier points of a functor bundle are named "(object|arrow)"
  auto locate = [&](const Bibundle& b, int x, int h) {
    std::string name = "(" + pair2->objects[x] + "|" + b2->arrows[h] + ")";
    auto it = std::find(b.carrier.begin(), b.carrier.end(), name);
    REQUIRE(it != b.carrier.end());
    return (int)(it - b.carrier.begin());
  };
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < fs.size(); ++j) {
      auto alpha = find_natural_isomorphism(fs[i], fs[j]);
      REQUIRE(alpha.has_value());
      auto bi = from_functor(fs[i]);
      auto bj = from_functor(fs[j]);
      // (x, h) goes to (x, alpha_x h)
      std::vector<int> m(bi.size(), -1);
      for (int x = 0; x < pair2->num_objects(); ++x)
        for (int h = 0; h < b2->num_arrows(); ++h) {
          if (b2->tgt[h] != fs[i].obj_map[x]) continue;
          m[locate(bi, x, h)] = locate(bj, x, b2->compose(alpha->component[x], h));
        }
      CHECK(is_equivariant_bijection(bi, bj, m));
    }
}
