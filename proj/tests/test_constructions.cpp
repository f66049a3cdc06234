#include "doctest.h"
#include "gpd/constructions.hpp"
#include "support/corpus.hpp"

using namespace gpd;

namespace {

GroupAction swap_action() {
  GroupAction a;
  a.group = cyclic_group(2);
  a.carrier = {"a", "b"};
  a.act = {0, 1, 1, 0};
  return a;
}

}  // namespace

TEST_CASE("action groupoid of the swap matches the hand-built tables") {
  auto built = action_groupoid(swap_action());
  auto fixture = fixtures::z2_swap();
  CHECK(*built == *fixture);
}

TEST_CASE("trivial action on one point gives a two-element isotropy group") {
  GroupAction a;
  a.group = cyclic_group(2);
  a.carrier = {"x"};
  a.act = {0, 0};
  auto g = action_groupoid(a);
  CHECK(g->num_objects() == 1);
  CHECK(g->num_arrows() == 2);
  auto orb = orbit_space(*g);
  REQUIRE(orb.classes.size() == 1);
  CHECK(find_group_isomorphism(orb.isotropy[0], cyclic_group(2)));
}

TEST_CASE("regular action gives the pair groupoid shape") {
  GroupAction a;
  a.group = cyclic_group(3);
  a.carrier = a.group.elements;
  a.act = a.group.table;
  auto g = action_groupoid(a);
  CHECK(g->num_objects() == 3);
  CHECK(g->num_arrows() == 9);
  auto orb = orbit_space(*g);
  REQUIRE(orb.classes.size() == 1);
  CHECK(orb.isotropy[0].size() == 1);
}

TEST_CASE("invalid action tables are rejected") {
  auto a = swap_action();
  a.act = {0, 1, 0, 0};
  CHECK_THROWS_AS(action_groupoid(a), gpd::error&);
}

TEST_CASE("two overlapping pieces over three points") {
  SetCover c;
  c.base = {"1", "2", "3"};
  c.pieces = {{0, 1}, {1, 2}};
  auto cech = cech_groupoid(c);
  const auto& g = *cech.groupoid;
  // tagged points 0:1, 0:2, 1:2, 1:3; one fiber of size two
  CHECK(g.num_objects() == 4);
  CHECK(g.num_arrows() == 6);
  auto orb = orbit_space(g);
  CHECK(orb.classes.size() == 3);
  for (const auto& iso : orb.isotropy) CHECK(iso.size() == 1);
  CHECK(cech.proj == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("one-piece cover gives only identity arrows") {
  SetCover c;
  c.base = {"1", "2", "3"};
  c.pieces = {{0, 1, 2}};
  auto cech = cech_groupoid(c);
  CHECK(cech.groupoid->num_objects() == 3);
  CHECK(cech.groupoid->num_arrows() == 3);
  for (int a = 0; a < 3; ++a) CHECK(cech.groupoid->is_unit(a));
}

TEST_CASE("pieces that miss the base are rejected") {
  SetCover c;
  c.base = {"1", "2", "3"};
  c.pieces = {{0, 1}};
  CHECK_THROWS_AS(cech_groupoid(c), gpd::error&);
}

TEST_CASE("pullback along a constant map doubles the two-element group") {
  auto b = fixtures::bz2();
  auto pb = pullback_groupoid(b, {"a", "b"}, {0, 0});
  CHECK(pb.groupoid->num_objects() == 2);
  CHECK(pb.groupoid->num_arrows() == 8);
  CHECK(validate_functor(pb.projection).ok());
  CHECK(is_equivalence(pb.projection).ok());
}

TEST_CASE("pullback along the identity projects isomorphically") {
  auto g = fixtures::z2_swap();
  std::vector<int> all = {0, 1};
  auto pb = pullback_groupoid(g, g->objects, all);
  CHECK(pb.groupoid->num_arrows() == g->num_arrows());
  CHECK(validate_functor(pb.projection).ok());
  auto v = is_equivalence(pb.projection);
  CHECK(v.ok());
  // arrow map is bijective here, so the projection is an isomorphism
  std::vector<bool> hit(g->num_arrows(), false);
  for (int a : pb.projection.arr_map) hit[a] = true;
  for (bool h : hit) CHECK(h);
}

TEST_CASE("pullback along an inclusion matches restriction") {
  auto g = fixtures::disjoint_union(fixtures::bz2(), fixtures::bz2());
  for (std::vector<int> sub : {std::vector<int>{0}, {1}, {0, 1}}) {
    std::vector<std::string> names;
    for (int x : sub) names.push_back(g->objects[x]);
    auto pb = pullback_groupoid(g, names, sub);
    auto re = restrict_groupoid(g, sub);
    const auto& P = *pb.groupoid;
    const auto& R = *re;
    REQUIRE(P.num_objects() == R.num_objects());
    REQUIRE(P.num_arrows() == R.num_arrows());
    // the projection identifies arrows
    for (int a = 0; a < P.num_arrows(); ++a) {
      int orig = pb.projection.arr_map[a];
      auto idx = R.arrow_index(g->arrows[orig]);
      REQUIRE(idx);
      CHECK(R.src[*idx] == P.src[a]);
      CHECK(R.tgt[*idx] == P.tgt[a]);
    }
  }
}

TEST_CASE("restricting the swap groupoid to one object leaves a point") {
  auto g = fixtures::z2_swap();
  auto r = restrict_groupoid(g, {0});
  CHECK(r->num_objects() == 1);
  CHECK(r->num_arrows() == 1);
  CHECK(r->is_unit(0));
}

TEST_CASE("restriction keeps full hom sets between kept objects") {
  auto p3 = fixtures::pair_groupoid(3);
  auto r = restrict_groupoid(p3, {0, 2});
  CHECK(r->num_objects() == 2);
  CHECK(r->num_arrows() == 4);
  CHECK_THROWS_AS(restrict_groupoid(p3, {0, 0}), gpd::error&);
  CHECK_THROWS_AS(restrict_groupoid(p3, {5}), gpd::error&);
}

TEST_CASE("finite groupoids count as proper and etale") {
  for (const auto& g : fixtures::corpus12()) {
    CHECK(is_proper(*g));
    CHECK(is_etale(*g));
  }
}
