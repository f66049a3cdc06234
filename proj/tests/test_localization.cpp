#include <algorithm>
#include <set>

#include "doctest.h"
#include "gpd/localization.hpp"
#include "support/corpus.hpp"

using namespace gpd;

namespace {

// Two objects, one non-unit arrow w: x -> y.
CategoryRef walking_arrow() {
  CategoryData d;
  d.objects = {"x", "y"};
  d.arrows = {"1x", "1y", "w"};
  d.src = {0, 1, 0};
  d.tgt = {0, 1, 1};
  d.unit = {0, 1};
  d.comp = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  return make_category(d);
}

}  // namespace

TEST_CASE("inverting only identities leaves the hom sets alone") {
  auto c = category_of(*fixtures::bz3());
  auto loc = localize_symbolic(c, {c->unit[0]});

  auto classes = loc.hom_class_words(0, 0, 4);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == loc.identity_word(0));
  CHECK(classes[1].steps.size() == 1);
  CHECK(classes[2].steps.size() == 1);

  // the normal forms name genuinely distinct arrows: the identity functor
  // inverts every identity, and its induced functor separates them
  auto check = check_universal_property(loc, identity_category_functor(c));
  CHECK(check.factors);
  CHECK(check.well_defined);
  std::set<int> images;
  for (const auto& w : classes) images.insert(check.induced.apply(w));
  CHECK(images.size() == 3);
}

TEST_CASE("words compose, drop units, and cancel formal inverses") {
  auto c = walking_arrow();
  auto loc = localize_symbolic(c, {2});

  Word wi = loc.concat(loc.arrow_word(2), loc.inverse_word(2));
  CHECK(loc.normalize(wi) == loc.identity_word(0));
  Word iw = loc.concat(loc.inverse_word(2), loc.arrow_word(2));
  CHECK(loc.normalize(iw) == loc.identity_word(1));
  CHECK(loc.equal(wi, loc.identity_word(0)));

  Word padded = loc.concat(loc.arrow_word(0), loc.concat(wi, loc.arrow_word(0)));
  CHECK(loc.normalize(padded) == loc.identity_word(0));

  Word www{0, 1, {{2, false}, {2, true}, {2, false}}};
  CHECK(loc.normalize(www) == loc.arrow_word(2));

  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (const auto& w : loc.hom_class_words(x, y, 4)) CHECK(loc.normalize(w) == w);
}

TEST_CASE("inverting the walking arrow gives the pair groupoid") {
  auto c = walking_arrow();
  auto loc = localize_symbolic(c, {2});

  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      auto classes = loc.hom_class_words(x, y, 5);
      REQUIRE(classes.size() == 1);
      CHECK(classes[0].src == x);
      CHECK(classes[0].tgt == y);
    }
  CHECK(loc.hom_class_words(1, 0, 5)[0] == loc.inverse_word(2));
}

TEST_CASE("composing adjacent originals uses the category's table") {
  auto c = category_of(*fixtures::bz3());
  auto loc = localize_symbolic(c, {});
  int r = 1;  // a generator; bz3 arrows are unit, r, r2
  Word rr = loc.concat(loc.arrow_word(r), loc.arrow_word(r));
  Word n = loc.normalize(rr);
  REQUIRE(n.steps.size() == 1);
  CHECK(n.steps[0].arrow == c->compose(r, r));
  Word rrr = loc.concat(rr, loc.arrow_word(r));
  CHECK(loc.normalize(rrr) == loc.identity_word(0));
}

TEST_CASE("malformed words are rejected") {
  auto c = walking_arrow();
  auto loc = localize_symbolic(c, {2});

  CHECK_THROWS_AS(loc.check(Word{0, 1, {{7, false}}}), gpd::error&);
  try {
    loc.check(Word{0, 1, {{7, false}}});
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::unknown_arrow);
  }

  try {
    loc.check(Word{0, 0, {{0, true}}});  // 1x is not in the inverted class
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::unknown_arrow);
  }
  CHECK_THROWS_AS((void)loc.inverse_word(0), gpd::error&);

  try {
    loc.check(Word{0, 1, {{2, false}, {2, false}}});  // y -/-> x
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
  try {
    loc.check(Word{0, 0, {{2, false}}});  // ends at y, claims x
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
  try {
    (void)loc.concat(loc.arrow_word(2), loc.arrow_word(2));
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }

  CHECK_THROWS_AS(localize_symbolic(c, {9}), gpd::error&);
}

TEST_CASE("localizing at every arrow of a groupoid changes nothing") {
  auto g = fixtures::z2_swap();
  auto c = category_of(*g);
  std::vector<int> all(c->num_arrows());
  for (int a = 0; a < c->num_arrows(); ++a) all[a] = a;
  auto loc = localize_symbolic(c, all);

  auto check = check_universal_property(loc, identity_category_functor(c));
  CHECK(check.factors);
  CHECK(check.well_defined);
  CHECK(check.sampled_pairs > 0);
  CHECK(!check.violation.has_value());

  // a formal inverse lands on the actual inverse
  for (int a = 0; a < c->num_arrows(); ++a)
    CHECK(check.induced.apply(loc.inverse_word(a)) == g->inv[a]);

  // one class per hom set, and the induced images are exactly the arrows
  std::set<int> images;
  int total = 0;
  for (int x = 0; x < c->num_objects(); ++x)
    for (int y = 0; y < c->num_objects(); ++y) {
      auto classes = loc.hom_class_words(x, y, 4);
      CHECK((int)classes.size() == [&] {
        int n = 0;
        for (int a = 0; a < c->num_arrows(); ++a)
          if (c->src[a] == x && c->tgt[a] == y) ++n;
        return n;
      }());
      for (const auto& w : classes) images.insert(check.induced.apply(w));
      total += (int)classes.size();
    }
  CHECK(total == c->num_arrows());
  CHECK((int)images.size() == c->num_arrows());
}

TEST_CASE("collapsing the walking arrow onto the pair groupoid") {
  auto c = walking_arrow();
  auto loc = localize_symbolic(c, {2});
  auto e = category_of(*fixtures::pair_groupoid(2));

  int across = -1;
  for (int a = 0; a < e->num_arrows(); ++a)
    if (e->src[a] == 0 && e->tgt[a] == 1) across = a;
  REQUIRE(across >= 0);

  CategoryFunctor phi{c, e, {0, 1}, {e->unit[0], e->unit[1], across}};
  REQUIRE(validate_category_functor(phi).ok());

  auto check = check_universal_property(loc, phi, 6);
  CHECK(check.factors);
  CHECK(check.well_defined);
  CHECK(check.sampled_pairs > 0);

  // the induced functor hits each arrow of the pair groupoid exactly once
  // across the four singleton hom classes, so the rewriting found them all
  std::set<int> images;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      auto classes = loc.hom_class_words(x, y, 5);
      REQUIRE(classes.size() == 1);
      images.insert(check.induced.apply(classes[0]));
    }
  CHECK(images.size() == 4);
}

TEST_CASE("a functor that fails to invert the class is refused") {
  auto c = walking_arrow();
  auto loc = localize_symbolic(c, {2});

  CHECK_THROWS_AS(check_universal_property(loc, identity_category_functor(c)), gpd::error&);
  try {
    (void)check_universal_property(loc, identity_category_functor(c));
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::not_inverted);
  }

  auto other = category_of(*fixtures::pt());
  try {
    (void)check_universal_property(loc, identity_category_functor(other));
  } catch (const gpd::error& e) {
    CHECK(e.code() == errc::mismatch);
  }
}
