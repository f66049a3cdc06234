#include "doctest.h"
#include "gpd/group.hpp"
#include "support/corpus.hpp"

using namespace gpd;

TEST_CASE("cyclic and symmetric groups validate") {
  for (int n = 1; n <= 6; ++n) CHECK(validate_group(cyclic_group(n)).ok());
  CHECK(validate_group(trivial_group()).ok());
  CHECK(validate_group(fixtures::symmetric_group_3()).ok());
  CHECK(validate_group(fixtures::klein_four()).ok());
}

TEST_CASE("validation catches broken tables") {
  auto g = cyclic_group(3);
  g.table[4] = 0;  // g1·g1 is no longer g2
  CHECK_FALSE(validate_group(g).ok());

  auto h = cyclic_group(2);
  h.inverse = {0, 0};
  CHECK_FALSE(validate_group(h).ok());
}

TEST_CASE("element orders") {
  CHECK(element_orders(cyclic_group(4)) == std::vector<int>{1, 4, 2, 4});
  CHECK(element_orders(fixtures::klein_four()) == std::vector<int>{1, 2, 2, 2});
  auto s3 = fixtures::symmetric_group_3();
  auto ord = element_orders(s3);
  int two = 0, three = 0;
  for (int o : ord) {
    if (o == 2) ++two;
    if (o == 3) ++three;
  }
  CHECK(two == 3);
  CHECK(three == 2);
}

TEST_CASE("group isomorphism search") {
  auto iso = find_group_isomorphism(cyclic_group(4), cyclic_group(4));
  REQUIRE(iso);
  // sanity: found map is a homomorphism
  auto c4 = cyclic_group(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK((*iso)[c4.op(a, b)] == c4.op((*iso)[a], (*iso)[b]));

  CHECK_FALSE(find_group_isomorphism(cyclic_group(4), fixtures::klein_four()));
  CHECK_FALSE(find_group_isomorphism(cyclic_group(2), cyclic_group(3)));
  CHECK(find_group_isomorphism(fixtures::symmetric_group_3(), fixtures::symmetric_group_3()));
}

TEST_CASE("group actions validate") {
  GroupAction swap;
  swap.group = cyclic_group(2);
  swap.carrier = {"a", "b"};
  swap.act = {0, 1, 1, 0};
  CHECK(validate_action(swap).ok());

  GroupAction broken = swap;
  broken.act = {0, 1, 0, 0};  // s is not invertible pointwise, compatibility fails
  CHECK_FALSE(validate_action(broken).ok());
}
