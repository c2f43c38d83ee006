#include "doctest.h"

#include "einz/cards.hpp"
#include "einz/errors.hpp"

using namespace einz;

TEST_CASE("fresh shoe holds 52 cards per deck with the value-class multiplicities") {
  const Shoe one = fresh_shoe(1);
  CHECK(one.total() == 52);
  for (int v = 2; v <= 11; ++v) CHECK(one.count(PointValue(v)) == (v <= 4 ? 8 : 4));
  const Shoe eight = fresh_shoe(8);
  CHECK(eight.total() == 416);
  CHECK(eight.count(PointValue(11)) == 32);
  CHECK_THROWS_AS(fresh_shoe(0), InputError);
}

TEST_CASE("draw probability follows the remaining counts") {
  Shoe s = fresh_shoe(1);
  CHECK(s.draw_probability(PointValue(2)) == make_rational(2, 13));
  s.remove(PointValue(2));
  CHECK(s.draw_probability(PointValue(2)) == make_rational(7, 51));
  s.restore(PointValue(2));
  CHECK(s == fresh_shoe(1));
}

TEST_CASE("a fifth ace cannot come out of one deck") {
  Shoe s = fresh_shoe(1);
  for (int i = 0; i < 4; ++i) s.remove(PointValue(11));
  CHECK(s.count(PointValue(11)) == 0);
  CHECK_THROWS_AS(s.remove(PointValue(11)), StateError);
  CHECK_THROWS_AS(fresh_shoe(1).restore(PointValue(5)), StateError);
  CHECK_THROWS_AS(Shoe(1, Shoe::Counts{9, 0, 0, 0, 0, 0, 0, 0, 0, 0}), StateError);
}

TEST_CASE("point values outside 2..11 are rejected") {
  CHECK_THROWS_AS(PointValue(1), InputError);
  CHECK_THROWS_AS(PointValue(12), InputError);
  CHECK(PointValue(7).index() == 5);
  CHECK(PointValue::from_index(9).points() == 11);
}

TEST_CASE("classify") {
  CHECK(classify(21, 3) == HandClass::Einz);
  CHECK(classify(21, 2) == HandClass::Einz);
  CHECK(classify(22, 2) == HandClass::Einz);
  CHECK(classify(22, 3) == HandClass::Bust);
  CHECK(classify(20, 5) == HandClass::Live);
  CHECK(classify(Hand::of({11, 11})) == HandClass::Einz);
  CHECK(classify(Hand::of({10, 6, 9})) == HandClass::Bust);
  CHECK_THROWS_AS(classify(Hand{}), InputError);
}

TEST_CASE("remove_all takes cards out in order") {
  const std::vector<PointValue> cards{PointValue(10), PointValue(4), PointValue(4)};
  const Shoe s = remove_all(fresh_shoe(1), cards);
  CHECK(s.total() == 49);
  CHECK(s.count(PointValue(4)) == 6);
  CHECK(s.count(PointValue(10)) == 3);
}
