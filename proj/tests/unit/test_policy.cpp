#include "doctest.h"

#include "einz/errors.hpp"
#include "einz/policy.hpp"

using namespace einz;

TEST_CASE("threshold decisions") {
  const ThresholdPolicy p = stand_on(17);
  CHECK(decide(p, 16, 2) == Action::Hit);
  CHECK(decide(p, 17, 2) == Action::Stand);
  CHECK(decide(p, 20, 4) == Action::Stand);
  CHECK(decide(p, 14, 2) == Action::Hit);
  CHECK_THROWS_AS(decide(p, 21, 3), StateError);
  CHECK_THROWS_AS(decide(p, 22, 2), StateError);
  CHECK_THROWS_AS(decide(p, 25, 3), StateError);
}

TEST_CASE("change on 14 is used once by default") {
  const ThresholdPolicy p = stand_on(17, true);
  CHECK(decide(p, 14, 2) == Action::Change14);
  CHECK(decide(p, 14, 3) == Action::Change14);
  CHECK(decide(p, 14, 2, 1) == Action::Hit);
  CHECK(decide(p, 13, 2) == Action::Hit);
  ThresholdPolicy low = stand_on(13, true);
  CHECK(decide(low, 14, 2) == Action::Stand);
}

TEST_CASE("policy literals") {
  CHECK(parse_policy("stand18") == stand_on(18));
  CHECK(parse_policy("stand17+c14") == stand_on(17, true));
  CHECK(to_string(stand_on(18, true)) == "stand18+c14");
  CHECK_THROWS_AS(parse_policy("stand22"), InputError);
  CHECK_THROWS_AS(parse_policy("stand11"), InputError);
  CHECK_THROWS_AS(parse_policy("hit"), InputError);
  CHECK_THROWS_AS((ThresholdPolicy{17, true, -1}.validate()), InputError);
}
