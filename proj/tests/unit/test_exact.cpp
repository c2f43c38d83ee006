#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "einz/errors.hpp"
#include "einz/exact.hpp"

using namespace einz;

namespace {

Shoe shoe_of(const std::vector<int>& cards) {
  Shoe::Counts c{};
  for (int v : cards) c[PointValue(v).index()] += 1;
  return Shoe(1, c);
}

// n cards of one deck, without replacement.
std::vector<int> random_cards(std::mt19937_64& gen, int n) {
  std::vector<int> deck;
  for (int v = 2; v <= 11; ++v) {
    for (int i = 0; i < (v <= 4 ? 8 : 4); ++i) deck.push_back(v);
  }
  std::shuffle(deck.begin(), deck.end(), gen);
  deck.resize(static_cast<std::size_t>(n));
  return deck;
}

}  // namespace

TEST_CASE("engine equals brute-force sequence enumeration on small shoes") {
  std::mt19937_64 gen(20240611);
  int cases = 0;
  for (; cases < 240; ++cases) {
    const int n = 2 + static_cast<int>(gen() % 7);
    std::vector<int> cards = random_cards(gen, n);
    // every third case gets a 10 and a 4 so 14s come up
    if (cases % 3 == 0 && n >= 3) {
      cards[0] = 10;
      cards[1] = 4;
    }
    oracle::Rules r;
    r.stand_on = 12 + static_cast<int>(gen() % 10);
    r.change_on_14 = gen() % 2 == 0;
    r.max_changes = static_cast<int>(gen() % 3);
    const ThresholdPolicy p{r.stand_on, r.change_on_14, r.max_changes};

    const auto expected = oracle::enumerate(cards, r);
    const auto got = outcome_distribution(shoe_of(cards), p);
    INFO("case " << cases << " stand_on " << r.stand_on);
    REQUIRE(got.masses() == expected);
  }
  CHECK(cases >= 200);
}

TEST_CASE("every distribution sums to one") {
  for (int t = 12; t <= 21; ++t) {
    CHECK(outcome_distribution(fresh_shoe(1), stand_on(t)).total() == 1);
    CHECK(outcome_distribution(fresh_shoe(1), stand_on(t, true)).total() == 1);
  }
  CHECK(outcome_distribution(fresh_shoe(8), stand_on(17)).total() == 1);
  CHECK(outcome_distribution(fresh_shoe(1), stand_on(17),
                             {Arithmetic::WithReplacement, CardCount::CurrentHand})
            .total() == 1);
}

TEST_CASE("one-deck values frozen from an independent recursive enumeration") {
  const auto d17 = outcome_distribution(fresh_shoe(1), stand_on(17));
  CHECK(d17.bust() == Rational("2664503992/9657572925"));
  CHECK(d17.stood(17) == Rational("460103543/2633883525"));
  CHECK(d17.stood(18) == Rational("458285929/2633883525"));
  CHECK(d17.stood(19) == Rational("290344592/1931514585"));
  CHECK(d17.stood(20) == Rational("790908749/6438381950"));
  CHECK(d17.einz() == Rational("658369857/6438381950"));
  CHECK(d17.mass(Outcome::stood(17, 3)) == make_rational(432, 5525));

  const auto d18 = outcome_distribution(fresh_shoe(1), stand_on(18));
  CHECK(d18.bust() == Rational("10739958322/28972718775"));
  CHECK(d18.stood(19) == Rational("204973438/1158908751"));
  CHECK(d18.stood(20) == Rational("38503475/257535278"));
  CHECK(d18.einz() == Rational("7471276693/57945437550"));
  CHECK(d18.mass(Outcome::stood(18, 3)) == make_rational(79, 1105));
}

TEST_CASE("two-card outcomes match direct pair counting") {
  const auto d = outcome_distribution(fresh_shoe(1), stand_on(17));
  // ace with a ten (32 ordered pairs) or two aces (12)
  CHECK(d.einz_with(2) == make_rational(44, 2652));
  // 7+11, 8+10, 9+9
  CHECK(d.mass(Outcome::stood(18, 2)) == make_rational(76, 2652));
}

TEST_CASE("standing later never busts less") {
  Rational prev = outcome_distribution(fresh_shoe(1), stand_on(12)).bust();
  for (int t = 13; t <= 21; ++t) {
    const Rational b = outcome_distribution(fresh_shoe(1), stand_on(t)).bust();
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("infinite-deck continuation from 14 matches the closed form") {
  Shoe s = fresh_shoe(1);
  s.remove(PointValue(10));
  s.remove(PointValue(4));
  const auto q = [&](int v) { return make_rational(s.count(PointValue(v)), s.total()); };
  const auto d = continue_hand(s, Hand::of({10, 4}), stand_on(17),
                               {Arithmetic::WithReplacement, CardCount::CurrentHand});
  // one card 3..7 lands on 17..21; a 2 makes 16 and then 2..5 lands on 18..21
  const Rational closed = q(3) + q(4) + q(5) + q(6) + q(7) + q(2) * (q(2) + q(3) + q(4) + q(5));
  CHECK(d.stood() + d.einz() == closed);
}

TEST_CASE("fixed denominators book the missing mass as bust") {
  Shoe s = fresh_shoe(1);
  s.remove(PointValue(10));
  s.remove(PointValue(4));
  const auto d = continue_hand(s, Hand::of({10, 4}), stand_on(17),
                               {Arithmetic::FixedDenominator, CardCount::CurrentHand});
  CHECK(d.total() == 1);
  CHECK(d.stood() + d.einz() == make_rational(1558, 2500));
}

TEST_CASE("an exhausted shoe ends the hand standing") {
  const auto d = outcome_distribution(shoe_of({5, 6}), stand_on(17));
  CHECK(d.mass(Outcome::stood(11, 2)) == 1);
  CHECK_THROWS_AS(outcome_distribution(shoe_of({5}), stand_on(17)), StateError);
}

TEST_CASE("card count after a change") {
  const std::vector<int> cards{10, 4, 9, 8};
  const ThresholdPolicy p = stand_on(17, true);
  const auto current = outcome_distribution(shoe_of(cards), p);
  const auto all = outcome_distribution(shoe_of(cards), p, {Arithmetic::Exact, CardCount::AllDrawn});
  CHECK(current.total() == 1);
  CHECK(all.total() == 1);
  CHECK(current.stood_scores() == all.stood_scores());
  CHECK(all.max_cards() >= current.max_cards());
  CHECK(current.stood(17) == all.stood(17));
}

TEST_CASE("conditioning on a card count") {
  const auto d = outcome_distribution(fresh_shoe(1), stand_on(17));
  for (int k = 2; k <= 5; ++k) {
    Rational sum = 0;
    for (const auto& [score, m] : conditional_score_given_stand(d, k)) sum += m;
    CHECK(sum == 1);
  }
  CHECK_THROWS_AS(conditional_score_given_stand(d, 15), StateError);

  // two-card stood hands counted pair by pair
  const Shoe s = fresh_shoe(1);
  Rational weighted = 0;
  Rational mass = 0;
  for (int a = 2; a <= 11; ++a) {
    for (int b = 2; b <= 11; ++b) {
      const int t = a + b;
      if (t < 17 || t > 20) continue;
      const int na = s.count(PointValue(a));
      const int nb = s.count(PointValue(b)) - (a == b ? 1 : 0);
      weighted += Rational(na * nb * t);
      mass += Rational(na * nb);
    }
  }
  CHECK(expected_score(d, 2, false) == weighted / mass);
  CHECK_THROWS_AS(expected_score(d, 15, false), StateError);
}
