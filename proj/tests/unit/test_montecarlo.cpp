#include <cmath>

#include "doctest.h"

#include "einz/errors.hpp"
#include "einz/exact.hpp"
#include "einz/montecarlo.hpp"

using namespace einz;

namespace {

SimConfig pair_config(std::uint64_t rounds, std::uint64_t seed) {
  SimConfig c;
  c.rounds = rounds;
  c.seed = seed;
  c.policies = {stand_on(17), stand_on(17)};
  return c;
}

}  // namespace

TEST_CASE("splitmix64 reference output") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("uniform_below stays in range and is reproducible") {
  std::mt19937_64 a(3);
  std::mt19937_64 b(3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_below(a, 52);
    CHECK(x < 52);
    CHECK(x == uniform_below(b, 52));
  }
}

TEST_CASE("same seed, same report, whatever the thread count") {
  SimConfig c = pair_config(20000, 11);
  c.threads = 1;
  const SimReport one = simulate(c);
  c.threads = 4;
  const SimReport four = simulate(c);
  CHECK(one.counts == four.counts);
  CHECK(one.estimates == four.estimates);
  CHECK(simulate(pair_config(20000, 12)).counts != one.counts);
}

TEST_CASE("a single round is one outcome per seat and one match result") {
  const SimReport r = simulate(pair_config(1, 5));
  std::uint64_t match = 0;
  for (const auto& [event, n] : r.counts) {
    if (event.rfind("match/win/", 0) == 0 || event == "match/tie") match += n;
  }
  CHECK(match == 1);
  for (int seat = 0; seat < 2; ++seat) {
    const std::string prefix = "seat" + std::to_string(seat) + "/";
    std::uint64_t outcomes = 0;
    for (const auto& [event, n] : r.counts) {
      if (event.rfind(prefix, 0) == 0 && event.find("/cards") == std::string::npos) outcomes += n;
    }
    CHECK(outcomes == 1);
  }
}

TEST_CASE("estimates agree with the exact engine") {
  const SimReport r = simulate(pair_config(200000, 99));
  const auto d = outcome_distribution(fresh_shoe(1), stand_on(17));
  const auto within = [&](const std::string& event, const Rational& exact) {
    const double q = to_double(exact);
    const double se = std::sqrt(q * (1 - q) / static_cast<double>(r.rounds));
    return std::abs(r.estimate(event) - q) <= 4 * se;
  };
  CHECK(within("seat0/einz", d.einz()));
  CHECK(within("seat0/bust", d.bust()));
  CHECK(within("seat1/stood/18", d.stood(18)));
  CHECK(within("seat0/stood/17/cards3", d.mass(Outcome::stood(17, 3))));
  CHECK(r.std_error("seat0/einz") ==
        doctest::Approx(std::sqrt(r.estimate("seat0/einz") * (1 - r.estimate("seat0/einz")) /
                                  200000.0)));
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(simulate(pair_config(0, 1)), InputError);
  SimConfig c = pair_config(10, 1);
  c.policies.clear();
  CHECK_THROWS_AS(simulate(c), InputError);
  c = pair_config(10, 1);
  c.rules.mode = GameMode::Dealer;
  c.rules.variant = DealerVariant::V3;
  CHECK_THROWS_AS(simulate(c), InputError);
}

TEST_CASE("dealer rounds") {
  SimConfig c;
  c.rounds = 5000;
  c.seed = 8;
  c.rules.mode = GameMode::Dealer;
  c.rules.variant = DealerVariant::V2;
  c.policies = {stand_on(17)};
  const SimReport r = simulate(c);
  CHECK(r.count("match/win/seat0") + r.count("match/win/dealer") == 5000);
}
