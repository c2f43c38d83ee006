#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "einz/policy.hpp"
#include "einz/scenario.hpp"

namespace einz {

struct SimConfig {
  std::uint64_t rounds = 1;
  std::uint64_t seed = 0;
  /// decks, game mode, dealer variant and dealer policy.
  RuleSet rules;
  /// Open game: one policy per seat. Dealer game: the players facing the
  /// dealer (exactly one under V3).
  std::vector<ThresholdPolicy> policies;
  /// All hands of a round come out of one shoe instead of a fresh shoe each.
  bool shared_shoe = false;
  /// Worker threads; 0 picks the hardware concurrency. The report does not
  /// depend on this value.
  unsigned threads = 0;
};

/// Event counts and estimates. Event names:
///   seat{i}/bust, seat{i}/einz, seat{i}/stood/{score}, each also split
///   by card count with a "/cards{k}" suffix;
///   match/win/seat{i}, match/win/dealer, match/tie, match/tie/{m}.
struct SimReport {
  std::uint64_t rounds = 0;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, double> estimates;
  std::map<std::string, double> std_errors;

  std::uint64_t count(const std::string& event) const;
  double estimate(const std::string& event) const;
  double std_error(const std::string& event) const;
};

/// Rounds are played in fixed blocks, each with its own generator seeded
/// from (seed, block index), so the report is identical for any thread
/// count. Throws InputError for an invalid configuration.
SimReport simulate(const SimConfig& config);

/// SplitMix64 finalizer, used to derive per-block seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Unbiased integer in [0, n) by rejection; portable, unlike
/// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n);

}  // namespace einz
