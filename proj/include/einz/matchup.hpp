#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "einz/exact.hpp"

namespace einz {

/// Result of one round. `win[i]` is seat i winning alone; `tie` is the event
/// that two or more players share the winning score. For every game type
/// the win entries plus `tie` sum to one.
struct MatchResult {
  std::vector<Rational> win;
  Rational tie = 0;
  /// Finer events, e.g. "seat0/einz", "seat0/others_bust", "seat0/higher",
  /// "seat1/walkover", "tie/2", and "seat2/shared/2" for seat 2 being one
  /// of exactly two players sharing the top score.
  std::map<std::string, Rational> detail;

  Rational total() const;
};

/// Open game, players independent (each drawing from a fresh shoe).
/// Seats act in order. An einz ends the round for that player; a bust
/// eliminates at once, and a player left alone wins without playing. Among
/// the remaining stood hands the highest score wins.
/// Throws InputError for fewer than two players.
MatchResult open_match(std::span<const OutcomeDistribution> dists);

/// Open game where all seats draw from one depleting shoe, each player
/// completing his hand before the next acts. Cost grows quickly with the
/// number of seats; meant for two or three players.
MatchResult open_match_shared_shoe(const Shoe& shoe, std::span<const ThresholdPolicy> policies,
                                   const EngineOptions& options = {});

/// Dealer game comparison rules.
///   V1: symmetric comparison; bust < any stood score < einz; equal ties.
///   V2: player bust loses; dealer wins only with a strictly higher result.
///   V3: as V2, but the dealer keeps drawing until he strictly beats the
///       player's standing score, gets einz, or busts.
enum class DealerVariant { V1, V2, V3 };

std::string to_string(DealerVariant variant);
DealerVariant parse_dealer_variant(std::string_view text);

/// Player against dealer; win[0] is the player, win[1] the dealer. The
/// dealer plays from `dealer_shoe` independently of the player's cards.
/// `dealer_policy` is ignored under V3, where the stopping rule is derived
/// from the player's score.
MatchResult dealer_match(const OutcomeDistribution& player, const Shoe& dealer_shoe,
                         const ThresholdPolicy& dealer_policy, DealerVariant variant,
                         const EngineOptions& options = {});

/// All players are known to have stood; highest score wins, equal top
/// scores tie. Throws InputError unless every input sums to one.
MatchResult standing_match(std::span<const ScoreDistribution> scores);

}  // namespace einz
