#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "einz/exact.hpp"
#include "einz/matchup.hpp"
#include "einz/policy.hpp"

namespace einz {

enum class GameMode { Open, Dealer };

struct RuleSet {
  int decks = 1;
  GameMode mode = GameMode::Open;
  DealerVariant variant = DealerVariant::V2;
  ThresholdPolicy dealer_policy = ThresholdPolicy{17, false, 0};
  bool change_on_14_allowed = true;
};

/// What is known about another player at the table.
struct OpponentInfo {
  int cards_taken = 2;
  /// Stood opponents have already acted (they sit before us); the others
  /// act after us.
  bool has_stood = false;
  ThresholdPolicy assumed_policy = ThresholdPolicy{17, false, 1};
  /// Every card in the opponent's hand is at least this value.
  std::optional<int> min_card_value;
};

/// How opponent and dealer hands are modelled.
///   Marginal: each drawn from a fresh shoe, independent of the cards we see.
///   Conditioned: drawn from the shoe minus every card known to be out.
enum class ComputationMode { Marginal, Conditioned };

std::string to_string(ComputationMode mode);

struct ObservedState {
  Hand my_hand;
  /// Every card known to be out of the shoe, our own hand included.
  std::vector<PointValue> removed;
  std::vector<OpponentInfo> opponents;
  RuleSet rules;
  /// How we keep playing after a hit or a change on 14.
  ThresholdPolicy my_policy = ThresholdPolicy{17, false, 1};
  int changes_used = 0;
  ComputationMode mode = ComputationMode::Marginal;
};

/// Throws StateError if the removed cards overdraw the shoe, the hand is not
/// contained in them, or the hand is terminal.
void validate(const ObservedState& state);

/// Shoe left after taking out every removed card.
Shoe remaining_shoe(const ObservedState& state);

struct ActionEvaluation {
  Action action = Action::Stand;
  Rational win = 0;
  /// "shared/m": we share the winning score with m - 1 other players.
  std::map<std::string, Rational> tie_breakdown;
  Rational lose = 0;
  /// 1 for the recommended action.
  int recommendation_rank = 0;

  Rational tie() const;
};

/// One evaluation per legal action: Stand, Hit, and Change14 when the total
/// is 14 and the rules and our policy allow it. Ranked by recommend's order.
std::vector<ActionEvaluation> evaluate_actions(const ObservedState& state,
                                               const EngineOptions& options = {});

/// Highest win probability; ties broken by lower lose probability, then
/// Stand before Hit before Change14. Throws InputError on an empty list.
Action recommend(const std::vector<ActionEvaluation>& evaluations);

struct ChangeComparison {
  Rational continue_prob;
  Rational restart_prob;
};

/// Probability of finishing at `stand_on` or better (einz included) when
/// keeping a 14 versus throwing it in for a fresh two-card deal. Neither
/// line changes again. Throws StateError unless the hand totals 14.
ChangeComparison change_on_14_comparison(const ObservedState& state, int stand_on,
                                         const EngineOptions& options = {});

/// Players who are all known to have stood, with their card counts.
struct StandingPlayer {
  int cards = 2;
  ThresholdPolicy policy = ThresholdPolicy{17, false, 1};
};

struct StandingQuery {
  int decks = 1;
  std::vector<StandingPlayer> players;
  /// When set, the last player is the dealer and the first the player;
  /// under V2 and V3 a shared score goes to the player.
  std::optional<DealerVariant> dealer_variant;
};

MatchResult evaluate_standing(const StandingQuery& query, const EngineOptions& options = {});

}  // namespace einz
