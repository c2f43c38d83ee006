#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>

#include "einz/cards.hpp"
#include "einz/numeric.hpp"
#include "einz/policy.hpp"

namespace einz {

enum class OutcomeKind { Bust, Stood, Einz };

std::string to_string(OutcomeKind kind);

/// Final result of one player's hand. `score` is the standing total and is
/// zero for Bust and Einz (a two-ace 22 and a 21 are the same outcome).
struct Outcome {
  OutcomeKind kind = OutcomeKind::Bust;
  int score = 0;
  int cards = 0;

  static Outcome bust(int cards) { return {OutcomeKind::Bust, 0, cards}; }
  static Outcome einz(int cards) { return {OutcomeKind::Einz, 0, cards}; }
  static Outcome stood(int score, int cards) { return {OutcomeKind::Stood, score, cards}; }

  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

/// Score-only marginal, keyed by standing total.
using ScoreDistribution = std::map<int, Rational>;

/// Probability mass over (outcome, card count).
class OutcomeDistribution {
 public:
  using Map = std::map<Outcome, Rational>;

  static OutcomeDistribution point(const Outcome& outcome);

  void add(const Outcome& outcome, const Rational& mass);

  Rational mass(const Outcome& outcome) const;
  Rational total() const;
  Rational bust() const;
  Rational einz() const;
  Rational stood() const;
  /// Stood at `score` with any number of cards.
  Rational stood(int score) const;
  Rational einz_with(int cards) const;
  Rational bust_with(int cards) const;
  /// Largest card count carrying mass.
  int max_cards() const;

  /// Stood scores with card counts folded together.
  ScoreDistribution stood_scores() const;

  const Map& masses() const { return mass_; }
  Map::const_iterator begin() const { return mass_.begin(); }
  Map::const_iterator end() const { return mass_.end(); }

  friend bool operator==(const OutcomeDistribution&, const OutcomeDistribution&) = default;

 private:
  Map mass_;
};

/// How a draw probability is formed.
///   Exact: remaining count over remaining cards (true without-replacement).
///   FixedDenominator: remaining count over the shoe size at the start of the
///     computation. Reproduces hand arithmetic of the form 8*7/50^2; the mass
///     that never gets drawn is booked as bust.
///   WithReplacement: the starting proportions never change (infinite deck).
enum class Arithmetic { Exact, FixedDenominator, WithReplacement };

/// Card count reported after a change on 14.
enum class CardCount { CurrentHand, AllDrawn };

struct EngineOptions {
  Arithmetic arithmetic = Arithmetic::Exact;
  CardCount card_count = CardCount::CurrentHand;
};

/// Where the enumeration starts: a hand already in progress (or nothing).
struct StartState {
  int total = 0;
  int cards = 0;
  int changes_used = 0;
};

/// One terminal line family: its outcome, the shoe it leaves behind, and its mass.
struct Terminal {
  Outcome outcome;
  Shoe remaining;
  Rational mass;
};

/// Walks every draw sequence the policy can produce, merging sequences that
/// reach the same (remaining shoe, total, cards, changes) state. The visitor
/// sees each terminal state once. A line that empties the shoe ends in a
/// forced stand at its current total, and a change on 14 with fewer than two
/// cards left is played as a hit.
void enumerate_terminals(const Shoe& shoe, const ThresholdPolicy& policy,
                         const EngineOptions& options, StartState start,
                         const std::function<void(const Terminal&)>& visit);

/// Distribution of a fresh two-card deal played out under `policy`.
/// Throws StateError when the shoe cannot deal two cards.
OutcomeDistribution outcome_distribution(const Shoe& shoe, const ThresholdPolicy& policy,
                                         const EngineOptions& options = {});

/// Distribution of `hand` played on from `remaining` (which must already
/// exclude the hand's cards).
OutcomeDistribution continue_hand(const Shoe& remaining, const Hand& hand,
                                  const ThresholdPolicy& policy, const EngineOptions& options = {},
                                  int changes_used = 0);

/// Stood scores at exactly `cards` cards, renormalized; einz and bust are
/// left out. Throws StateError when there is no stood mass at that card count.
ScoreDistribution conditional_score_given_stand(const OutcomeDistribution& dist, int cards);

/// Mean final score over stood outcomes, plus einz valued at `einz_value`
/// when `include_einz`; conditioned on `cards` when given.
/// Throws StateError on zero conditioning mass.
Rational expected_score(const OutcomeDistribution& dist, std::optional<int> cards,
                        bool include_einz, int einz_value = 21);

}  // namespace einz
