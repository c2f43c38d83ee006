#include "einz/scenario.hpp"

#include <algorithm>

#include "einz/errors.hpp"

namespace einz {

std::string to_string(ComputationMode mode) {
  return mode == ComputationMode::Marginal ? "marginal" : "conditioned";
}

Rational ActionEvaluation::tie() const {
  Rational sum = 0;
  for (const auto& [k, p] : tie_breakdown) sum += p;
  return sum;
}

void validate(const ObservedState& state) {
  if (state.rules.decks < 1) throw StateError("decks must be >= 1");
  if (state.my_hand.empty()) throw StateError("hand is empty");
  if (classify(state.my_hand) != HandClass::Live) {
    throw StateError("hand is terminal (" + to_string(classify(state.my_hand)) +
                     "); nothing to decide");
  }
  if (state.changes_used < 0) throw StateError("changes_used must be >= 0");

  Shoe::Counts removed{};
  for (PointValue v : state.removed) removed[v.index()] += 1;
  for (PointValue v : state.my_hand.values()) {
    if (removed[v.index()]-- == 0) {
      throw StateError("hand card " + std::to_string(v.points()) + " missing from removed cards");
    }
  }
  remaining_shoe(state);

  for (const auto& o : state.opponents) {
    if (o.cards_taken < 2) throw StateError("an opponent holds at least two cards");
    if (o.min_card_value && (*o.min_card_value < 2 || *o.min_card_value > 11)) {
      throw StateError("min_card_value must be in [2, 11]");
    }
  }
}

Shoe remaining_shoe(const ObservedState& state) {
  return remove_all(fresh_shoe(state.rules.decks), state.removed);
}

namespace {

bool satisfies(const OpponentInfo& o, const Shoe& source, const Shoe& remaining) {
  if (!o.min_card_value) return true;
  for (PointValue v : all_point_values()) {
    if (v.points() < *o.min_card_value && source.count(v) != remaining.count(v)) return false;
  }
  return true;
}

OutcomeDistribution opponent_distribution(const OpponentInfo& o, const Shoe& source,
                                          const EngineOptions& options) {
  OutcomeDistribution dist;
  enumerate_terminals(source, o.assumed_policy, options, StartState{}, [&](const Terminal& t) {
    if (!satisfies(o, source, t.remaining)) return;
    if (o.has_stood &&
        (t.outcome.kind != OutcomeKind::Stood || t.outcome.cards != o.cards_taken)) {
      return;
    }
    dist.add(t.outcome, t.mass);
  });
  const Rational norm = dist.total();
  if (sgn(norm) == 0) {
    throw StateError("opponent behaviour is impossible under policy " +
                     to_string(o.assumed_policy));
  }
  OutcomeDistribution out;
  for (const auto& [outcome, m] : dist) out.add(outcome, m / norm);
  return out;
}

ThresholdPolicy effective_policy(const ObservedState& state) {
  ThresholdPolicy p = state.my_policy;
  if (!state.rules.change_on_14_allowed) p.change_on_14 = false;
  return p;
}

bool change_legal(const ObservedState& state) {
  return state.my_hand.total() == 14 && state.rules.change_on_14_allowed &&
         state.changes_used < std::max(state.my_policy.max_changes, 1);
}

OutcomeDistribution my_distribution(const ObservedState& state, Action action, const Shoe& shoe,
                                    const EngineOptions& options) {
  const Hand& hand = state.my_hand;
  const ThresholdPolicy policy = effective_policy(state);
  switch (action) {
    case Action::Stand:
      return OutcomeDistribution::point(Outcome::stood(hand.total(), hand.count()));
    case Action::Hit: {
      if (shoe.total() == 0) throw StateError("no cards left to hit");
      OutcomeDistribution out;
      for (PointValue v : all_point_values()) {
        if (shoe.count(v) == 0) continue;
        const Rational p = shoe.draw_probability(v);
        Hand next = hand;
        next.add(v);
        const Shoe rest = options.arithmetic == Arithmetic::WithReplacement ? shoe : remove(shoe, v);
        for (const auto& [o, m] : continue_hand(rest, next, policy, options, state.changes_used)) {
          out.add(o, p * m);
        }
      }
      return out;
    }
    case Action::Change14: {
      OutcomeDistribution out;
      enumerate_terminals(shoe, policy, options, StartState{0, 0, state.changes_used + 1},
                          [&](const Terminal& t) { out.add(t.outcome, t.mass); });
      return out;
    }
  }
  throw ArithmeticError("unknown action");
}

ActionEvaluation evaluate_open(Action action,
                               const OutcomeDistribution& mine,
                               const std::vector<OutcomeDistribution>& before,
                               const std::vector<OutcomeDistribution>& after) {
  ActionEvaluation e;
  e.action = action;
  if (before.empty() && after.empty()) {
    // alone at the table: anything short of a bust wins
    e.lose = mine.bust();
    e.win = Rational(1) - e.lose;
    return e;
  }
  std::vector<OutcomeDistribution> seats = before;
  const int me = static_cast<int>(seats.size());
  seats.push_back(mine);
  seats.insert(seats.end(), after.begin(), after.end());
  const MatchResult r = open_match(seats);
  e.win = r.win[static_cast<std::size_t>(me)];
  const std::string prefix = "seat" + std::to_string(me) + "/shared/";
  for (const auto& [key, p] : r.detail) {
    if (key.starts_with(prefix)) e.tie_breakdown["shared/" + key.substr(prefix.size())] = p;
  }
  e.lose = Rational(1) - e.win - e.tie();
  return e;
}

int action_order(Action a) {
  switch (a) {
    case Action::Stand: return 0;
    case Action::Hit: return 1;
    case Action::Change14: return 2;
  }
  return 3;
}

bool better(const ActionEvaluation& a, const ActionEvaluation& b) {
  if (a.win != b.win) return a.win > b.win;
  if (a.lose != b.lose) return a.lose < b.lose;
  return action_order(a.action) < action_order(b.action);
}

}  // namespace

std::vector<ActionEvaluation> evaluate_actions(const ObservedState& state,
                                               const EngineOptions& options) {
  validate(state);
  const Shoe shoe = remaining_shoe(state);
  const Shoe others_shoe = state.mode == ComputationMode::Marginal
                               ? fresh_shoe(state.rules.decks)
                               : shoe;

  std::vector<Action> actions{Action::Stand, Action::Hit};
  if (change_legal(state)) actions.push_back(Action::Change14);

  std::vector<ActionEvaluation> out;
  if (state.rules.mode == GameMode::Open) {
    std::vector<OutcomeDistribution> before;
    std::vector<OutcomeDistribution> after;
    for (const auto& o : state.opponents) {
      (o.has_stood ? before : after).push_back(opponent_distribution(o, others_shoe, options));
    }
    for (Action a : actions) {
      out.push_back(evaluate_open(a, my_distribution(state, a, shoe, options), before, after));
    }
  } else {
    for (Action a : actions) {
      const MatchResult r = dealer_match(my_distribution(state, a, shoe, options), others_shoe,
                                         state.rules.dealer_policy, state.rules.variant, options);
      ActionEvaluation e;
      e.action = a;
      e.win = r.win[0];
      e.lose = r.win[1];
      if (sgn(r.tie) != 0) e.tie_breakdown["shared/2"] = r.tie;
      out.push_back(std::move(e));
    }
  }

  std::vector<ActionEvaluation*> order;
  for (auto& e : out) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const ActionEvaluation* a, const ActionEvaluation* b) { return better(*a, *b); });
  for (std::size_t i = 0; i < order.size(); ++i) order[i]->recommendation_rank = static_cast<int>(i) + 1;
  return out;
}

Action recommend(const std::vector<ActionEvaluation>& evaluations) {
  if (evaluations.empty()) throw InputError("no evaluations to choose from");
  const auto best = std::min_element(
      evaluations.begin(), evaluations.end(),
      [](const ActionEvaluation& a, const ActionEvaluation& b) { return better(a, b); });
  return best->action;
}

ChangeComparison change_on_14_comparison(const ObservedState& state, int stand_on,
                                         const EngineOptions& options) {
  if (state.my_hand.total() != 14) {
    throw StateError("change on 14 needs a hand totalling 14, got " +
                     std::to_string(state.my_hand.total()));
  }
  validate(state);
  const Shoe shoe = remaining_shoe(state);
  const ThresholdPolicy policy{stand_on, false, 0};
  policy.validate();

  const auto made_it = [stand_on](const Outcome& o) {
    return o.kind == OutcomeKind::Einz || (o.kind == OutcomeKind::Stood && o.score >= stand_on);
  };
  ChangeComparison c{Rational(0), Rational(0)};
  for (const auto& [o, m] : continue_hand(shoe, state.my_hand, policy, options)) {
    if (made_it(o)) c.continue_prob += m;
  }
  for (const auto& [o, m] : outcome_distribution(shoe, policy, options)) {
    if (made_it(o)) c.restart_prob += m;
  }
  return c;
}

MatchResult evaluate_standing(const StandingQuery& query, const EngineOptions& options) {
  if (query.players.size() < 2) throw InputError("need at least two standing players");
  if (query.dealer_variant && query.players.size() != 2) {
    throw InputError("a dealer comparison takes exactly one player and the dealer");
  }
  const Shoe shoe = fresh_shoe(query.decks);
  std::vector<ScoreDistribution> scores;
  for (const auto& p : query.players) {
    scores.push_back(conditional_score_given_stand(outcome_distribution(shoe, p.policy, options),
                                                   p.cards));
  }
  MatchResult r = standing_match(scores);
  if (query.dealer_variant && *query.dealer_variant != DealerVariant::V1) {
    // the dealer needs a strictly higher score
    r.detail["seat0/tie_to_player"] = r.tie;
    r.win[0] += r.tie;
    r.tie = 0;
  }
  return r;
}

}  // namespace einz
