#include "einz/exact.hpp"

#include <algorithm>
#include <tuple>

#include "einz/errors.hpp"

namespace einz {

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Bust: return "bust";
    case OutcomeKind::Stood: return "stood";
    case OutcomeKind::Einz: return "einz";
  }
  return "?";
}

OutcomeDistribution OutcomeDistribution::point(const Outcome& outcome) {
  OutcomeDistribution d;
  d.add(outcome, Rational(1));
  return d;
}

void OutcomeDistribution::add(const Outcome& outcome, const Rational& mass) {
  if (sgn(mass) == 0) return;
  mass_[outcome] += mass;
}

Rational OutcomeDistribution::mass(const Outcome& outcome) const {
  auto it = mass_.find(outcome);
  return it == mass_.end() ? Rational(0) : it->second;
}

Rational OutcomeDistribution::total() const {
  Rational sum = 0;
  for (const auto& [o, m] : mass_) sum += m;
  return sum;
}

namespace {

template <class Pred>
Rational sum_if(const OutcomeDistribution::Map& masses, Pred pred) {
  Rational sum = 0;
  for (const auto& [o, m] : masses) {
    if (pred(o)) sum += m;
  }
  return sum;
}

}  // namespace

Rational OutcomeDistribution::bust() const {
  return sum_if(mass_, [](const Outcome& o) { return o.kind == OutcomeKind::Bust; });
}

Rational OutcomeDistribution::einz() const {
  return sum_if(mass_, [](const Outcome& o) { return o.kind == OutcomeKind::Einz; });
}

Rational OutcomeDistribution::stood() const {
  return sum_if(mass_, [](const Outcome& o) { return o.kind == OutcomeKind::Stood; });
}

Rational OutcomeDistribution::stood(int score) const {
  return sum_if(mass_, [score](const Outcome& o) {
    return o.kind == OutcomeKind::Stood && o.score == score;
  });
}

Rational OutcomeDistribution::einz_with(int cards) const { return mass(Outcome::einz(cards)); }

Rational OutcomeDistribution::bust_with(int cards) const { return mass(Outcome::bust(cards)); }

int OutcomeDistribution::max_cards() const {
  int n = 0;
  for (const auto& [o, m] : mass_) n = std::max(n, o.cards);
  return n;
}

ScoreDistribution OutcomeDistribution::stood_scores() const {
  ScoreDistribution out;
  for (const auto& [o, m] : mass_) {
    if (o.kind == OutcomeKind::Stood) out[o.score] += m;
  }
  return out;
}

namespace {

struct StateKey {
  int drawn;
  int changes;
  Shoe::Counts counts;
  int total;
  int cards;

  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

}  // namespace

void enumerate_terminals(const Shoe& shoe, const ThresholdPolicy& policy,
                         const EngineOptions& options, StartState start,
                         const std::function<void(const Terminal&)>& visit) {
  policy.validate();
  const int start_size = shoe.total();
  const int decks = shoe.decks();
  const auto reported_cards = [&](const StateKey& s) {
    return options.card_count == CardCount::AllDrawn ? start.cards + s.drawn : s.cards;
  };

  // Every transition goes to a strictly larger key (one more card drawn, or
  // one more change at the same draw count), so the map doubles as a
  // topologically ordered work queue that merges converging lines.
  std::map<StateKey, Rational> frontier;
  frontier.emplace(StateKey{0, start.changes_used, shoe.counts(), start.total, start.cards},
                   Rational(1));

  while (!frontier.empty()) {
    auto node = frontier.extract(frontier.begin());
    const StateKey& s = node.key();
    const Rational& p = node.mapped();

    const auto emit = [&](Outcome o) { visit(Terminal{o, Shoe(decks, s.counts), p}); };

    int remaining = 0;
    for (int c : s.counts) remaining += c;

    if (s.cards >= 2) {
      switch (classify(s.total, s.cards)) {
        case HandClass::Einz: emit(Outcome::einz(reported_cards(s))); continue;
        case HandClass::Bust: emit(Outcome::bust(reported_cards(s))); continue;
        case HandClass::Live: break;
      }
      const Action a = decide(policy, s.total, s.cards, s.changes);
      if (a == Action::Stand) {
        emit(Outcome::stood(s.total, reported_cards(s)));
        continue;
      }
      if (a == Action::Change14 && remaining >= 2) {
        frontier[StateKey{s.drawn, s.changes + 1, s.counts, 0, 0}] += p;
        continue;
      }
    }

    if (remaining == 0) {
      if (s.cards == 0) throw StateError("shoe exhausted before a hand could be dealt");
      emit(Outcome::stood(s.total, reported_cards(s)));
      continue;
    }

    const bool replace = options.arithmetic == Arithmetic::WithReplacement;
    const int denominator = options.arithmetic == Arithmetic::Exact ? remaining : start_size;
    for (std::size_t i = 0; i < kValueClasses; ++i) {
      if (s.counts[i] == 0) continue;
      StateKey next = s;
      next.drawn += 1;
      if (!replace) next.counts[i] -= 1;
      next.total += static_cast<int>(i) + 2;
      next.cards += 1;
      frontier[next] += p * make_rational(s.counts[i], denominator);
    }
    if (options.arithmetic == Arithmetic::FixedDenominator && remaining < start_size) {
      const Rational lost = p * make_rational(start_size - remaining, start_size);
      const int cards = options.card_count == CardCount::AllDrawn ? start.cards + s.drawn + 1
                                                                  : s.cards + 1;
      visit(Terminal{Outcome::bust(cards), Shoe(decks, s.counts), lost});
    }
  }
}

OutcomeDistribution outcome_distribution(const Shoe& shoe, const ThresholdPolicy& policy,
                                         const EngineOptions& options) {
  if (shoe.total() < 2) throw StateError("shoe too small to deal a hand");
  OutcomeDistribution dist;
  enumerate_terminals(shoe, policy, options, StartState{},
                      [&](const Terminal& t) { dist.add(t.outcome, t.mass); });
  return dist;
}

OutcomeDistribution continue_hand(const Shoe& remaining, const Hand& hand,
                                  const ThresholdPolicy& policy, const EngineOptions& options,
                                  int changes_used) {
  OutcomeDistribution dist;
  enumerate_terminals(remaining, policy, options,
                      StartState{hand.total(), hand.count(), changes_used},
                      [&](const Terminal& t) { dist.add(t.outcome, t.mass); });
  return dist;
}

ScoreDistribution conditional_score_given_stand(const OutcomeDistribution& dist, int cards) {
  ScoreDistribution out;
  Rational norm = 0;
  for (const auto& [o, m] : dist) {
    if (o.kind == OutcomeKind::Stood && o.cards == cards) {
      out[o.score] += m;
      norm += m;
    }
  }
  if (sgn(norm) == 0) {
    throw StateError("no stood mass with " + std::to_string(cards) + " cards");
  }
  for (auto& [score, m] : out) m /= norm;
  return out;
}

Rational expected_score(const OutcomeDistribution& dist, std::optional<int> cards,
                        bool include_einz, int einz_value) {
  Rational weighted = 0;
  Rational norm = 0;
  for (const auto& [o, m] : dist) {
    if (cards && o.cards != *cards) continue;
    if (o.kind == OutcomeKind::Stood) {
      weighted += m * o.score;
      norm += m;
    } else if (o.kind == OutcomeKind::Einz && include_einz) {
      weighted += m * einz_value;
      norm += m;
    }
  }
  if (sgn(norm) == 0) throw StateError("expected score conditioned on zero mass");
  return weighted / norm;
}

}  // namespace einz
