#include "einz/matchup.hpp"

#include <algorithm>
#include <tuple>

#include "einz/errors.hpp"

namespace einz {

Rational MatchResult::total() const {
  Rational sum = tie;
  for (const auto& w : win) sum += w;
  return sum;
}

namespace {

struct Standings {
  int top = -1;
  std::vector<int> holders;
  int stood_count = 0;

  Standings with(int seat, int score) const {
    Standings next = *this;
    next.stood_count += 1;
    if (score > top) {
      next.top = score;
      next.holders = {seat};
    } else if (score == top) {
      next.holders.push_back(seat);
    }
    return next;
  }

  friend auto operator<=>(const Standings&, const Standings&) = default;
};

std::string seat_key(int seat, const char* event) {
  return "seat" + std::to_string(seat) + "/" + event;
}

void credit(MatchResult& r, int seat, const char* event, const Rational& p) {
  r.win[static_cast<std::size_t>(seat)] += p;
  r.detail[seat_key(seat, event)] += p;
}

void resolve(MatchResult& r, const Standings& st, const Rational& p) {
  if (st.holders.empty()) {
    // the walkover rule makes this unreachable
    throw ArithmeticError("open game ended with no surviving player");
  }
  if (st.holders.size() == 1) {
    credit(r, st.holders.front(), st.stood_count > 1 ? "higher" : "others_bust", p);
    return;
  }
  const std::string size = std::to_string(st.holders.size());
  r.tie += p;
  r.detail["tie/" + size] += p;
  for (int seat : st.holders) r.detail["seat" + std::to_string(seat) + "/shared/" + size] += p;
}

struct SeatMarginal {
  Rational einz;
  Rational bust;
  ScoreDistribution stood;
};

void play_seat(MatchResult& r, std::span<const SeatMarginal> seats, int seat, const Standings& st,
               const Rational& p) {
  const int n = static_cast<int>(seats.size());
  if (seat == n) {
    resolve(r, st, p);
    return;
  }
  if (seat == n - 1 && st.stood_count == 0) {
    credit(r, seat, "walkover", p);
    return;
  }
  const SeatMarginal& m = seats[static_cast<std::size_t>(seat)];
  if (sgn(m.einz) != 0) credit(r, seat, "einz", p * m.einz);
  if (sgn(m.bust) != 0) play_seat(r, seats, seat + 1, st, p * m.bust);
  for (const auto& [score, q] : m.stood) play_seat(r, seats, seat + 1, st.with(seat, score), p * q);
}

MatchResult empty_result(std::size_t seats) {
  MatchResult r;
  r.win.assign(seats, Rational(0));
  return r;
}

}  // namespace

MatchResult open_match(std::span<const OutcomeDistribution> dists) {
  if (dists.size() < 2) throw InputError("an open game needs at least two players");
  std::vector<SeatMarginal> seats;
  seats.reserve(dists.size());
  for (const auto& d : dists) seats.push_back({d.einz(), d.bust(), d.stood_scores()});
  MatchResult r = empty_result(dists.size());
  play_seat(r, seats, 0, Standings{}, Rational(1));
  return r;
}

MatchResult open_match_shared_shoe(const Shoe& shoe, std::span<const ThresholdPolicy> policies,
                                   const EngineOptions& options) {
  const int n = static_cast<int>(policies.size());
  if (n < 2) throw InputError("an open game needs at least two players");
  MatchResult r = empty_result(policies.size());

  // Dealing two cards to everyone first and then completing hands seat by
  // seat gives the same joint law as completing each hand in turn, since
  // every player's decisions depend on his own cards only.
  using Layer = std::map<std::pair<Shoe::Counts, Standings>, Rational>;
  Layer layer;
  layer[{shoe.counts(), Standings{}}] = Rational(1);

  for (int seat = 0; seat < n; ++seat) {
    Layer next;
    std::map<Shoe::Counts, std::vector<Terminal>> cache;
    for (const auto& [key, p] : layer) {
      const auto& [counts, st] = key;
      if (seat == n - 1 && st.stood_count == 0) {
        credit(r, seat, "walkover", p);
        continue;
      }
      auto [it, fresh] = cache.try_emplace(counts);
      if (fresh) {
        enumerate_terminals(Shoe(shoe.decks(), counts), policies[static_cast<std::size_t>(seat)],
                            options, StartState{},
                            [&](const Terminal& t) { it->second.push_back(t); });
      }
      for (const Terminal& t : it->second) {
        const Rational q = p * t.mass;
        switch (t.outcome.kind) {
          case OutcomeKind::Einz: credit(r, seat, "einz", q); break;
          case OutcomeKind::Bust: next[{t.remaining.counts(), st}] += q; break;
          case OutcomeKind::Stood:
            next[{t.remaining.counts(), st.with(seat, t.outcome.score)}] += q;
            break;
        }
      }
    }
    layer = std::move(next);
  }
  for (const auto& [key, p] : layer) resolve(r, key.second, p);
  return r;
}

std::string to_string(DealerVariant variant) {
  switch (variant) {
    case DealerVariant::V1: return "v1";
    case DealerVariant::V2: return "v2";
    case DealerVariant::V3: return "v3";
  }
  return "?";
}

DealerVariant parse_dealer_variant(std::string_view text) {
  if (text == "v1" || text == "V1" || text == "1") return DealerVariant::V1;
  if (text == "v2" || text == "V2" || text == "2") return DealerVariant::V2;
  if (text == "v3" || text == "V3" || text == "3") return DealerVariant::V3;
  throw InputError("unknown dealer variant '" + std::string(text) + "'");
}

namespace {

// Ordering used by the symmetric variant.
int rank(const Outcome& o) {
  switch (o.kind) {
    case OutcomeKind::Bust: return 0;
    case OutcomeKind::Stood: return o.score;
    case OutcomeKind::Einz: return 100;
  }
  return 0;
}

}  // namespace

MatchResult dealer_match(const OutcomeDistribution& player, const Shoe& dealer_shoe,
                         const ThresholdPolicy& dealer_policy, DealerVariant variant,
                         const EngineOptions& options) {
  MatchResult r = empty_result(2);
  const auto player_wins = [&](const char* event, const Rational& p) { credit(r, 0, event, p); };
  const auto dealer_wins = [&](const char* event, const Rational& p) { credit(r, 1, event, p); };

  if (variant == DealerVariant::V1) {
    const auto dealer = outcome_distribution(dealer_shoe, dealer_policy, options);
    for (const auto& [po, pm] : player) {
      for (const auto& [dout, dm] : dealer) {
        const Rational p = pm * dm;
        const int a = rank(po);
        const int b = rank(dout);
        if (a > b) {
          player_wins("higher", p);
        } else if (a < b) {
          dealer_wins("higher", p);
        } else {
          r.tie += p;
          r.detail["tie/2"] += p;
        }
      }
    }
    return r;
  }

  dealer_wins("player_bust", player.bust());
  player_wins("einz", player.einz());

  if (variant == DealerVariant::V2) {
    const auto dealer = outcome_distribution(dealer_shoe, dealer_policy, options);
    const Rational dealer_einz = dealer.einz();
    const ScoreDistribution dealer_scores = dealer.stood_scores();
    for (const auto& [score, pm] : player.stood_scores()) {
      Rational beaten = dealer_einz;
      for (const auto& [ds, dm] : dealer_scores) {
        if (ds > score) beaten += dm;
      }
      dealer_wins("higher", pm * beaten);
      player_wins("dealer_not_higher", pm * (Rational(1) - beaten));
    }
    return r;
  }

  // V3: the dealer chases the player's score.
  for (const auto& [score, pm] : player.stood_scores()) {
    ThresholdPolicy chase{std::clamp(score + 1, 12, 21), false, 0};
    const auto dealer = outcome_distribution(dealer_shoe, chase, options);
    Rational beaten = dealer.einz();
    for (const auto& [ds, dm] : dealer.stood_scores()) {
      if (ds > score) beaten += dm;
    }
    dealer_wins("higher", pm * beaten);
    player_wins("dealer_bust", pm * (Rational(1) - beaten));
  }
  return r;
}

MatchResult standing_match(std::span<const ScoreDistribution> scores) {
  if (scores.size() < 2) throw InputError("a standing comparison needs at least two players");
  std::vector<SeatMarginal> seats;
  for (const auto& s : scores) {
    Rational sum = 0;
    for (const auto& [score, p] : s) {
      if (sgn(p) < 0) throw InputError("negative probability in score distribution");
      sum += p;
    }
    if (sum != 1) throw InputError("score distribution is not normalized");
    seats.push_back({Rational(0), Rational(0), s});
  }
  MatchResult r = empty_result(scores.size());
  // No seat can bust here, so the walkover branch never triggers.
  play_seat(r, seats, 0, Standings{}, Rational(1));
  return r;
}

}  // namespace einz
