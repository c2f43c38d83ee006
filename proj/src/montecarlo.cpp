#include "einz/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "einz/errors.hpp"

namespace einz {

std::uint64_t SimReport::count(const std::string& event) const {
  auto it = counts.find(event);
  return it == counts.end() ? 0 : it->second;
}

double SimReport::estimate(const std::string& event) const {
  auto it = estimates.find(event);
  return it == estimates.end() ? 0.0 : it->second;
}

double SimReport::std_error(const std::string& event) const {
  auto it = std_errors.find(event);
  return it == std_errors.end() ? 0.0 : it->second;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % n;
  }
}

namespace {

constexpr std::uint64_t kBlockRounds = 4096;
constexpr int kMaxCards = 24;
constexpr int kMaxScore = 22;

struct Tally {
  // per seat
  std::vector<std::array<std::uint64_t, kMaxCards>> bust, einz;
  std::vector<std::array<std::array<std::uint64_t, kMaxCards>, kMaxScore>> stood;
  std::vector<std::uint64_t> win;
  std::uint64_t dealer_win = 0;
  std::array<std::uint64_t, 16> tie{};

  explicit Tally(std::size_t seats)
      : bust(seats), einz(seats), stood(seats), win(seats, 0) {}

  void merge(const Tally& o) {
    for (std::size_t s = 0; s < win.size(); ++s) {
      for (int c = 0; c < kMaxCards; ++c) {
        bust[s][c] += o.bust[s][c];
        einz[s][c] += o.einz[s][c];
        for (int v = 0; v < kMaxScore; ++v) stood[s][v][c] += o.stood[s][v][c];
      }
      win[s] += o.win[s];
    }
    dealer_win += o.dealer_win;
    for (std::size_t m = 0; m < tie.size(); ++m) tie[m] += o.tie[m];
  }
};

class DrawShoe {
 public:
  explicit DrawShoe(const Shoe& shoe) : counts_(shoe.counts()), total_(shoe.total()) {}

  bool empty() const { return total_ == 0; }
  int size() const { return total_; }

  int draw(std::mt19937_64& gen) {
    auto r = static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(total_)));
    for (std::size_t i = 0; i < kValueClasses; ++i) {
      if (r < counts_[i]) {
        --counts_[i];
        --total_;
        return static_cast<int>(i) + 2;
      }
      r -= counts_[i];
    }
    throw ArithmeticError("draw fell off the shoe");
  }

 private:
  Shoe::Counts counts_;
  int total_;
};

struct Played {
  OutcomeKind kind;
  int score;
  int cards;
};

struct HandInProgress {
  int total = 0;
  int cards = 0;
};

Played finish(HandInProgress h, const ThresholdPolicy& policy, DrawShoe& shoe,
              std::mt19937_64& gen) {
  int changes = 0;
  for (;;) {
    if (h.cards >= 2) {
      switch (classify(h.total, h.cards)) {
        case HandClass::Einz: return {OutcomeKind::Einz, 0, h.cards};
        case HandClass::Bust: return {OutcomeKind::Bust, 0, h.cards};
        case HandClass::Live: break;
      }
      const Action a = decide(policy, h.total, h.cards, changes);
      if (a == Action::Stand) return {OutcomeKind::Stood, h.total, h.cards};
      if (a == Action::Change14 && shoe.size() >= 2) {
        ++changes;
        h = HandInProgress{};
        continue;
      }
    }
    if (shoe.empty()) return {OutcomeKind::Stood, h.total, h.cards};
    h.total += shoe.draw(gen);
    h.cards += 1;
  }
}

HandInProgress deal_two(DrawShoe& shoe, std::mt19937_64& gen) {
  HandInProgress h;
  for (int i = 0; i < 2 && !shoe.empty(); ++i) {
    h.total += shoe.draw(gen);
    h.cards += 1;
  }
  return h;
}

void record(Tally& t, std::size_t seat, const Played& p) {
  const int c = std::min(p.cards, kMaxCards - 1);
  switch (p.kind) {
    case OutcomeKind::Bust: ++t.bust[seat][c]; break;
    case OutcomeKind::Einz: ++t.einz[seat][c]; break;
    case OutcomeKind::Stood: ++t.stood[seat][std::clamp(p.score, 0, kMaxScore - 1)][c]; break;
  }
}

void resolve_open(Tally& t, const std::vector<Played>& hands) {
  const std::size_t n = hands.size();
  int top = -1;
  std::vector<std::size_t> holders;
  int stood = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == n && stood == 0) {
      ++t.win[i];  // walkover
      return;
    }
    const Played& h = hands[i];
    if (h.kind == OutcomeKind::Einz) {
      ++t.win[i];
      return;
    }
    if (h.kind == OutcomeKind::Bust) continue;
    ++stood;
    if (h.score > top) {
      top = h.score;
      holders = {i};
    } else if (h.score == top) {
      holders.push_back(i);
    }
  }
  if (holders.size() == 1) {
    ++t.win[holders.front()];
  } else {
    ++t.tie[std::min<std::size_t>(holders.size(), t.tie.size() - 1)];
  }
}

int rank(const Played& p) {
  if (p.kind == OutcomeKind::Bust) return 0;
  if (p.kind == OutcomeKind::Einz) return 100;
  return p.score;
}

void play_block(const SimConfig& cfg, std::uint64_t block, Tally& t) {
  std::mt19937_64 gen(splitmix64(cfg.seed ^ splitmix64(block)));
  const Shoe fresh = fresh_shoe(cfg.rules.decks);
  const std::size_t seats = cfg.policies.size();
  const std::uint64_t begin = block * kBlockRounds;
  const std::uint64_t end = std::min(cfg.rounds, begin + kBlockRounds);
  std::vector<Played> hands(seats);
  std::vector<HandInProgress> dealt(seats);

  for (std::uint64_t round = begin; round < end; ++round) {
    DrawShoe shared(fresh);
    if (cfg.shared_shoe) {
      for (std::size_t s = 0; s < seats; ++s) dealt[s] = deal_two(shared, gen);
    }
    for (std::size_t s = 0; s < seats; ++s) {
      if (cfg.shared_shoe) {
        hands[s] = finish(dealt[s], cfg.policies[s], shared, gen);
      } else {
        DrawShoe own(fresh);
        hands[s] = finish(deal_two(own, gen), cfg.policies[s], own, gen);
      }
      record(t, s, hands[s]);
    }

    if (cfg.rules.mode == GameMode::Open) {
      if (seats >= 2) resolve_open(t, hands);
      continue;
    }

    DrawShoe own_dealer(fresh);
    DrawShoe& dealer_shoe = cfg.shared_shoe ? shared : own_dealer;
    const Played& player = hands.front();
    if (cfg.rules.variant == DealerVariant::V3) {
      if (player.kind == OutcomeKind::Bust) {
        ++t.dealer_win;
      } else if (player.kind == OutcomeKind::Einz) {
        ++t.win[0];
      } else {
        const ThresholdPolicy chase{std::clamp(player.score + 1, 12, 21), false, 0};
        const Played d = finish(deal_two(dealer_shoe, gen), chase, dealer_shoe, gen);
        if (rank(d) > player.score && d.kind != OutcomeKind::Bust) {
          ++t.dealer_win;
        } else {
          ++t.win[0];
        }
      }
      continue;
    }

    const Played d = finish(deal_two(dealer_shoe, gen), cfg.rules.dealer_policy, dealer_shoe, gen);
    for (std::size_t s = 0; s < seats; ++s) {
      const Played& p = hands[s];
      if (cfg.rules.variant == DealerVariant::V1) {
        if (rank(p) > rank(d)) {
          ++t.win[s];
        } else if (rank(p) < rank(d)) {
          ++t.dealer_win;
        } else {
          ++t.tie[2];
        }
      } else if (p.kind == OutcomeKind::Bust) {
        ++t.dealer_win;
      } else if (p.kind == OutcomeKind::Einz || d.kind == OutcomeKind::Bust || rank(d) <= p.score) {
        ++t.win[s];
      } else {
        ++t.dealer_win;
      }
    }
  }
}

}  // namespace

SimReport simulate(const SimConfig& config) {
  if (config.rounds < 1) throw InputError("rounds must be >= 1");
  if (config.policies.empty()) throw InputError("simulation needs at least one player policy");
  for (const auto& p : config.policies) p.validate();
  config.rules.dealer_policy.validate();
  if (config.rules.mode == GameMode::Dealer && config.rules.variant == DealerVariant::V3 &&
      config.policies.size() != 1) {
    throw InputError("the chasing dealer (v3) is simulated against exactly one player");
  }
  fresh_shoe(config.rules.decks);

  const std::size_t seats = config.policies.size();
  const std::uint64_t blocks = (config.rounds + kBlockRounds - 1) / kBlockRounds;
  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  std::vector<Tally> partial(workers, Tally(seats));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t b = w; b < blocks; b += workers) play_block(config, b, partial[w]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  Tally total(seats);
  for (const auto& t : partial) total.merge(t);

  SimReport report;
  report.rounds = config.rounds;
  const auto put = [&](const std::string& event, std::uint64_t n) {
    if (n > 0) report.counts[event] += n;
  };
  for (std::size_t s = 0; s < seats; ++s) {
    const std::string seat = "seat" + std::to_string(s);
    for (int c = 0; c < kMaxCards; ++c) {
      const std::string cards = "/cards" + std::to_string(c);
      put(seat + "/bust", total.bust[s][c]);
      put(seat + "/bust" + cards, total.bust[s][c]);
      put(seat + "/einz", total.einz[s][c]);
      put(seat + "/einz" + cards, total.einz[s][c]);
      for (int v = 0; v < kMaxScore; ++v) {
        const std::string score = seat + "/stood/" + std::to_string(v);
        put(score, total.stood[s][v][c]);
        put(score + cards, total.stood[s][v][c]);
      }
    }
    put("match/win/" + seat, total.win[s]);
  }
  put("match/win/dealer", total.dealer_win);
  for (std::size_t m = 2; m < total.tie.size(); ++m) {
    put("match/tie", total.tie[m]);
    put("match/tie/" + std::to_string(m), total.tie[m]);
  }

  const double n = static_cast<double>(config.rounds);
  for (const auto& [event, k] : report.counts) {
    const double p = static_cast<double>(k) / n;
    report.estimates[event] = p;
    report.std_errors[event] = std::sqrt(p * (1.0 - p) / n);
  }
  return report;
}

}  // namespace einz
