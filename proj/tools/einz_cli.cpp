// einz: regenerate the result tables, evaluate game situations, run
// simulations and serve the advisor API.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "einz/errors.hpp"
#include "einz/json_io.hpp"
#include "einz/matchup.hpp"
#include "einz/montecarlo.hpp"
#include "einz/scenario.hpp"
#include "einz/service.hpp"
#include "einz/tables.hpp"

namespace {

using namespace einz;

enum ExitCode { kOk = 0, kFailure = 1, kParseError = 2, kStateError = 3, kArithmeticError = 4 };

struct Globals {
  int decks = 1;
  std::string format = "table";
  int precision = 3;
  bool exact = false;
  std::string arithmetic = "exact";

  OutputSpec output() const {
    OutputSpec spec;
    spec.format = parse_format(format);
    spec.precision = precision;
    spec.exact_fractions = exact;
    spec.validate();
    return spec;
  }

  EngineOptions engine() const {
    EngineOptions o;
    if (arithmetic == "exact") {
      o.arithmetic = Arithmetic::Exact;
    } else if (arithmetic == "fixed-denominator") {
      o.arithmetic = Arithmetic::FixedDenominator;
    } else if (arithmetic == "with-replacement") {
      o.arithmetic = Arithmetic::WithReplacement;
    } else {
      throw InputError("unknown arithmetic '" + arithmetic + "'");
    }
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<PointValue> parse_cards(const std::vector<int>& points) {
  std::vector<PointValue> out;
  for (int p : points) out.emplace_back(p);
  return out;
}

std::string pct(const Rational& p, int precision) { return to_fixed(p, precision); }

void print_match(const MatchResult& r, const std::vector<std::string>& names, const Globals& g) {
  const OutputSpec out = g.output();
  if (out.format == Format::Json) {
    auto j = json::to_json(r, out.precision, out.exact_fractions);
    j["players"] = names;
    std::cout << j.dump(2) << '\n';
    return;
  }
  const char sep = out.format == Format::Csv ? ',' : ' ';
  if (out.format == Format::Csv) std::cout << "result,probability\n";
  for (std::size_t i = 0; i < r.win.size(); ++i) {
    std::cout << names[i] << " wins" << sep << pct(r.win[i], out.precision) << '\n';
  }
  std::cout << "tied" << sep << pct(r.tie, out.precision) << '\n';
}

int cmd_tables(const std::vector<std::string>& ids, const Globals& g) {
  const OutputSpec out = g.output();
  std::vector<int> which;
  for (const auto& id : ids) {
    if (id == "all") {
      for (int i = 1; i <= kTableCount; ++i) which.push_back(i);
      continue;
    }
    try {
      std::size_t used = 0;
      which.push_back(std::stoi(id, &used));
      if (used != id.size()) throw std::invalid_argument(id);
    } catch (const std::exception&) {
      throw InputError("unknown table id '" + id + "'");
    }
  }
  bool first = true;
  for (int id : which) {
    if (!first && out.format == Format::Text) std::cout << '\n';
    first = false;
    std::cout << render(make_table(id, g.decks, g.engine()), out);
  }
  return kOk;
}

int cmd_match(const std::vector<std::string>& policies, bool shared, const Globals& g) {
  std::vector<ThresholdPolicy> parsed;
  std::vector<std::string> names;
  for (const auto& p : policies) {
    parsed.push_back(parse_policy(p));
    names.push_back("player " + std::to_string(names.size() + 1) + " (" + p + ")");
  }
  const Shoe shoe = fresh_shoe(g.decks);
  MatchResult r;
  if (shared) {
    r = open_match_shared_shoe(shoe, parsed, g.engine());
  } else {
    std::vector<OutcomeDistribution> dists;
    for (const auto& p : parsed) dists.push_back(outcome_distribution(shoe, p, g.engine()));
    r = open_match(dists);
  }
  print_match(r, names, g);
  return kOk;
}

int cmd_dealer(const std::string& player, const std::string& dealer, const std::string& variant,
               const Globals& g) {
  const Shoe shoe = fresh_shoe(g.decks);
  const auto dist = outcome_distribution(shoe, parse_policy(player), g.engine());
  const MatchResult r =
      dealer_match(dist, shoe, parse_policy(dealer), parse_dealer_variant(variant), g.engine());
  print_match(r, {"player (" + player + ")", "dealer (" + dealer + ")"}, g);
  return kOk;
}

int cmd_scenario(const std::string& path, const Globals& g) {
  const OutputSpec out = g.output();
  const json::Json request = json::parse(read_file(path));
  if (json::is_standing_query(request)) {
    const StandingQuery q = json::standing_query_from(request);
    const MatchResult r = evaluate_standing(q, g.engine());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < q.players.size(); ++i) {
      const bool dealer = q.dealer_variant && i + 1 == q.players.size();
      names.push_back((dealer ? std::string("dealer") : "player " + std::to_string(i + 1)) +
                      " (" + std::to_string(q.players[i].cards) + " cards)");
    }
    print_match(r, names, g);
    return kOk;
  }

  const ObservedState state = json::observed_state_from(request);
  const auto evals = evaluate_actions(state, g.engine());
  if (out.format == Format::Json) {
    std::cout << json::evaluation_response(state, evals, out.precision, out.exact_fractions).dump(2)
              << '\n';
    return kOk;
  }
  if (out.format == Format::Csv) {
    std::cout << "action,win,tie,lose,rank\n";
    for (const auto& e : evals) {
      std::cout << to_string(e.action) << ',' << pct(e.win, out.precision) << ','
                << pct(e.tie(), out.precision) << ',' << pct(e.lose, out.precision) << ','
                << e.recommendation_rank << '\n';
    }
    return kOk;
  }
  for (const auto& e : evals) {
    std::cout << to_string(e.action) << ": win " << pct(e.win, out.precision) << "  tie "
              << pct(e.tie(), out.precision) << "  lose " << pct(e.lose, out.precision) << '\n';
    for (const auto& [k, p] : e.tie_breakdown) {
      std::cout << "    " << k << ' ' << pct(p, out.precision) << '\n';
    }
  }
  const Action best = recommend(evals);
  for (const auto& e : evals) {
    if (e.action != best) continue;
    std::string name = to_string(best);
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::cout << name << " (win " << pct(e.win, out.precision) << ")\n";
  }
  return kOk;
}

int cmd_change14(const std::vector<int>& hand, const std::vector<int>& seen, int stand_on_score,
                 const Globals& g) {
  ObservedState state;
  state.rules.decks = g.decks;
  state.my_hand = Hand(parse_cards(hand));
  state.removed = state.my_hand.values();
  for (PointValue v : parse_cards(seen)) state.removed.push_back(v);
  const ChangeComparison c = change_on_14_comparison(state, stand_on_score, g.engine());
  const OutputSpec out = g.output();
  if (out.format == Format::Json) {
    std::cout << json::to_json(c, out.precision, out.exact_fractions).dump(2) << '\n';
    return kOk;
  }
  const auto show = [&](const Rational& p) {
    return out.exact_fractions ? pct(p, out.precision) + " (" + to_fraction(p) + ")"
                               : pct(p, out.precision);
  };
  const char sep = out.format == Format::Csv ? ',' : ' ';
  if (out.format == Format::Csv) std::cout << "line,probability\n";
  std::cout << "continue" << sep << show(c.continue_prob) << '\n';
  std::cout << "restart" << sep << show(c.restart_prob) << '\n';
  return kOk;
}

int cmd_simulate(const std::string& path, std::optional<std::uint64_t> rounds,
                 std::optional<std::uint64_t> seed, const Globals& g) {
  SimConfig cfg = json::sim_config_from(json::parse(read_file(path)));
  if (rounds) cfg.rounds = *rounds;
  if (seed) cfg.seed = *seed;
  const SimReport report = simulate(cfg);
  const OutputSpec out = g.output();
  if (out.format == Format::Csv) {
    std::cout << "event,count,estimate,std_error\n";
    const auto j = json::to_json(report);
    for (const auto& [event, v] : j["events"].items()) {
      std::cout << event << ',' << v["count"].get<std::uint64_t>() << ','
                << v["estimate"].get<std::string>() << ',' << v["std_error"].get<std::string>()
                << '\n';
    }
    return kOk;
  }
  std::cout << json::to_json(report).dump(2) << '\n';
  return kOk;
}

service::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(int port, const std::string& bind, const std::string& static_dir,
              const std::vector<std::string>& cors) {
  service::Config cfg;
  cfg.port = port;
  cfg.bind_address = bind;
  cfg.static_dir = static_dir;
  if (!cors.empty()) cfg.cors_origins = cors;
  service::Server server(cfg);
  int bound = 0;
  try {
    bound = server.bind();
  } catch (const std::exception& e) {
    std::cerr << "einz serve: " << e.what() << '\n';
    return kFailure;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "einz advisor listening on http://" << bind << ':' << bound << '\n';
  server.run();
  g_server = nullptr;
  return kOk;
}

int default_port() {
  if (const char* env = std::getenv("EINZ_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string("EINZ_PORT is not a port number: ") + env);
    }
  }
  return 8080;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"einz: exact probabilities and advice for the einz card game"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--decks", g.decks, "Number of 52-card decks")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format: table, csv or json");
  app.add_option("--precision", g.precision, "Digits after the decimal point")
      ->check(CLI::Range(1, 12));
  app.add_flag("--exact", g.exact, "Also print exact fractions");
  app.add_option("--arithmetic", g.arithmetic,
                 "exact, fixed-denominator or with-replacement");

  std::vector<std::string> table_ids;
  auto* tables = app.add_subcommand("tables", "Regenerate result tables 1-6");
  tables->add_option("ids", table_ids, "Table ids (1-6) or 'all'")->required();

  std::vector<std::string> match_policies;
  bool shared = false;
  auto* match = app.add_subcommand("match", "Open game between players in seat order");
  match->add_option("policies", match_policies, "Policy per seat, e.g. stand17 stand18")
      ->required();
  match->add_flag("--shared-shoe", shared, "All players draw from one shoe");

  std::string player = "stand17", dealer = "stand17", variant = "v2";
  auto* dealer_cmd = app.add_subcommand("dealer", "Player against the dealer");
  dealer_cmd->add_option("--player", player, "Player policy");
  dealer_cmd->add_option("--dealer", dealer, "Dealer policy (ignored by v3)");
  dealer_cmd->add_option("--variant", variant, "v1, v2 or v3");

  std::string state_file;
  auto* scenario = app.add_subcommand("scenario", "Evaluate the actions in an observed state");
  scenario->add_option("state", state_file, "Observed state JSON file")->required();

  std::vector<int> hand, seen;
  int change_stand_on = 17;
  auto* change14 = app.add_subcommand("change14", "Keep a 14 or throw it in");
  change14->add_option("--hand", hand, "Hand values, e.g. 10 4")->required();
  change14->add_option("--seen", seen, "Other cards known to be out of the shoe");
  change14->add_option("--stand-on", change_stand_on, "Target score")->check(CLI::Range(12, 21));

  std::string sim_file;
  std::optional<std::uint64_t> sim_rounds, sim_seed;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo simulation from a config file");
  sim->add_option("config", sim_file, "Simulation config JSON file")->required();
  sim->add_option("--rounds", sim_rounds, "Override the number of rounds");
  sim->add_option("--seed", sim_seed, "Override the seed");

  int port = 0;
  std::string bind = "127.0.0.1", static_dir;
  std::vector<std::string> cors;
  auto* serve = app.add_subcommand("serve", "Run the advisor HTTP API");
  serve->add_option("--port", port, "Port (default $EINZ_PORT or 8080)");
  serve->add_option("--bind", bind, "Bind address");
  serve->add_option("--static-dir", static_dir, "Directory of web UI assets to serve");
  serve->add_option("--cors-origin", cors, "Allowed CORS origin (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*tables) return cmd_tables(table_ids, g);
    if (*match) return cmd_match(match_policies, shared, g);
    if (*dealer_cmd) return cmd_dealer(player, dealer, variant, g);
    if (*scenario) return cmd_scenario(state_file, g);
    if (*change14) return cmd_change14(hand, seen, change_stand_on, g);
    if (*sim) return cmd_simulate(sim_file, sim_rounds, sim_seed, g);
    if (*serve) return cmd_serve(serve->count("--port") ? port : default_port(), bind, static_dir, cors);
  } catch (const InputError& e) {
    std::cerr << "einz: " << e.what() << '\n';
    return kParseError;
  } catch (const StateError& e) {
    std::cerr << "einz: " << e.what() << '\n';
    return kStateError;
  } catch (const ArithmeticError& e) {
    std::cerr << "einz: internal arithmetic failure: " << e.what() << '\n';
    return kArithmeticError;
  } catch (const std::exception& e) {
    std::cerr << "einz: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
