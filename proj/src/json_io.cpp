#include "einz/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "einz/errors.hpp"

namespace einz::json {

std::string engine_version() { return EINZ_VERSION; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

bool is_standing_query(const Json& j) { return j.is_object() && j.contains("standing"); }

namespace {

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<PointValue> cards_from(const Json& j, const char* key) {
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  std::vector<PointValue> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw InputError(std::string("field '") + key + "' holds a non-integer card");
    }
    out.emplace_back(v.get<int>());
  }
  return out;
}

void read_mode(const Json& j, RuleSet& rules) {
  const auto mode = get_or<std::string>(j, "mode", "open");
  if (mode == "open") {
    rules.mode = GameMode::Open;
  } else if (mode == "dealer") {
    rules.mode = GameMode::Dealer;
    rules.variant = parse_dealer_variant(get_or<std::string>(j, "variant", "v2"));
  } else if (mode.starts_with("dealer-")) {
    rules.mode = GameMode::Dealer;
    rules.variant = parse_dealer_variant(std::string_view(mode).substr(7));
  } else {
    throw InputError("unknown mode '" + mode + "' (open, dealer-v1, dealer-v2, dealer-v3)");
  }
}

void require_object(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
}

}  // namespace

ObservedState observed_state_from(const Json& j) {
  require_object(j);
  ObservedState s;
  s.rules.decks = get_or<int>(j, "decks", 1);
  if (s.rules.decks < 1) throw InputError("decks must be >= 1");
  read_mode(j, s.rules);
  s.rules.dealer_policy = parse_policy(get_or<std::string>(j, "dealer_policy", "stand17"));
  s.rules.change_on_14_allowed = get_or<bool>(j, "change_on_14_allowed", true);

  require(j, "hand");
  s.my_hand = Hand(cards_from(j, "hand"));
  s.removed = j.contains("removed") ? cards_from(j, "removed") : s.my_hand.values();
  s.my_policy = parse_policy(get_or<std::string>(j, "policy", "stand17"));
  s.my_policy.max_changes = get_or<int>(j, "max_changes", 1);
  s.changes_used = get_or<int>(j, "changes_used", 0);

  const auto computation = get_or<std::string>(j, "computation", "marginal");
  if (computation == "marginal") {
    s.mode = ComputationMode::Marginal;
  } else if (computation == "conditioned") {
    s.mode = ComputationMode::Conditioned;
  } else {
    throw InputError("unknown computation mode '" + computation + "'");
  }

  if (j.contains("opponents")) {
    const Json& opps = j.at("opponents");
    if (!opps.is_array()) throw InputError("field 'opponents' must be an array");
    for (const auto& o : opps) {
      require_object(o);
      OpponentInfo info;
      info.cards_taken = get_or<int>(o, "cards_taken", 2);
      info.has_stood = get_or<bool>(o, "has_stood", false);
      info.assumed_policy = parse_policy(get_or<std::string>(o, "policy", "stand17"));
      if (o.contains("min_card_value") && !o.at("min_card_value").is_null()) {
        info.min_card_value = get_or<int>(o, "min_card_value", 2);
      }
      s.opponents.push_back(info);
    }
  }
  validate(s);
  return s;
}

StandingQuery standing_query_from(const Json& j) {
  require_object(j);
  StandingQuery q;
  q.decks = get_or<int>(j, "decks", 1);
  if (q.decks < 1) throw InputError("decks must be >= 1");
  RuleSet rules;
  read_mode(j, rules);
  if (rules.mode == GameMode::Dealer) q.dealer_variant = rules.variant;
  const Json& players = require(j, "standing");
  if (!players.is_array()) throw InputError("field 'standing' must be an array");
  for (const auto& p : players) {
    require_object(p);
    StandingPlayer sp;
    sp.cards = get_or<int>(p, "cards", 2);
    sp.policy = parse_policy(get_or<std::string>(p, "policy", "stand17"));
    if (sp.cards < 2) throw StateError("a standing hand has at least two cards");
    q.players.push_back(sp);
  }
  return q;
}

SimConfig sim_config_from(const Json& j) {
  require_object(j);
  SimConfig c;
  const auto rounds = get_or<std::int64_t>(j, "rounds", 1);
  if (rounds < 1) throw InputError("rounds must be >= 1");
  c.rounds = static_cast<std::uint64_t>(rounds);
  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.rules.decks = get_or<int>(j, "decks", 1);
  if (c.rules.decks < 1) throw InputError("decks must be >= 1");
  read_mode(j, c.rules);
  c.rules.dealer_policy = parse_policy(get_or<std::string>(j, "dealer_policy", "stand17"));
  c.shared_shoe = get_or<bool>(j, "shared_shoe", false);
  c.threads = get_or<unsigned>(j, "threads", 0);
  const Json& policies = require(j, "policies");
  if (!policies.is_array()) throw InputError("field 'policies' must be an array");
  for (const auto& p : policies) {
    if (!p.is_string()) throw InputError("policies must be strings such as \"stand17\"");
    c.policies.push_back(parse_policy(p.get<std::string>()));
  }
  return c;
}

Json to_json(const Rational& value, int precision, bool exact) {
  Json number = std::stod(to_fixed(value, precision));
  if (!exact) return number;
  return Json{{"value", number}, {"exact", to_fraction(value)}};
}

Json to_json(const ActionEvaluation& e, int precision, bool exact) {
  Json j;
  j["action"] = to_string(e.action);
  j["win"] = to_json(e.win, precision, exact);
  j["tie"] = to_json(e.tie(), precision, exact);
  Json breakdown = Json::object();
  for (const auto& [k, p] : e.tie_breakdown) breakdown[k] = to_json(p, precision, exact);
  j["tie_breakdown"] = std::move(breakdown);
  j["lose"] = to_json(e.lose, precision, exact);
  j["rank"] = e.recommendation_rank;
  return j;
}

Json to_json(const MatchResult& r, int precision, bool exact) {
  Json j;
  Json wins = Json::array();
  for (const auto& w : r.win) wins.push_back(to_json(w, precision, exact));
  j["win"] = std::move(wins);
  j["tie"] = to_json(r.tie, precision, exact);
  Json detail = Json::object();
  for (const auto& [k, p] : r.detail) detail[k] = to_json(p, precision, exact);
  j["detail"] = std::move(detail);
  return j;
}

Json to_json(const ChangeComparison& c, int precision, bool exact) {
  return Json{{"continue", to_json(c.continue_prob, precision, exact)},
              {"restart", to_json(c.restart_prob, precision, exact)},
              {"recommend", c.restart_prob >= c.continue_prob ? "change14" : "continue"}};
}

Json to_json(const SimReport& r) {
  Json j;
  j["rounds"] = r.rounds;
  Json events = Json::object();
  for (const auto& [event, n] : r.counts) {
    std::ostringstream est, se;
    est << std::fixed << std::setprecision(6) << r.estimates.at(event);
    se << std::fixed << std::setprecision(6) << r.std_errors.at(event);
    events[event] = Json{{"count", n}, {"estimate", est.str()}, {"std_error", se.str()}};
  }
  j["events"] = std::move(events);
  return j;
}

Json evaluation_response(const ObservedState& state, const std::vector<ActionEvaluation>& evals,
                         int precision, bool exact) {
  Json j;
  j["engine_version"] = engine_version();
  j["computation_mode"] = to_string(state.mode);
  j["recommendation"] = to_string(recommend(evals));
  Json arr = Json::array();
  for (const auto& e : evals) arr.push_back(to_json(e, precision, exact));
  j["evaluations"] = std::move(arr);
  return j;
}

}  // namespace einz::json
