#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "einz/matchup.hpp"
#include "einz/montecarlo.hpp"
#include "einz/scenario.hpp"
#include "einz/tables.hpp"

namespace einz::json {

using Json = nlohmann::ordered_json;

/// Parses text, throwing InputError that names the byte offset on failure.
Json parse(std::string_view text);

/// Request body or fixture: either an observed state or, when it carries a
/// "standing" array, a standing comparison.
bool is_standing_query(const Json& j);

/// Shape errors throw InputError; an impossible state throws StateError.
ObservedState observed_state_from(const Json& j);
StandingQuery standing_query_from(const Json& j);
SimConfig sim_config_from(const Json& j);

/// Probabilities rounded half-up to `precision` digits.
Json to_json(const Rational& value, int precision, bool exact = false);
Json to_json(const ActionEvaluation& e, int precision, bool exact = false);
Json to_json(const MatchResult& r, int precision, bool exact = false);
Json to_json(const ChangeComparison& c, int precision, bool exact = false);
Json to_json(const SimReport& r);

/// The evaluate response: evaluations, recommendation, version, mode.
Json evaluation_response(const ObservedState& state, const std::vector<ActionEvaluation>& evals,
                         int precision, bool exact = false);

std::string engine_version();

}  // namespace einz::json
