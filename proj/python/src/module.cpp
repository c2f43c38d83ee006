#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "einz/errors.hpp"
#include "einz/exact.hpp"
#include "einz/json_io.hpp"
#include "einz/matchup.hpp"
#include "einz/montecarlo.hpp"
#include "einz/scenario.hpp"
#include "einz/tables.hpp"

namespace py = pybind11;
using namespace einz;

namespace {

constexpr int kPrecision = 12;

EngineOptions engine(const std::string& arithmetic) {
  EngineOptions o;
  if (arithmetic == "exact") o.arithmetic = Arithmetic::Exact;
  else if (arithmetic == "fixed-denominator") o.arithmetic = Arithmetic::FixedDenominator;
  else if (arithmetic == "with-replacement") o.arithmetic = Arithmetic::WithReplacement;
  else throw InputError("unknown arithmetic '" + arithmetic + "'");
  return o;
}

std::vector<std::tuple<std::string, int, int, std::string>> distribution(
    int decks, const std::string& policy, const std::string& arithmetic) {
  std::vector<std::tuple<std::string, int, int, std::string>> out;
  const auto d = outcome_distribution(fresh_shoe(decks), parse_policy(policy), engine(arithmetic));
  for (const auto& [o, m] : d) out.emplace_back(to_string(o.kind), o.score, o.cards, to_fraction(m));
  return out;
}

std::string table(int id, int decks, const std::string& format, int precision, bool exact,
                  const std::string& arithmetic) {
  OutputSpec spec;
  spec.format = parse_format(format);
  spec.precision = precision;
  spec.exact_fractions = exact;
  spec.validate();
  return render(make_table(id, decks, engine(arithmetic)), spec);
}

std::string match(const std::vector<std::string>& policies, int decks, bool shared_shoe) {
  std::vector<ThresholdPolicy> ps;
  for (const auto& p : policies) ps.push_back(parse_policy(p));
  const Shoe shoe = fresh_shoe(decks);
  if (shared_shoe) return json::to_json(open_match_shared_shoe(shoe, ps), kPrecision, true).dump();
  std::vector<OutcomeDistribution> dists;
  for (const auto& p : ps) dists.push_back(outcome_distribution(shoe, p));
  return json::to_json(open_match(dists), kPrecision, true).dump();
}

std::string dealer(const std::string& player, const std::string& dealer_policy,
                   const std::string& variant, int decks) {
  const Shoe shoe = fresh_shoe(decks);
  const auto p = outcome_distribution(shoe, parse_policy(player));
  return json::to_json(dealer_match(p, shoe, parse_policy(dealer_policy),
                                    parse_dealer_variant(variant)),
                       kPrecision, true)
      .dump();
}

std::string evaluate(const std::string& request, const std::string& arithmetic) {
  const auto j = json::parse(request);
  if (json::is_standing_query(j)) {
    return json::to_json(evaluate_standing(json::standing_query_from(j), engine(arithmetic)),
                         kPrecision, true)
        .dump();
  }
  const ObservedState state = json::observed_state_from(j);
  return json::evaluation_response(state, evaluate_actions(state, engine(arithmetic)), kPrecision,
                                   true)
      .dump();
}

std::string change14(const std::vector<int>& hand, const std::vector<int>& seen, int stand_on,
                     int decks, const std::string& arithmetic) {
  ObservedState s;
  s.rules.decks = decks;
  s.my_hand = Hand{};
  for (int v : hand) s.my_hand.add(PointValue(v));
  s.removed = s.my_hand.values();
  for (int v : seen) s.removed.emplace_back(v);
  return json::to_json(change_on_14_comparison(s, stand_on, engine(arithmetic)), kPrecision, true)
      .dump();
}

std::string simulate_json(const std::string& config) {
  return json::to_json(simulate(json::sim_config_from(json::parse(config)))).dump();
}

}  // namespace

PYBIND11_MODULE(_einz, m) {
  m.doc() = "Exact and simulated probabilities for the einz card game";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<StateError> state_error(m, "StateError", PyExc_ValueError);
  static py::exception<ArithmeticError> arithmetic_error(m, "ArithmeticError",
                                                         PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      input_error(e.what());
    } catch (const StateError& e) {
      state_error(e.what());
    } catch (const ArithmeticError& e) {
      arithmetic_error(e.what());
    }
  });

  m.attr("__version__") = json::engine_version();
  m.def("outcome_distribution", &distribution, py::arg("decks") = 1,
        py::arg("policy") = "stand17", py::arg("arithmetic") = "exact",
        "(kind, score, cards, exact probability) for every reachable outcome");
  m.def("table", &table, py::arg("id"), py::arg("decks") = 1, py::arg("format") = "json",
        py::arg("precision") = 3, py::arg("exact") = false, py::arg("arithmetic") = "exact");
  m.def("match", &match, py::arg("policies"), py::arg("decks") = 1,
        py::arg("shared_shoe") = false);
  m.def("dealer", &dealer, py::arg("player") = "stand17", py::arg("dealer") = "stand17",
        py::arg("variant") = "v2", py::arg("decks") = 1);
  m.def("evaluate", &evaluate, py::arg("request"), py::arg("arithmetic") = "exact");
  m.def("change14", &change14, py::arg("hand"), py::arg("seen") = std::vector<int>{},
        py::arg("stand_on") = 17, py::arg("decks") = 1, py::arg("arithmetic") = "exact");
  m.def("simulate", &simulate_json, py::arg("config"));
}
