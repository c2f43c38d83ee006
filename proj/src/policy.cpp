#include "einz/policy.hpp"

#include <charconv>

#include "einz/errors.hpp"

namespace einz {

std::string to_string(Action action) {
  switch (action) {
    case Action::Hit: return "hit";
    case Action::Stand: return "stand";
    case Action::Change14: return "change14";
  }
  return "?";
}

void ThresholdPolicy::validate() const {
  if (stand_on < 12 || stand_on > 21) {
    throw InputError("stand threshold must be in [12, 21], got " + std::to_string(stand_on));
  }
  if (max_changes < 0) throw InputError("max_changes must be >= 0");
}

ThresholdPolicy stand_on(int threshold, bool change_on_14) {
  ThresholdPolicy p{threshold, change_on_14, 1};
  p.validate();
  return p;
}

ThresholdPolicy parse_policy(std::string_view literal) {
  constexpr std::string_view prefix = "stand";
  constexpr std::string_view suffix = "+c14";
  const std::string original(literal);
  if (!literal.starts_with(prefix)) throw InputError("unknown policy '" + original + "'");
  literal.remove_prefix(prefix.size());
  bool change = false;
  if (literal.ends_with(suffix)) {
    change = true;
    literal.remove_suffix(suffix.size());
  }
  int threshold = 0;
  const auto [end, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), threshold);
  if (ec != std::errc{} || end != literal.data() + literal.size() || literal.empty()) {
    throw InputError("unknown policy '" + original + "'");
  }
  return stand_on(threshold, change);
}

std::string to_string(const ThresholdPolicy& policy) {
  std::string s = "stand" + std::to_string(policy.stand_on);
  if (policy.change_on_14) s += "+c14";
  return s;
}

Action decide(const ThresholdPolicy& policy, int total, int cards, int changes_used) {
  if (classify(total, cards) != HandClass::Live) {
    throw StateError("no decision on a terminal hand (total " + std::to_string(total) + ")");
  }
  if (total >= policy.stand_on) return Action::Stand;
  if (total == 14 && policy.change_on_14 && changes_used < policy.max_changes) {
    return Action::Change14;
  }
  return Action::Hit;
}

Action decide(const ThresholdPolicy& policy, const Hand& hand, int changes_used) {
  if (hand.empty()) throw StateError("no decision on an empty hand");
  return decide(policy, hand.total(), hand.count(), changes_used);
}

}  // namespace einz
