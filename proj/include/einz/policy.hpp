#pragma once

#include <string>
#include <string_view>

#include "einz/cards.hpp"

namespace einz {

enum class Action { Hit, Stand, Change14 };

std::string to_string(Action action);

/// Stand once the total reaches `stand_on`; optionally throw in a hand
/// totalling exactly 14 and take a fresh two-card deal instead of hitting.
struct ThresholdPolicy {
  int stand_on = 17;
  bool change_on_14 = false;
  /// Changes allowed per round. Only consulted when change_on_14 is set.
  int max_changes = 1;

  /// Throws InputError when stand_on is outside [12, 21] or max_changes < 0.
  void validate() const;

  friend bool operator==(const ThresholdPolicy&, const ThresholdPolicy&) = default;
};

ThresholdPolicy stand_on(int threshold, bool change_on_14 = false);

/// Parses "stand17", "standN" (N in 12..21), and the "+c14" suffix.
ThresholdPolicy parse_policy(std::string_view literal);
std::string to_string(const ThresholdPolicy& policy);

/// Action for a live hand with the given total. `changes_used` counts
/// change-on-14 restarts already taken this round; once max_changes is
/// reached a 14 is hit like any other total below the threshold.
/// Throws StateError for einz or bust totals.
Action decide(const ThresholdPolicy& policy, int total, int cards, int changes_used = 0);
Action decide(const ThresholdPolicy& policy, const Hand& hand, int changes_used = 0);

}  // namespace einz
