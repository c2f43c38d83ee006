#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "einz/numeric.hpp"

namespace einz {

inline constexpr std::size_t kValueClasses = 10;
inline constexpr int kCardsPerDeck = 52;

/// Point value of a card: 2..10 at face, jack 2, queen 3, king 4, ace 11.
/// Ranks sharing a point count are one class (a queen is a 3).
class PointValue {
 public:
  /// Throws InputError outside [2, 11].
  explicit PointValue(int points);

  static PointValue from_index(std::size_t index);

  constexpr int points() const { return points_; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(points_ - 2); }

  friend constexpr auto operator<=>(PointValue, PointValue) = default;

 private:
  int points_;
};

/// All value classes in ascending order.
const std::array<PointValue, kValueClasses>& all_point_values();

/// Cards of this value in one 52-card deck (8 for 2, 3, 4; 4 otherwise).
int per_deck_multiplicity(PointValue value);

/// Remaining cards per value class. A shoe holds `decks` full decks at most.
class Shoe {
 public:
  using Counts = std::array<int, kValueClasses>;

  /// Throws StateError if any count is negative or exceeds the deck limit.
  Shoe(int decks, const Counts& counts);

  int decks() const { return decks_; }
  int total() const { return total_; }
  int count(PointValue value) const { return counts_[value.index()]; }
  const Counts& counts() const { return counts_; }

  /// Probability that the next card drawn has this value.
  Rational draw_probability(PointValue value) const;

  /// Throws StateError when the value class is already empty.
  void remove(PointValue value);
  /// Inverse of remove; throws StateError past the full-shoe multiplicity.
  void restore(PointValue value);

  friend bool operator==(const Shoe&, const Shoe&) = default;
  friend auto operator<=>(const Shoe&, const Shoe&) = default;

 private:
  int decks_;
  Counts counts_;
  int total_;
};

/// Throws InputError for decks < 1.
Shoe fresh_shoe(int decks);

/// Copy of `shoe` with one card of `value` taken out.
Shoe remove(const Shoe& shoe, PointValue value);

/// Copy of `shoe` with every listed card taken out, in order.
Shoe remove_all(const Shoe& shoe, std::span<const PointValue> values);

enum class HandClass { Live, Einz, Bust };

std::string to_string(HandClass cls);

/// Einz: total 21, or exactly two cards totalling 22 (two aces).
constexpr HandClass classify(int total, int cards) {
  if (total == 21 || (cards == 2 && total == 22)) return HandClass::Einz;
  if (total > 21) return HandClass::Bust;
  return HandClass::Live;
}

/// Cards in draw order.
class Hand {
 public:
  Hand() = default;
  explicit Hand(std::vector<PointValue> values);
  static Hand of(std::initializer_list<int> points);

  void add(PointValue value);

  const std::vector<PointValue>& values() const { return values_; }
  int total() const { return total_; }
  int count() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

 private:
  std::vector<PointValue> values_;
  int total_ = 0;
};

/// Throws InputError on an empty hand.
HandClass classify(const Hand& hand);

}  // namespace einz
