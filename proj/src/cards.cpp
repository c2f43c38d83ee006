#include "einz/cards.hpp"

#include <numeric>

#include "einz/errors.hpp"

namespace einz {

PointValue::PointValue(int points) : points_(points) {
  if (points < 2 || points > 11) {
    throw InputError("point value out of range [2, 11]: " + std::to_string(points));
  }
}

PointValue PointValue::from_index(std::size_t index) {
  return PointValue(static_cast<int>(index) + 2);
}

const std::array<PointValue, kValueClasses>& all_point_values() {
  static const std::array<PointValue, kValueClasses> values{
      PointValue(2), PointValue(3), PointValue(4), PointValue(5), PointValue(6),
      PointValue(7), PointValue(8), PointValue(9), PointValue(10), PointValue(11)};
  return values;
}

int per_deck_multiplicity(PointValue value) {
  // 2 = two + jack, 3 = three + queen, 4 = four + king
  return value.points() <= 4 ? 8 : 4;
}

Shoe::Shoe(int decks, const Counts& counts) : decks_(decks), counts_(counts) {
  if (decks < 1) throw InputError("shoe needs at least one deck");
  for (PointValue v : all_point_values()) {
    const int c = counts_[v.index()];
    if (c < 0 || c > decks * per_deck_multiplicity(v)) {
      throw StateError("count " + std::to_string(c) + " of value " + std::to_string(v.points()) +
                       " is impossible with " + std::to_string(decks) + " deck(s)");
    }
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

Rational Shoe::draw_probability(PointValue value) const {
  if (total_ == 0) throw StateError("draw from an empty shoe");
  return make_rational(count(value), total_);
}

void Shoe::remove(PointValue value) {
  int& c = counts_[value.index()];
  if (c == 0) {
    throw StateError("no card of value " + std::to_string(value.points()) + " left in the shoe");
  }
  --c;
  --total_;
}

void Shoe::restore(PointValue value) {
  int& c = counts_[value.index()];
  if (c >= decks_ * per_deck_multiplicity(value)) {
    throw StateError("shoe already holds every card of value " + std::to_string(value.points()));
  }
  ++c;
  ++total_;
}

Shoe fresh_shoe(int decks) {
  if (decks < 1) throw InputError("decks must be >= 1");
  Shoe::Counts counts{};
  for (PointValue v : all_point_values()) counts[v.index()] = decks * per_deck_multiplicity(v);
  return Shoe(decks, counts);
}

Shoe remove(const Shoe& shoe, PointValue value) {
  Shoe out = shoe;
  out.remove(value);
  return out;
}

Shoe remove_all(const Shoe& shoe, std::span<const PointValue> values) {
  Shoe out = shoe;
  for (PointValue v : values) out.remove(v);
  return out;
}

std::string to_string(HandClass cls) {
  switch (cls) {
    case HandClass::Live: return "live";
    case HandClass::Einz: return "einz";
    case HandClass::Bust: return "bust";
  }
  return "?";
}

Hand::Hand(std::vector<PointValue> values) : values_(std::move(values)) {
  for (PointValue v : values_) total_ += v.points();
}

Hand Hand::of(std::initializer_list<int> points) {
  Hand h;
  for (int p : points) h.add(PointValue(p));
  return h;
}

void Hand::add(PointValue value) {
  values_.push_back(value);
  total_ += value.points();
}

HandClass classify(const Hand& hand) {
  if (hand.empty()) throw InputError("cannot classify an empty hand");
  return classify(hand.total(), hand.count());
}

}  // namespace einz
