#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einz/exact.hpp"

namespace einz {

/// One of the six canonical result tables, recomputed by the engine.
///   1, 2: outcome probabilities by card count, standing on 17 / 18
///   3:    two-player open game, every pairing of stand-17 and stand-18
///   4:    stood-score distribution given the card count, both policies
///   5:    two stood stand-17 players holding k and l cards
///   6:    expected final score by card count, with and without einz
struct Table {
  struct Row {
    std::string label;
    std::vector<std::optional<Rational>> cells;
  };

  int id = 0;
  int decks = 1;
  std::string title;
  std::string corner;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  /// Extra named values that are not part of the grid (bust rates).
  std::vector<std::pair<std::string, Rational>> extras;

  const Row& row(const std::string& label) const;
  /// Cell by row label and column header; throws std::out_of_range.
  const Rational& at(const std::string& row_label, const std::string& column) const;
};

inline constexpr int kTableCount = 6;

/// Throws InputError for an id outside 1..6.
Table make_table(int id, int decks = 1, const EngineOptions& options = {});

enum class Format { Text, Csv, Json };

Format parse_format(std::string_view text);

struct OutputSpec {
  Format format = Format::Text;
  /// Digits after the decimal point, 1..12.
  int precision = 3;
  bool exact_fractions = false;

  void validate() const;
};

std::string render(const Table& table, const OutputSpec& out);

}  // namespace einz
