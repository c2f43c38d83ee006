#include "einz/tables.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "einz/errors.hpp"
#include "einz/matchup.hpp"

namespace einz {

const Table::Row& Table::row(const std::string& label) const {
  for (const auto& r : rows) {
    if (r.label == label) return r;
  }
  throw std::out_of_range("table " + std::to_string(id) + " has no row '" + label + "'");
}

const Rational& Table::at(const std::string& row_label, const std::string& column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) {
    throw std::out_of_range("table " + std::to_string(id) + " has no column '" + column + "'");
  }
  const auto& cell = row(row_label).cells[static_cast<std::size_t>(it - columns.begin())];
  if (!cell) throw std::out_of_range("empty cell " + row_label + "/" + column);
  return *cell;
}

namespace {

constexpr int kShownCards = 5;

Rational cell_mass(const OutcomeDistribution& d, int score, int cards) {
  return score == 0 ? d.einz_with(cards) : d.mass(Outcome::stood(score, cards));
}

Table outcome_table(int id, int threshold, int decks, const EngineOptions& options) {
  const auto dist = outcome_distribution(fresh_shoe(decks), stand_on(threshold), options);
  Table t;
  t.id = id;
  t.decks = decks;
  t.title = "Probabilities of scores between " + std::to_string(threshold) +
            " and einz for the player who always stands on " + std::to_string(threshold);
  t.corner = "cards / score";
  std::vector<int> scores;  // 0 stands for einz
  for (int s = threshold; s <= 20; ++s) {
    scores.push_back(s);
    t.columns.push_back(std::to_string(s));
  }
  scores.push_back(0);
  t.columns.push_back("einz");

  const int max_cards = dist.max_cards();
  for (int k = 2; k <= kShownCards; ++k) {
    Table::Row r{std::to_string(k), {}};
    for (int s : scores) r.cells.emplace_back(cell_mass(dist, s, k));
    t.rows.push_back(std::move(r));
  }
  Table::Row tail{">" + std::to_string(kShownCards), {}};
  Table::Row any{"any", {}};
  for (int s : scores) {
    Rational above = 0;
    Rational all = 0;
    for (int k = 2; k <= max_cards; ++k) {
      const Rational m = cell_mass(dist, s, k);
      all += m;
      if (k > kShownCards) above += m;
    }
    tail.cells.emplace_back(above);
    any.cells.emplace_back(all);
  }
  t.rows.push_back(std::move(tail));
  t.rows.push_back(std::move(any));
  t.extras.emplace_back("bust", dist.bust());
  t.extras.emplace_back(std::to_string(threshold) + " or better", Rational(1) - dist.bust());
  return t;
}

Table two_player_table(int decks, const EngineOptions& options) {
  const Shoe shoe = fresh_shoe(decks);
  const std::array<OutcomeDistribution, 2> d{outcome_distribution(shoe, stand_on(17), options),
                                             outcome_distribution(shoe, stand_on(18), options)};
  Table t;
  t.id = 3;
  t.decks = decks;
  t.title = "Probabilities in the game with two players with given strategies";
  t.corner = "result / stand on";
  t.rows = {{"player 1 wins", {}}, {"tied", {}}, {"player 2 wins", {}}};
  for (int a : {0, 1}) {
    for (int b : {0, 1}) {
      t.columns.push_back(std::to_string(17 + a) + " vs " + std::to_string(17 + b));
      const std::array<OutcomeDistribution, 2> seats{d[a], d[b]};
      const MatchResult r = open_match(seats);
      t.rows[0].cells.emplace_back(r.win[0]);
      t.rows[1].cells.emplace_back(r.tie);
      t.rows[2].cells.emplace_back(r.win[1]);
    }
  }
  return t;
}

Table conditional_table(int decks, const EngineOptions& options) {
  const Shoe shoe = fresh_shoe(decks);
  Table t;
  t.id = 4;
  t.decks = decks;
  t.title = "Probability of score if the player stands with k (k = 2..5) cards in the hand";
  t.corner = "policy: cards / score";
  t.columns = {"17", "18", "19", "20"};
  for (int threshold : {17, 18}) {
    const auto dist = outcome_distribution(shoe, stand_on(threshold), options);
    for (int k = 2; k <= kShownCards; ++k) {
      const ScoreDistribution cond = conditional_score_given_stand(dist, k);
      Table::Row r{"stand" + std::to_string(threshold) + ": " + std::to_string(k), {}};
      for (int s = 17; s <= 20; ++s) {
        if (s < threshold) {
          r.cells.emplace_back(std::nullopt);
          continue;
        }
        auto it = cond.find(s);
        r.cells.emplace_back(it == cond.end() ? Rational(0) : it->second);
      }
      t.rows.push_back(std::move(r));
    }
  }
  return t;
}

Table standing_table(int decks, const EngineOptions& options) {
  const auto dist = outcome_distribution(fresh_shoe(decks), stand_on(17), options);
  Table t;
  t.id = 5;
  t.decks = decks;
  t.title =
      "Two players who both stand on 17 and stood between 17 and 20, the first with k and the "
      "second with l cards";
  t.corner = "result / cards";
  t.rows = {{"player 1 wins", {}}, {"tied", {}}, {"player 2 wins", {}}};
  for (int k = 2; k <= kShownCards; ++k) {
    for (int l = k + 1; l <= kShownCards; ++l) {
      t.columns.push_back(std::to_string(k) + " vs " + std::to_string(l));
      const std::array<ScoreDistribution, 2> s{conditional_score_given_stand(dist, k),
                                               conditional_score_given_stand(dist, l)};
      const MatchResult r = standing_match(s);
      t.rows[0].cells.emplace_back(r.win[0]);
      t.rows[1].cells.emplace_back(r.tie);
      t.rows[2].cells.emplace_back(r.win[1]);
    }
  }
  return t;
}

Table expectation_table(int decks, const EngineOptions& options) {
  const Shoe shoe = fresh_shoe(decks);
  Table t;
  t.id = 6;
  t.decks = decks;
  t.title = "Average value of the high score achieved with k (2 <= k <= 5) cards";
  t.corner = "E / cards";
  t.columns = {"2", "3", "4", "5", "any"};
  for (int threshold : {17, 18}) {
    const auto dist = outcome_distribution(shoe, stand_on(threshold), options);
    for (bool einz : {false, true}) {
      Table::Row r{std::to_string(threshold) + (einz ? "-einz" : "-20"), {}};
      for (int k = 2; k <= kShownCards; ++k) r.cells.emplace_back(expected_score(dist, k, einz));
      r.cells.emplace_back(expected_score(dist, std::nullopt, einz));
      t.rows.push_back(std::move(r));
    }
  }
  return t;
}

std::string cell_text(const std::optional<Rational>& v, const OutputSpec& out) {
  if (!v) return "";
  std::string s = to_fixed(*v, out.precision);
  if (out.exact_fractions) s += " (" + to_fraction(*v) + ")";
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

nlohmann::ordered_json json_value(const Rational& v, const OutputSpec& out) {
  nlohmann::ordered_json j = std::stod(to_fixed(v, out.precision));
  if (!out.exact_fractions) return j;
  return nlohmann::ordered_json{{"value", j}, {"exact", to_fraction(v)}};
}

}  // namespace

Table make_table(int id, int decks, const EngineOptions& options) {
  switch (id) {
    case 1: return outcome_table(1, 17, decks, options);
    case 2: return outcome_table(2, 18, decks, options);
    case 3: return two_player_table(decks, options);
    case 4: return conditional_table(decks, options);
    case 5: return standing_table(decks, options);
    case 6: return expectation_table(decks, options);
    default: throw InputError("unknown table id " + std::to_string(id) + " (expected 1..6)");
  }
}

Format parse_format(std::string_view text) {
  if (text == "table" || text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InputError("unknown format '" + std::string(text) + "' (csv, json, table)");
}

void OutputSpec::validate() const {
  if (precision < 1 || precision > 12) throw InputError("precision must be in [1, 12]");
}

std::string render(const Table& table, const OutputSpec& out) {
  out.validate();
  std::ostringstream os;
  switch (out.format) {
    case Format::Csv: {
      os << csv_escape(table.corner);
      for (const auto& c : table.columns) os << ',' << csv_escape(c);
      os << '\n';
      for (const auto& r : table.rows) {
        os << csv_escape(r.label);
        for (const auto& v : r.cells) os << ',' << cell_text(v, out);
        os << '\n';
      }
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json j;
      j["table"] = table.id;
      j["title"] = table.title;
      j["decks"] = table.decks;
      j["columns"] = table.columns;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["label"] = r.label;
        auto cells = nlohmann::ordered_json::array();
        for (const auto& v : r.cells) cells.push_back(v ? json_value(*v, out) : nullptr);
        row["cells"] = std::move(cells);
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      nlohmann::ordered_json extras = nlohmann::ordered_json::object();
      for (const auto& [name, v] : table.extras) extras[name] = json_value(v, out);
      j["extras"] = std::move(extras);
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> grid;
      grid.push_back({table.corner});
      for (const auto& c : table.columns) grid.back().push_back(c);
      for (const auto& r : table.rows) {
        grid.push_back({r.label});
        for (const auto& v : r.cells) grid.back().push_back(cell_text(v, out));
      }
      std::vector<std::size_t> width(grid.front().size(), 0);
      for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
      }
      os << "Table " << table.id << ": " << table.title << " (" << table.decks
         << (table.decks == 1 ? " deck)" : " decks)") << '\n';
      for (const auto& line : grid) {
        std::string row;
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i > 0) row += "  ";
          row += line[i] + std::string(width[i] - line[i].size(), ' ');
        }
        row.erase(row.find_last_not_of(' ') + 1);
        os << row << '\n';
      }
      for (const auto& [name, v] : table.extras) os << name << ": " << cell_text(v, out) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace einz
