// Copyright 2026 The gameaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEAUDIT_BIMATRIX_HPP
#define GAMEAUDIT_BIMATRIX_HPP

#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gameaudit/detail/text.hpp"
#include "gameaudit/numeric.hpp"

namespace gameaudit {

// One cell of a two-player game in strategic form: the row player's payoff
// and the column player's payoff.
struct PayoffPair {
  double row = 0.0;
  double col = 0.0;
  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

enum class Player { Row, Col };

// A pure-strategy profile, identified by row and column index.
struct StrategyProfile {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

// Finite two-player game in strategic form. Cells are stored row-major and
// every payoff is finite; labels never contain ',' so that serialized label
// lists stay parseable.
class BimatrixGame {
 public:
  BimatrixGame(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<PayoffPair> cells)
      : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), cells_(std::move(cells)) {
    if (row_labels_.empty() || col_labels_.empty())
      throw std::invalid_argument("game needs at least one row and one column strategy");
    if (cells_.size() != row_labels_.size() * col_labels_.size())
      throw std::invalid_argument("cell count does not match rows x cols");
    for (const auto& labels : {row_labels_, col_labels_})
      for (const auto& l : labels) {
        if (l.empty()) throw std::invalid_argument("strategy labels must be nonempty");
        if (l.find(',') != std::string::npos)
          throw std::invalid_argument("strategy labels must not contain ','");
      }
    for (const auto& cell : cells_)
      if (!std::isfinite(cell.row) || !std::isfinite(cell.col))
        throw std::invalid_argument("payoffs must be finite");
  }

  static BimatrixGame with_default_labels(std::size_t rows, std::size_t cols,
                                          std::vector<PayoffPair> cells) {
    std::vector<std::string> rl, cl;
    for (std::size_t r = 0; r < rows; ++r) rl.push_back("r" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) cl.push_back("c" + std::to_string(c));
    return BimatrixGame(std::move(rl), std::move(cl), std::move(cells));
  }

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }

  const PayoffPair& at(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols()) throw std::out_of_range("cell index out of range");
    return cells_[r * cols() + c];
  }

  double payoff(Player p, std::size_t r, std::size_t c) const {
    const PayoffPair& cell = at(r, c);
    return p == Player::Row ? cell.row : cell.col;
  }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  // The common payoff sum if every cell sums to the same constant within
  // `tolerance`, otherwise nullopt.
  std::optional<double> constant_sum(double tolerance = tol::constant_sum) const {
    const double c0 = cells_[0].row + cells_[0].col;
    for (const auto& cell : cells_)
      if (std::fabs(cell.row + cell.col - c0) > tolerance) return std::nullopt;
    return c0;
  }

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<PayoffPair> cells_;
};

// Text format for strategic-form games:
//
//   # rows: stays home, invests abroad     (optional label comments)
//   # cols: stays home, invests abroad
//   2 2                                    (rows cols)
//   4,4 2,3                                (one line per row; each cell
//   3,2 2,2                                 is rowPayoff,colPayoff)
//
// '#' lines and blank lines are ignored except for the label comments.
inline BimatrixGame parse_game(std::istream& in, std::string_view source) {
  std::optional<std::vector<std::string>> row_labels, col_labels;
  std::optional<std::size_t> rows, cols;
  std::vector<PayoffPair> cells;
  std::size_t data_rows_seen = 0;

  auto parse_label_list = [&](std::string_view rest, std::size_t line_no) {
    std::vector<std::string> labels;
    for (auto part : detail::split(rest, ',')) {
      auto t = detail::trim(part);
      if (t.empty()) detail::fail_at(source, line_no, "empty label in label comment");
      labels.emplace_back(t);
    }
    return labels;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      auto body = detail::trim(t.substr(1));
      if (body.rfind("rows:", 0) == 0) row_labels = parse_label_list(body.substr(5), line_no);
      else if (body.rfind("cols:", 0) == 0) col_labels = parse_label_list(body.substr(5), line_no);
      continue;
    }
    if (!rows) {
      auto f = detail::fields(t);
      if (f.size() != 2) detail::fail_at(source, line_no, "expected '<rows> <cols>'");
      auto r = detail::parse_int(f[0]), c = detail::parse_int(f[1]);
      if (!r || !c || *r <= 0 || *c <= 0)
        detail::fail_at(source, line_no, "row and column counts must be positive integers");
      rows = static_cast<std::size_t>(*r);
      cols = static_cast<std::size_t>(*c);
      continue;
    }
    if (data_rows_seen == *rows)
      detail::fail_at(source, line_no, "unexpected content after the last payoff row");
    auto f = detail::fields(t);
    if (f.size() != *cols)
      detail::fail_at(source, line_no,
                      "expected " + std::to_string(*cols) + " cells, found " + std::to_string(f.size()));
    for (auto cell : f) {
      auto parts = detail::split(cell, ',');
      if (parts.size() != 2)
        detail::fail_at(source, line_no, "cell must be '<rowPayoff>,<colPayoff>'");
      auto a = detail::parse_double(parts[0]), b = detail::parse_double(parts[1]);
      if (!a || !b) detail::fail_at(source, line_no, "payoffs must be finite numbers");
      cells.push_back({*a, *b});
    }
    ++data_rows_seen;
  }
  if (!rows) detail::fail_at(source, line_no, "missing '<rows> <cols>' header");
  if (data_rows_seen != *rows)
    detail::fail_at(source, line_no,
                    "expected " + std::to_string(*rows) + " payoff rows, found " + std::to_string(data_rows_seen));
  if (row_labels && row_labels->size() != *rows)
    detail::fail_at(source, line_no, "label comment lists " + std::to_string(row_labels->size()) +
                                         " rows, game has " + std::to_string(*rows));
  if (col_labels && col_labels->size() != *cols)
    detail::fail_at(source, line_no, "label comment lists " + std::to_string(col_labels->size()) +
                                         " cols, game has " + std::to_string(*cols));
  if (!row_labels) {
    row_labels.emplace();
    for (std::size_t r = 0; r < *rows; ++r) row_labels->push_back("r" + std::to_string(r));
  }
  if (!col_labels) {
    col_labels.emplace();
    for (std::size_t c = 0; c < *cols; ++c) col_labels->push_back("c" + std::to_string(c));
  }
  return BimatrixGame(std::move(*row_labels), std::move(*col_labels), std::move(cells));
}

inline BimatrixGame load_game(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_game(in, path.string());
}

// Serialization round-trips: parsing the output yields a game with identical
// labels and bit-identical cells.
inline std::string serialize_game(const BimatrixGame& game) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) s += ", ";
      s += labels[i];
    }
    return s;
  };
  out << "# rows: " << join(game.row_labels()) << "\n";
  out << "# cols: " << join(game.col_labels()) << "\n";
  out << game.rows() << " " << game.cols() << "\n";
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      if (c) out << " ";
      const auto& cell = game.at(r, c);
      out << format_exact(cell.row) << "," << format_exact(cell.col);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_BIMATRIX_HPP
