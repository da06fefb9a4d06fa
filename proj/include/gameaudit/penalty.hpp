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

#ifndef GAMEAUDIT_PENALTY_HPP
#define GAMEAUDIT_PENALTY_HPP

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gameaudit/bimatrix.hpp"
#include "gameaudit/detail/text.hpp"

namespace gameaudit {

// Penalty kick in strategic form. Entry (keeper, shooter) is the goal
// probability when the keeper dives `keeper` and the shooter aims
// `shooter`. The keeper scores 1 - p (save), the shooter scores p, so the
// induced bimatrix game is constant-sum with sum 1.
class PenaltyGame {
 public:
  static constexpr std::size_t size = 3;

  explicit PenaltyGame(const std::array<double, size * size>& goal_prob) : goal_prob_(goal_prob) {
    for (double p : goal_prob_) check_probability(p);
  }

  double at(std::size_t keeper, std::size_t shooter) const {
    check_index(keeper, shooter);
    return goal_prob_[keeper * size + shooter];
  }

  void set(std::size_t keeper, std::size_t shooter, double p) {
    check_index(keeper, shooter);
    check_probability(p);
    goal_prob_[keeper * size + shooter] = p;
  }

  static const std::array<std::string, size>& keeper_labels() {
    static const std::array<std::string, size> labels = {"left", "straight", "right"};
    return labels;
  }

  static const std::array<std::string, size>& shooter_labels() {
    static const std::array<std::string, size> labels = {"left", "middle", "right"};
    return labels;
  }

  // Idealized baseline: the shot scores unless the keeper picks the
  // matching zone.
  static PenaltyGame diagonal_save() {
    return PenaltyGame({0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0});
  }

 private:
  static void check_probability(double p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
      throw std::invalid_argument("goal probabilities must lie in [0, 1]");
  }
  static void check_index(std::size_t keeper, std::size_t shooter) {
    if (keeper >= size || shooter >= size) throw std::out_of_range("penalty entry index out of range");
  }

  std::array<double, size * size> goal_prob_;
};

// Keeper is the row player (payoff 1 - p), shooter the column player
// (payoff p).
inline BimatrixGame to_bimatrix(const PenaltyGame& g) {
  std::vector<std::string> rl(PenaltyGame::keeper_labels().begin(), PenaltyGame::keeper_labels().end());
  std::vector<std::string> cl(PenaltyGame::shooter_labels().begin(), PenaltyGame::shooter_labels().end());
  std::vector<PayoffPair> cells;
  for (std::size_t r = 0; r < PenaltyGame::size; ++r)
    for (std::size_t c = 0; c < PenaltyGame::size; ++c)
      cells.push_back({1.0 - g.at(r, c), g.at(r, c)});
  return BimatrixGame(std::move(rl), std::move(cl), std::move(cells));
}

// Text format: three data lines of three goal probabilities, keeper rows
// top to bottom (left, straight, right), shooter columns left to right
// (left, middle, right). '#' lines and blank lines are ignored.
inline PenaltyGame parse_penalty_game(std::istream& in, std::string_view source) {
  std::array<double, 9> p{};
  std::size_t rows_seen = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (rows_seen == 3) detail::fail_at(source, line_no, "unexpected content after the third row");
    auto f = detail::fields(t);
    if (f.size() != 3) detail::fail_at(source, line_no, "expected 3 goal probabilities");
    for (std::size_t c = 0; c < 3; ++c) {
      auto v = detail::parse_double(f[c]);
      if (!v || *v < 0.0 || *v > 1.0)
        detail::fail_at(source, line_no, "goal probability must be a number in [0, 1]");
      p[rows_seen * 3 + c] = *v;
    }
    ++rows_seen;
  }
  if (rows_seen != 3)
    detail::fail_at(source, line_no, "expected 3 rows of goal probabilities, found " + std::to_string(rows_seen));
  return PenaltyGame(p);
}

inline PenaltyGame load_penalty_game(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_penalty_game(in, path.string());
}

inline std::string serialize_penalty_game(const PenaltyGame& g) {
  std::ostringstream out;
  out << "# rows: keeper left, straight, right; cols: shot left, middle, right\n";
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (c) out << " ";
      out << format_exact(g.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

// Maps a keeper-zone name or digit to a row index.
inline std::size_t parse_keeper_zone(std::string_view tok, std::string_view source, std::size_t line_no) {
  for (std::size_t i = 0; i < 3; ++i)
    if (tok == PenaltyGame::keeper_labels()[i]) return i;
  auto v = detail::parse_int(tok);
  if (v && *v >= 0 && *v < 3) return static_cast<std::size_t>(*v);
  detail::fail_at(source, line_no, "keeper zone must be left/straight/right or 0..2");
}

inline std::size_t parse_shot_zone(std::string_view tok, std::string_view source, std::size_t line_no) {
  for (std::size_t i = 0; i < 3; ++i)
    if (tok == PenaltyGame::shooter_labels()[i]) return i;
  auto v = detail::parse_int(tok);
  if (v && *v >= 0 && *v < 3) return static_cast<std::size_t>(*v);
  detail::fail_at(source, line_no, "shot zone must be left/middle/right or 0..2");
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_PENALTY_HPP
