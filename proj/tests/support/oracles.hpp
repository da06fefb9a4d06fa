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

// Test-only reference implementations. They share no code with the library
// paths they check: equilibria are found by direct definition scans and
// game values by brute-force simplex grids.

#ifndef GAMEAUDIT_TESTS_SUPPORT_ORACLES_HPP
#define GAMEAUDIT_TESTS_SUPPORT_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "gameaudit/bimatrix.hpp"

namespace gameaudit::testing {

// Every nonnegative integer composition of `total` into `parts` summands,
// in lexicographic order.
inline void for_each_composition(std::size_t total, std::size_t parts,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> counts(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t remaining) {
    if (idx + 1 == parts) {
      counts[idx] = remaining;
      fn(counts);
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      counts[idx] = k;
      rec(idx + 1, remaining - k);
    }
  };
  rec(0, total);
}

struct GridMinimax {
  double row_value = 0.0;  // max over row mixes of min over pure columns
  double col_value = 0.0;  // min over col mixes of max over pure rows
  std::vector<double> row_mix;
  std::vector<double> col_mix;
};

// Brute-force minimax of the row player's payoff table on a simplex grid
// of step 1/steps. First grid point attaining the optimum wins, so the
// result is deterministic.
inline GridMinimax grid_minimax(const BimatrixGame& game, std::size_t steps) {
  GridMinimax result;
  result.row_value = -std::numeric_limits<double>::infinity();
  result.col_value = std::numeric_limits<double>::infinity();
  const double inv = 1.0 / static_cast<double>(steps);

  for_each_composition(steps, game.rows(), [&](const std::vector<std::size_t>& counts) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < game.cols(); ++c) {
      double acc = 0.0;
      for (std::size_t r = 0; r < game.rows(); ++r)
        acc += static_cast<double>(counts[r]) * inv * game.at(r, c).row;
      worst = std::min(worst, acc);
    }
    if (worst > result.row_value) {
      result.row_value = worst;
      result.row_mix.clear();
      for (std::size_t r = 0; r < game.rows(); ++r)
        result.row_mix.push_back(static_cast<double>(counts[r]) * inv);
    }
  });

  for_each_composition(steps, game.cols(), [&](const std::vector<std::size_t>& counts) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < game.rows(); ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < game.cols(); ++c)
        acc += static_cast<double>(counts[c]) * inv * game.at(r, c).row;
      worst = std::max(worst, acc);
    }
    if (worst < result.col_value) {
      result.col_value = worst;
      result.col_mix.clear();
      for (std::size_t c = 0; c < game.cols(); ++c)
        result.col_mix.push_back(static_cast<double>(counts[c]) * inv);
    }
  });
  return result;
}

// Definition-level pure-NE scan, written independently of the library.
inline std::vector<StrategyProfile> brute_force_pure_nash(const BimatrixGame& game, bool strict) {
  std::vector<StrategyProfile> out;
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c) {
      bool is_eq = true;
      for (std::size_t r2 = 0; r2 < game.rows() && is_eq; ++r2) {
        if (r2 == r) continue;
        if (strict ? game.at(r2, c).row >= game.at(r, c).row
                   : game.at(r2, c).row > game.at(r, c).row)
          is_eq = false;
      }
      for (std::size_t c2 = 0; c2 < game.cols() && is_eq; ++c2) {
        if (c2 == c) continue;
        if (strict ? game.at(r, c2).col >= game.at(r, c).col
                   : game.at(r, c2).col > game.at(r, c).col)
          is_eq = false;
      }
      if (is_eq) out.push_back({r, c});
    }
  return out;
}

// Largest payoff improvement any pure unilateral deviation achieves against
// the given mixed profile; <= tolerance means (x, y) is an approximate
// equilibrium.
inline double equilibrium_gap(const BimatrixGame& game, const std::vector<double>& x,
                              const std::vector<double>& y) {
  double row_payoff = 0.0, col_payoff = 0.0;
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c) {
      row_payoff += x[r] * y[c] * game.at(r, c).row;
      col_payoff += x[r] * y[c] * game.at(r, c).col;
    }
  double gap = 0.0;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    double dev = 0.0;
    for (std::size_t c = 0; c < game.cols(); ++c) dev += y[c] * game.at(r, c).row;
    gap = std::max(gap, dev - row_payoff);
  }
  for (std::size_t c = 0; c < game.cols(); ++c) {
    double dev = 0.0;
    for (std::size_t r = 0; r < game.rows(); ++r) dev += x[r] * game.at(r, c).col;
    gap = std::max(gap, dev - col_payoff);
  }
  return gap;
}

inline double canonical(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Random 3x3 constant-sum game with sum 1: row payoff uniform in [0, 1],
// column payoff its complement.
inline BimatrixGame random_constant_sum_3x3(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<PayoffPair> cells;
  for (std::size_t i = 0; i < 9; ++i) {
    const double a = canonical(eng);
    cells.push_back({a, 1.0 - a});
  }
  return BimatrixGame::with_default_labels(3, 3, std::move(cells));
}

}  // namespace gameaudit::testing

#endif  // GAMEAUDIT_TESTS_SUPPORT_ORACLES_HPP
