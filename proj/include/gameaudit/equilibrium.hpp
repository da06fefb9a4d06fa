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

#ifndef GAMEAUDIT_EQUILIBRIUM_HPP
#define GAMEAUDIT_EQUILIBRIUM_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gameaudit/bimatrix.hpp"
#include "gameaudit/numeric.hpp"

namespace gameaudit {

// Weak: no unilateral deviation strictly gains. Strict: every unilateral
// deviation strictly loses.
enum class NashMode { Weak, Strict };

// Indices of `player`'s payoff-maximizing strategies against a fixed
// opponent choice. Ties within tol::tie are all reported, ascending.
inline std::vector<std::size_t> best_response(const BimatrixGame& game, Player player,
                                              std::size_t opponent_choice) {
  const std::size_t own_n = player == Player::Row ? game.rows() : game.cols();
  const std::size_t opp_n = player == Player::Row ? game.cols() : game.rows();
  if (opponent_choice >= opp_n) throw std::out_of_range("opponent strategy index out of range");
  auto payoff = [&](std::size_t i) {
    return player == Player::Row ? game.at(i, opponent_choice).row : game.at(opponent_choice, i).col;
  };
  double best = payoff(0);
  for (std::size_t i = 1; i < own_n; ++i) best = std::max(best, payoff(i));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < own_n; ++i)
    if (payoff(i) >= best - tol::tie) out.push_back(i);
  return out;
}

// All pure Nash equilibria, in row-major profile order.
inline std::vector<StrategyProfile> enumerate_pure_nash(const BimatrixGame& game, NashMode mode) {
  std::vector<StrategyProfile> out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      const double ur = game.at(r, c).row;
      const double uc = game.at(r, c).col;
      bool ok = true;
      for (std::size_t r2 = 0; ok && r2 < game.rows(); ++r2) {
        if (r2 == r) continue;
        const double alt = game.at(r2, c).row;
        ok = mode == NashMode::Weak ? alt <= ur + tol::tie : alt < ur - tol::tie;
      }
      for (std::size_t c2 = 0; ok && c2 < game.cols(); ++c2) {
        if (c2 == c) continue;
        const double alt = game.at(r, c2).col;
        ok = mode == NashMode::Weak ? alt <= uc + tol::tie : alt < uc - tol::tie;
      }
      if (ok) out.push_back({r, c});
    }
  }
  return out;
}

// A mixed-strategy solution of a constant-sum game. Both mixes are
// nonnegative and sum to one within tol::probability; `value` is the row
// player's expected payoff x' A y under the returned mixes.
struct MixedProfile {
  std::vector<double> row_mix;
  std::vector<double> col_mix;
  double value = 0.0;
};

inline double expected_row_payoff(const BimatrixGame& game, const std::vector<double>& row_mix,
                                  const std::vector<double>& col_mix) {
  if (row_mix.size() != game.rows() || col_mix.size() != game.cols())
    throw std::invalid_argument("mix length does not match game shape");
  double acc = 0.0;
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c) acc += row_mix[r] * col_mix[c] * game.at(r, c).row;
  return acc;
}

inline double expected_col_payoff(const BimatrixGame& game, const std::vector<double>& row_mix,
                                  const std::vector<double>& col_mix) {
  if (row_mix.size() != game.rows() || col_mix.size() != game.cols())
    throw std::invalid_argument("mix length does not match game shape");
  double acc = 0.0;
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c) acc += row_mix[r] * col_mix[c] * game.at(r, c).col;
  return acc;
}

namespace detail {

// Calls fn(combo) for every size-k subset of {0..n-1} in lexicographic order.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    if (fn(combo)) return;
    // Advance to the next combination.
    std::size_t i = k;
    while (i-- > 0) {
      if (combo[i] != i + n - k) {
        ++combo[i];
        for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace detail

// Minimax solution of a constant-sum game by square-kernel enumeration:
// for every pair of equal-size supports, solve the indifference system on
// that kernel and keep the first solution whose mixes are optimal against
// every pure strategy. Kernels are visited by increasing size, supports in
// lexicographic order, so the result is deterministic.
//
// Throws std::invalid_argument when the game is not constant-sum, naming
// the first offending cell.
inline MixedProfile solve_constant_sum_mixed(const BimatrixGame& game) {
  const double c0 = game.at(0, 0).row + game.at(0, 0).col;
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c) {
      const double s = game.at(r, c).row + game.at(r, c).col;
      if (std::fabs(s - c0) > tol::constant_sum)
        throw std::invalid_argument(
            "not a constant-sum game: cell (" + std::to_string(r) + "," + std::to_string(c) +
            ") sums to " + format_significant(s, 17) + " but cell (0,0) sums to " +
            format_significant(c0, 17));
    }

  const std::size_t m = game.rows(), n = game.cols();
  auto a = [&](std::size_t r, std::size_t c) { return game.at(r, c).row; };

  std::optional<MixedProfile> best;
  double best_violation = 0.0;

  auto consider = [&](const std::vector<std::size_t>& rows_in, const std::vector<std::size_t>& cols_in) {
    const std::size_t k = rows_in.size();
    // Row mix: indifference across kernel columns, plus normalization.
    std::vector<double> mat((k + 1) * (k + 1), 0.0), rhs(k + 1, 0.0);
    for (std::size_t jj = 0; jj < k; ++jj) {
      for (std::size_t ii = 0; ii < k; ++ii) mat[jj * (k + 1) + ii] = a(rows_in[ii], cols_in[jj]);
      mat[jj * (k + 1) + k] = -1.0;
    }
    for (std::size_t ii = 0; ii < k; ++ii) mat[k * (k + 1) + ii] = 1.0;
    rhs[k] = 1.0;
    auto row_sol = solve_linear(mat, rhs);
    if (!row_sol) return false;

    // Column mix: indifference across kernel rows, plus normalization.
    std::fill(mat.begin(), mat.end(), 0.0);
    std::fill(rhs.begin(), rhs.end(), 0.0);
    for (std::size_t ii = 0; ii < k; ++ii) {
      for (std::size_t jj = 0; jj < k; ++jj) mat[ii * (k + 1) + jj] = a(rows_in[ii], cols_in[jj]);
      mat[ii * (k + 1) + k] = -1.0;
    }
    for (std::size_t jj = 0; jj < k; ++jj) mat[k * (k + 1) + jj] = 1.0;
    rhs[k] = 1.0;
    auto col_sol = solve_linear(mat, rhs);
    if (!col_sol) return false;

    for (std::size_t i = 0; i < k; ++i)
      if ((*row_sol)[i] < -tol::probability || (*col_sol)[i] < -tol::probability) return false;

    std::vector<double> x(m, 0.0), y(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      x[rows_in[i]] = std::max(0.0, (*row_sol)[i]);
      y[cols_in[i]] = std::max(0.0, (*col_sol)[i]);
    }
    double sx = 0.0, sy = 0.0;
    for (double v : x) sx += v;
    for (double v : y) sy += v;
    for (double& v : x) v /= sx;
    for (double& v : y) v /= sy;

    double value = expected_row_payoff(game, x, y);
    // Optimality against every pure strategy, not just the kernel.
    double row_guarantee = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
      double acc = 0.0;
      for (std::size_t r = 0; r < m; ++r) acc += x[r] * a(r, c);
      row_guarantee = std::min(row_guarantee, acc);
    }
    double col_exposure = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += y[c] * a(r, c);
      col_exposure = std::max(col_exposure, acc);
    }
    const double violation = std::max({value - row_guarantee, col_exposure - value, 0.0});
    if (!best || violation < best_violation) {
      best = MixedProfile{std::move(x), std::move(y), value};
      best_violation = violation;
    }
    return violation <= tol::probability;
  };

  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    bool done = false;
    detail::for_each_combination(m, k, [&](const std::vector<std::size_t>& rows_in) {
      detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& cols_in) {
        done = consider(rows_in, cols_in);
        return done;
      });
      return done;
    });
    if (done) return *best;
  }
  if (best && best_violation <= tol::equilibrium) return *best;
  throw std::runtime_error("minimax kernel search found no optimal solution");
}

// Outcome of the square-game full-support indifference system.
//   Valid:      both weight vectors are probability vectors (within
//               tol::probability); they form a candidate interior solution.
//   Invalid:    the system solved but some weight leaves [0,1]; the weights
//               are reported as computed so the violation is visible.
//   Degenerate: the system is rank-deficient (pivot below tol::pivot);
//               both weight vectors are empty.
enum class IndifferenceStatus { Valid, Invalid, Degenerate };

struct IndifferenceSolution {
  IndifferenceStatus status = IndifferenceStatus::Degenerate;
  std::vector<double> row_weights;
  std::vector<double> col_weights;
};

// Solves the two full-support indifference systems of a square game: row
// weights make the column player indifferent across all columns (using the
// column player's payoffs), column weights make the row player indifferent
// across all rows. Requires a square game with at least two strategies.
inline IndifferenceSolution full_support_indifference(const BimatrixGame& game) {
  if (game.rows() != game.cols())
    throw std::invalid_argument("full-support indifference needs a square game, got " +
                                std::to_string(game.rows()) + "x" + std::to_string(game.cols()));
  const std::size_t n = game.rows();
  if (n < 2) throw std::invalid_argument("full-support indifference needs at least 2 strategies");

  // Row weights x: for every column j, sum_i colPayoff(i,j) x_i = v.
  std::vector<double> mat((n + 1) * (n + 1), 0.0), rhs(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) mat[j * (n + 1) + i] = game.at(i, j).col;
    mat[j * (n + 1) + n] = -1.0;
  }
  for (std::size_t i = 0; i < n; ++i) mat[n * (n + 1) + i] = 1.0;
  rhs[n] = 1.0;
  auto row_sol = solve_linear(mat, rhs);

  // Column weights y: for every row i, sum_j rowPayoff(i,j) y_j = w.
  std::fill(mat.begin(), mat.end(), 0.0);
  std::fill(rhs.begin(), rhs.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mat[i * (n + 1) + j] = game.at(i, j).row;
    mat[i * (n + 1) + n] = -1.0;
  }
  for (std::size_t j = 0; j < n; ++j) mat[n * (n + 1) + j] = 1.0;
  rhs[n] = 1.0;
  auto col_sol = solve_linear(mat, rhs);

  if (!row_sol || !col_sol) return {IndifferenceStatus::Degenerate, {}, {}};

  IndifferenceSolution out;
  out.row_weights.assign(row_sol->begin(), row_sol->begin() + static_cast<std::ptrdiff_t>(n));
  out.col_weights.assign(col_sol->begin(), col_sol->begin() + static_cast<std::ptrdiff_t>(n));
  auto is_probability = [](const std::vector<double>& w) {
    double sum = 0.0;
    for (double v : w) {
      if (v < -tol::probability || v > 1.0 + tol::probability) return false;
      sum += v;
    }
    return std::fabs(sum - 1.0) <= tol::probability;
  };
  out.status = is_probability(out.row_weights) && is_probability(out.col_weights)
                   ? IndifferenceStatus::Valid
                   : IndifferenceStatus::Invalid;
  return out;
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_EQUILIBRIUM_HPP
