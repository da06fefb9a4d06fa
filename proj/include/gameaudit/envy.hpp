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

#ifndef GAMEAUDIT_ENVY_HPP
#define GAMEAUDIT_ENVY_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gameaudit/bimatrix.hpp"
#include "gameaudit/equilibrium.hpp"

namespace gameaudit {

// Two symmetric firms choosing between investing at home ("stays home") and
// relocating production ("invests abroad"). Staying coordinated pays (4,4);
// defecting alone pays 3 against the defectee's 2; mutual defection pays
// (2,2). Rows are firm B, columns are firm A, cells are (B's payoff, A's
// payoff).
inline BimatrixGame investment_game() {
  return BimatrixGame({"stays home", "invests abroad"}, {"stays home", "invests abroad"},
                      {{4.0, 4.0}, {2.0, 3.0}, {3.0, 2.0}, {2.0, 2.0}});
}

// Envy adjustment of the investment game. A firm that invests abroad while
// the other stays enjoys the rival's loss (+alpha or +delta on top of 3)
// and the one left behind resents it (-beta or -gamma off its 2). All four
// parameters are nonnegative; alpha/beta apply when A defects, delta/gamma
// when B defects.
struct EnvyParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

inline void validate(const EnvyParams& p) {
  for (double v : {p.alpha, p.beta, p.gamma, p.delta})
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("envy parameters must be finite and nonnegative");
}

inline BimatrixGame apply_envy(const EnvyParams& p) {
  validate(p);
  return BimatrixGame({"stays home", "invests abroad"}, {"stays home", "invests abroad"},
                      {{4.0, 4.0},
                       {2.0 - p.beta, 3.0 + p.alpha},
                       {3.0 + p.delta, 2.0 - p.gamma},
                       {2.0, 2.0}});
}

// Equilibrium structure of an envy-adjusted game. `payoff_dominant` is the
// first strict equilibrium whose payoff pair weakly beats every other
// strict equilibrium in both coordinates, when one exists.
struct EnvyClassification {
  std::vector<StrategyProfile> strict_nash;
  std::vector<StrategyProfile> weak_nash;
  std::optional<StrategyProfile> payoff_dominant;
};

inline EnvyClassification classify_envy_regime(const EnvyParams& params) {
  const BimatrixGame game = apply_envy(params);
  EnvyClassification out;
  out.strict_nash = enumerate_pure_nash(game, NashMode::Strict);
  out.weak_nash = enumerate_pure_nash(game, NashMode::Weak);
  for (const auto& cand : out.strict_nash) {
    bool dominant = true;
    for (const auto& other : out.strict_nash) {
      if (game.at(cand.row, cand.col).row < game.at(other.row, other.col).row ||
          game.at(cand.row, cand.col).col < game.at(other.row, other.col).col) {
        dominant = false;
        break;
      }
    }
    if (dominant) {
      out.payoff_dominant = cand;
      break;
    }
  }
  return out;
}

// Classifications along the symmetric slice alpha=beta=gamma=delta=eps for
// eps = 0, step, 2*step, ... up to 2 (inclusive). The grid value is
// computed as k*step, never by accumulation, so boundary points land where
// the caller expects.
inline std::vector<std::pair<double, EnvyClassification>> envy_threshold_sweep(double step) {
  if (!std::isfinite(step) || step <= 0.0 || step > 1.0)
    throw std::invalid_argument("sweep step must lie in (0, 1]");
  std::vector<std::pair<double, EnvyClassification>> out;
  for (std::size_t k = 0;; ++k) {
    const double eps = static_cast<double>(k) * step;
    if (eps > 2.0 + tol::tie) break;
    out.emplace_back(eps, classify_envy_regime({eps, eps, eps, eps}));
  }
  return out;
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_ENVY_HPP
