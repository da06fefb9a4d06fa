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

#ifndef GAMEAUDIT_VALUATION_HPP
#define GAMEAUDIT_VALUATION_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gameaudit/detail/text.hpp"

namespace gameaudit {

// Options scored on several numeric criteria. values[option][criterion].
struct DecisionInstance {
  std::vector<std::string> option_labels;
  std::vector<std::string> criteria_labels;
  std::vector<std::vector<double>> values;
};

inline void validate(const DecisionInstance& inst) {
  if (inst.option_labels.size() < 2) throw std::invalid_argument("need at least two options");
  if (inst.criteria_labels.empty()) throw std::invalid_argument("need at least one criterion");
  if (inst.values.size() != inst.option_labels.size())
    throw std::invalid_argument("value rows do not match option count");
  for (const auto& row : inst.values) {
    if (row.size() != inst.criteria_labels.size())
      throw std::invalid_argument("value row length does not match criterion count");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("criterion values must be finite");
  }
}

struct RankedOption {
  std::size_t option = 0;
  double score = 0.0;
};

// Options sorted by descending score; equal scores keep option order.
inline std::vector<RankedOption> rank_by_sum(const DecisionInstance& inst) {
  validate(inst);
  std::vector<RankedOption> out;
  for (std::size_t o = 0; o < inst.values.size(); ++o) {
    double total = 0.0;
    for (double v : inst.values[o]) total += v;
    out.push_back({o, total});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedOption& a, const RankedOption& b) { return a.score > b.score; });
  return out;
}

// Nondecreasing piecewise-linear map, extended linearly beyond the first
// and last breakpoints. Breakpoint x values are strictly increasing and y
// values nondecreasing, so the map is monotone on all of R.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<std::pair<double, double>> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("need at least two breakpoints");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!std::isfinite(points_[i].first) || !std::isfinite(points_[i].second))
        throw std::invalid_argument("breakpoints must be finite");
      if (i > 0) {
        if (points_[i].first <= points_[i - 1].first)
          throw std::invalid_argument("breakpoint x values must be strictly increasing");
        if (points_[i].second < points_[i - 1].second)
          throw std::invalid_argument("breakpoint y values must be nondecreasing");
      }
    }
  }

  static PiecewiseLinear identity() { return PiecewiseLinear({{0.0, 0.0}, {1.0, 1.0}}); }

  // f(x) = w * x for w > 0.
  static PiecewiseLinear scale(double w) {
    if (!std::isfinite(w) || w <= 0.0) throw std::invalid_argument("scale weight must be positive");
    return PiecewiseLinear({{0.0, 0.0}, {1.0, w}});
  }

  double operator()(double x) const {
    std::size_t hi = points_.size() - 1;
    if (x <= points_.front().first) hi = 1;
    else if (x < points_.back().first) {
      hi = 1;
      while (points_[hi].first < x) ++hi;
    }
    const auto& [x0, y0] = points_[hi - 1];
    const auto& [x1, y1] = points_[hi];
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }

  const std::vector<std::pair<double, double>>& points() const { return points_; }

 private:
  std::vector<std::pair<double, double>> points_;
};

// One monotone map per criterion.
struct MonotoneTransform {
  std::vector<PiecewiseLinear> per_criterion;
};

inline MonotoneTransform identity_transform(std::size_t criteria) {
  MonotoneTransform t;
  for (std::size_t c = 0; c < criteria; ++c) t.per_criterion.push_back(PiecewiseLinear::identity());
  return t;
}

// Ranking after applying the transform criterion-wise and summing.
inline std::vector<RankedOption> rank_by_scores(const DecisionInstance& inst,
                                                const MonotoneTransform& transform) {
  validate(inst);
  if (transform.per_criterion.size() != inst.criteria_labels.size())
    throw std::invalid_argument("transform arity does not match criterion count");
  std::vector<RankedOption> out;
  for (std::size_t o = 0; o < inst.values.size(); ++o) {
    double total = 0.0;
    for (std::size_t c = 0; c < inst.values[o].size(); ++c)
      total += transform.per_criterion[c](inst.values[o][c]);
    out.push_back({o, total});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedOption& a, const RankedOption& b) { return a.score > b.score; });
  return out;
}

// Returned when no monotone rescoring can make the target the strict
// winner: some other option is at least as good on every criterion.
struct NoFlipPossible {
  std::size_t dominating_option = 0;
};

using FlipResult = std::variant<MonotoneTransform, NoFlipPossible>;

// Searches for a criterion-wise monotone transform under which `target`
// strictly wins the summed ranking. Such a transform exists exactly when no
// other option weakly dominates the target, and the construction below is
// explicit: each rival is beaten on one criterion where the target strictly
// leads, via a bounded step function worth 1 to the target and 0 to every
// rival assigned to that criterion. The result is self-checked with
// rank_by_scores before being returned.
inline FlipResult find_flipping_transform(const DecisionInstance& inst, std::size_t target) {
  validate(inst);
  if (target >= inst.option_labels.size()) throw std::invalid_argument("unknown target option index");
  const std::size_t n_opts = inst.values.size();
  const std::size_t n_crit = inst.criteria_labels.size();

  // Already a strict winner by plain sums: the identity transform does it.
  {
    auto ranking = rank_by_sum(inst);
    if (ranking[0].option == target && (ranking.size() < 2 || ranking[0].score > ranking[1].score))
      return identity_transform(n_crit);
  }

  for (std::size_t o = 0; o < n_opts; ++o) {
    if (o == target) continue;
    bool dominates = true;
    for (std::size_t c = 0; c < n_crit; ++c)
      if (inst.values[o][c] < inst.values[target][c]) {
        dominates = false;
        break;
      }
    if (dominates) return NoFlipPossible{o};
  }

  // Assign each rival to the first criterion where the target strictly
  // leads it; the step for that criterion rises from 0 to 1 strictly above
  // the best assigned rival.
  std::vector<double> step_below(n_crit);  // largest rival value mapped to 0, per criterion
  std::vector<bool> used(n_crit, false);
  for (std::size_t o = 0; o < n_opts; ++o) {
    if (o == target) continue;
    for (std::size_t c = 0; c < n_crit; ++c) {
      if (inst.values[target][c] > inst.values[o][c]) {
        if (!used[c] || inst.values[o][c] > step_below[c]) step_below[c] = inst.values[o][c];
        used[c] = true;
        break;
      }
    }
  }

  MonotoneTransform transform;
  for (std::size_t c = 0; c < n_crit; ++c) {
    const double t = inst.values[target][c];
    const double m = used[c] ? step_below[c] : t - 1.0;
    transform.per_criterion.push_back(PiecewiseLinear({{m - 1.0, 0.0}, {m, 0.0}, {t, 1.0}, {t + 1.0, 1.0}}));
  }

  auto ranking = rank_by_scores(inst, transform);
  if (ranking[0].option != target || ranking[0].score <= ranking[1].score)
    throw std::logic_error("flip construction failed its self-check");
  return transform;
}

// Whether positive per-criterion weights pick the same winner as plain
// sums. When they do not, `witness` holds (weighted winner, sum winner).
struct LinearInvarianceReport {
  bool preserves_argmax = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline LinearInvarianceReport check_linear_invariance(const DecisionInstance& inst,
                                                      const std::vector<double>& weights) {
  validate(inst);
  if (weights.size() != inst.criteria_labels.size())
    throw std::invalid_argument("weight count does not match criterion count");
  MonotoneTransform transform;
  for (double w : weights) transform.per_criterion.push_back(PiecewiseLinear::scale(w));
  const std::size_t sum_winner = rank_by_sum(inst)[0].option;
  const std::size_t weighted_winner = rank_by_scores(inst, transform)[0].option;
  if (sum_winner == weighted_winner) return {true, std::nullopt};
  return {false, std::make_pair(weighted_winner, sum_winner)};
}

// CSV with header "option,<criterion1>,...,<criterionK>" and one row per
// option.
inline DecisionInstance parse_decision_csv(std::istream& in, std::string_view source) {
  DecisionInstance inst;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto parts = detail::split(t, ',');
    if (!header_seen) {
      if (detail::trim(parts[0]) != "option")
        detail::fail_at(source, line_no, "header must start with 'option'");
      if (parts.size() < 2) detail::fail_at(source, line_no, "header lists no criteria");
      for (std::size_t i = 1; i < parts.size(); ++i) {
        auto name = detail::trim(parts[i]);
        if (name.empty()) detail::fail_at(source, line_no, "empty criterion name in header");
        inst.criteria_labels.emplace_back(name);
      }
      header_seen = true;
      continue;
    }
    if (parts.size() != inst.criteria_labels.size() + 1)
      detail::fail_at(source, line_no,
                      "expected " + std::to_string(inst.criteria_labels.size() + 1) + " fields, found " +
                          std::to_string(parts.size()));
    auto label = detail::trim(parts[0]);
    if (label.empty()) detail::fail_at(source, line_no, "empty option label");
    inst.option_labels.emplace_back(label);
    std::vector<double> row;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      auto v = detail::parse_double(parts[i]);
      if (!v) detail::fail_at(source, line_no, "criterion values must be numbers");
      row.push_back(*v);
    }
    inst.values.push_back(std::move(row));
  }
  if (!header_seen) detail::fail_at(source, line_no, "missing header row");
  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    detail::fail_at(source, line_no, e.what());
  }
  return inst;
}

inline DecisionInstance load_decision_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_decision_csv(in, path.string());
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_VALUATION_HPP
