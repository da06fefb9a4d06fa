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

#ifndef GAMEAUDIT_REGIME_HPP
#define GAMEAUDIT_REGIME_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gameaudit/detail/text.hpp"
#include "gameaudit/equilibrium.hpp"
#include "gameaudit/penalty.hpp"

namespace gameaudit {

inline std::string_view to_string(IndifferenceStatus s) {
  switch (s) {
    case IndifferenceStatus::Valid: return "Valid";
    case IndifferenceStatus::Invalid: return "Invalid";
    case IndifferenceStatus::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

// One goal-probability entry of the penalty table, by index.
struct VariedEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const VariedEntry&, const VariedEntry&) = default;
};

inline std::string entry_label(const VariedEntry& e) {
  return "(" + PenaltyGame::keeper_labels()[e.row] + "," + PenaltyGame::shooter_labels()[e.col] + ")";
}

// Classifies the full-support indifference system of a penalty game.
inline IndifferenceSolution classify_penalty(const PenaltyGame& g) {
  return full_support_indifference(to_bimatrix(g));
}

// Classification raster over two varied entries. values1/values2 hold the
// lattice coordinates k/(resolution-1); cell (i1, i2) is stored at index
// i1 * resolution + i2.
struct RegimeGrid {
  VariedEntry entry1, entry2;
  std::size_t resolution = 0;
  std::vector<double> values1, values2;
  std::vector<IndifferenceStatus> cells;

  IndifferenceStatus at(std::size_t i1, std::size_t i2) const { return cells[i1 * resolution + i2]; }

  std::size_t count(IndifferenceStatus s) const {
    std::size_t n = 0;
    for (auto c : cells) n += c == s;
    return n;
  }

  double fraction(IndifferenceStatus s) const {
    return static_cast<double>(count(s)) / static_cast<double>(cells.size());
  }
};

inline RegimeGrid sweep_regime(const PenaltyGame& base, VariedEntry e1, VariedEntry e2,
                               std::size_t resolution) {
  if (e1 == e2) throw std::invalid_argument("the two varied entries must differ");
  if (e1.row >= 3 || e1.col >= 3 || e2.row >= 3 || e2.col >= 3)
    throw std::out_of_range("varied entry index out of range");
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  RegimeGrid grid;
  grid.entry1 = e1;
  grid.entry2 = e2;
  grid.resolution = resolution;
  for (std::size_t k = 0; k < resolution; ++k) {
    const double v = static_cast<double>(k) / static_cast<double>(resolution - 1);
    grid.values1.push_back(v);
    grid.values2.push_back(v);
  }
  grid.cells.reserve(resolution * resolution);
  PenaltyGame g = base;
  for (std::size_t i1 = 0; i1 < resolution; ++i1) {
    g.set(e1.row, e1.col, grid.values1[i1]);
    for (std::size_t i2 = 0; i2 < resolution; ++i2) {
      g.set(e2.row, e2.col, grid.values2[i2]);
      grid.cells.push_back(classify_penalty(g).status);
    }
  }
  return grid;
}

// CSV rows "v1,v2,class", entry1 outer loop ascending, entry2 inner.
inline void write_regime_csv(const RegimeGrid& grid, std::ostream& out) {
  out << "v1,v2,class\n";
  for (std::size_t i1 = 0; i1 < grid.resolution; ++i1)
    for (std::size_t i2 = 0; i2 < grid.resolution; ++i2)
      out << format_significant(grid.values1[i1]) << "," << format_significant(grid.values2[i2]) << ","
          << to_string(grid.at(i1, i2)) << "\n";
}

// Plain-text PGM (P2). entry1 grows to the right, entry2 grows upward, so
// image row 0 holds the maximum entry2 value. Valid=255, Degenerate=128,
// Invalid=0.
inline void write_regime_pgm(const RegimeGrid& grid, std::ostream& out) {
  out << "P2\n";
  out << "# x: " << entry_label(grid.entry1) << " 0..1 left to right; y: " << entry_label(grid.entry2)
      << " 0..1 bottom to top\n";
  out << "# gray: Valid=255 Degenerate=128 Invalid=0\n";
  out << grid.resolution << " " << grid.resolution << "\n255\n";
  for (std::size_t r = 0; r < grid.resolution; ++r) {
    const std::size_t i2 = grid.resolution - 1 - r;
    for (std::size_t i1 = 0; i1 < grid.resolution; ++i1) {
      if (i1) out << " ";
      switch (grid.at(i1, i2)) {
        case IndifferenceStatus::Valid: out << 255; break;
        case IndifferenceStatus::Degenerate: out << 128; break;
        case IndifferenceStatus::Invalid: out << 0; break;
      }
    }
    out << "\n";
  }
}

// Distributions for Monte Carlo sampling of table entries. All mass must
// lie inside [0, 1]; the truncated normal resamples until it lands in
// [lo, hi].
struct PointMass {
  double value = 0.0;
};
struct UniformRange {
  double lo = 0.0, hi = 1.0;
};
struct TruncatedNormal {
  double mean = 0.5, sd = 0.1, lo = 0.0, hi = 1.0;
};
using EntryDistribution = std::variant<PointMass, UniformRange, TruncatedNormal>;

struct VariedParam {
  VariedEntry entry;
  EntryDistribution dist;
};

inline void validate(const EntryDistribution& d) {
  if (const auto* p = std::get_if<PointMass>(&d)) {
    if (!std::isfinite(p->value) || p->value < 0.0 || p->value > 1.0)
      throw std::invalid_argument("point mass must lie in [0, 1]");
  } else if (const auto* u = std::get_if<UniformRange>(&d)) {
    if (!std::isfinite(u->lo) || !std::isfinite(u->hi) || u->lo > u->hi || u->lo < 0.0 || u->hi > 1.0)
      throw std::invalid_argument("uniform range must satisfy 0 <= lo <= hi <= 1");
  } else if (const auto* t = std::get_if<TruncatedNormal>(&d)) {
    if (!std::isfinite(t->mean) || !std::isfinite(t->sd) || t->sd <= 0.0)
      throw std::invalid_argument("truncated normal needs finite mean and sd > 0");
    if (t->lo >= t->hi || t->lo < 0.0 || t->hi > 1.0)
      throw std::invalid_argument("truncated normal range must satisfy 0 <= lo < hi <= 1");
  }
}

namespace detail {

// Deterministic sampler: identical seeds yield identical draw sequences on
// every platform, since mt19937_64 and the conversions below are exactly
// specified.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : eng_(seed) {}

  double canonical() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double canonical_open() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53; }  // (0, 1)

  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

  double normal(double mean, double sd) {
    const double u1 = canonical_open();
    const double u2 = canonical();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  double draw(const EntryDistribution& d) {
    if (const auto* p = std::get_if<PointMass>(&d)) return p->value;
    if (const auto* u = std::get_if<UniformRange>(&d)) return uniform(u->lo, u->hi);
    const auto& t = std::get<TruncatedNormal>(d);
    for (int attempt = 0; attempt < 1000000; ++attempt) {
      const double v = normal(t.mean, t.sd);
      if (v >= t.lo && v <= t.hi) return v;
    }
    throw std::runtime_error("truncated normal: rejection sampling failed to land in range");
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace detail

// Distribution of classifications when table entries are random instead of
// fixed. The report deliberately separates the regimes: averaging a goal
// value across samples that live in different regimes is only meaningful
// when straddles_boundary is false, so that flag always travels with the
// numbers.
struct MonteCarloReport {
  std::size_t samples = 0;
  double fraction_valid = 0.0;
  double fraction_invalid = 0.0;
  double fraction_degenerate = 0.0;
  std::vector<double> mean_params;                  // empirical mean of each varied entry
  IndifferenceStatus classification_at_mean = IndifferenceStatus::Degenerate;
  std::optional<double> mean_value_over_valid;      // mean goal probability, Valid samples only
  bool straddles_boundary = false;
};

inline MonteCarloReport monte_carlo_regime(const PenaltyGame& base,
                                           const std::vector<VariedParam>& varied,
                                           std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  if (varied.empty() || varied.size() > 2)
    throw std::invalid_argument("exactly one or two entries can be varied");
  if (varied.size() == 2 && varied[0].entry == varied[1].entry)
    throw std::invalid_argument("the varied entries must differ");
  for (const auto& p : varied) {
    if (p.entry.row >= 3 || p.entry.col >= 3) throw std::out_of_range("varied entry index out of range");
    validate(p.dist);
  }

  detail::SampleSource rng(seed);
  MonteCarloReport report;
  report.samples = samples;
  report.mean_params.assign(varied.size(), 0.0);

  std::size_t n_valid = 0, n_invalid = 0, n_degenerate = 0;
  double value_sum = 0.0;
  PenaltyGame g = base;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < varied.size(); ++i) {
      const double v = rng.draw(varied[i].dist);
      report.mean_params[i] += v;
      g.set(varied[i].entry.row, varied[i].entry.col, v);
    }
    const IndifferenceSolution sol = classify_penalty(g);
    switch (sol.status) {
      case IndifferenceStatus::Valid: {
        ++n_valid;
        value_sum += expected_col_payoff(to_bimatrix(g), sol.row_weights, sol.col_weights);
        break;
      }
      case IndifferenceStatus::Invalid: ++n_invalid; break;
      case IndifferenceStatus::Degenerate: ++n_degenerate; break;
    }
  }

  for (double& v : report.mean_params) v /= static_cast<double>(samples);
  const double total = static_cast<double>(samples);
  report.fraction_valid = static_cast<double>(n_valid) / total;
  report.fraction_invalid = static_cast<double>(n_invalid) / total;
  report.fraction_degenerate = static_cast<double>(n_degenerate) / total;
  PenaltyGame at_mean = base;
  for (std::size_t i = 0; i < varied.size(); ++i)
    at_mean.set(varied[i].entry.row, varied[i].entry.col, report.mean_params[i]);
  report.classification_at_mean = classify_penalty(at_mean).status;
  if (n_valid > 0) report.mean_value_over_valid = value_sum / static_cast<double>(n_valid);
  report.straddles_boundary = n_valid > 0 && n_valid < samples;
  return report;
}

// Distribution file: one varied entry per line,
//
//   <keeperZone>,<shotZone> point <value>
//   <keeperZone>,<shotZone> uniform <lo> <hi>
//   <keeperZone>,<shotZone> normal <mean> <sd> <lo> <hi>
//
// where zones are names (straight,left) or indices (1,0). '#' lines and
// blank lines are ignored; at most two entries may be listed.
inline std::vector<VariedParam> parse_distribution_file(std::istream& in, std::string_view source) {
  std::vector<VariedParam> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto f = detail::fields(t);
    if (f.size() < 3) detail::fail_at(source, line_no, "expected '<entry> <kind> <params...>'");
    auto entry_parts = detail::split(f[0], ',');
    if (entry_parts.size() != 2)
      detail::fail_at(source, line_no, "entry must be '<keeperZone>,<shotZone>'");
    VariedEntry entry{parse_keeper_zone(detail::trim(entry_parts[0]), source, line_no),
                      parse_shot_zone(detail::trim(entry_parts[1]), source, line_no)};
    auto num = [&](std::size_t idx) {
      auto v = detail::parse_double(f[idx]);
      if (!v) detail::fail_at(source, line_no, "distribution parameters must be numbers");
      return *v;
    };
    EntryDistribution dist;
    if (f[1] == "point" && f.size() == 3) dist = PointMass{num(2)};
    else if (f[1] == "uniform" && f.size() == 4) dist = UniformRange{num(2), num(3)};
    else if (f[1] == "normal" && f.size() == 6) dist = TruncatedNormal{num(2), num(3), num(4), num(5)};
    else
      detail::fail_at(source, line_no,
                      "kind must be 'point <v>', 'uniform <lo> <hi>' or 'normal <mean> <sd> <lo> <hi>'");
    try {
      validate(dist);
    } catch (const std::invalid_argument& e) {
      detail::fail_at(source, line_no, e.what());
    }
    for (const auto& existing : out)
      if (existing.entry == entry) detail::fail_at(source, line_no, "entry listed twice");
    out.push_back({entry, dist});
    if (out.size() > 2) detail::fail_at(source, line_no, "at most two entries can be varied");
  }
  if (out.empty()) detail::fail_at(source, line_no, "no varied entries found");
  return out;
}

inline std::vector<VariedParam> load_distribution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_distribution_file(in, path.string());
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_REGIME_HPP
