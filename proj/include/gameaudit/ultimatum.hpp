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

#ifndef GAMEAUDIT_ULTIMATUM_HPP
#define GAMEAUDIT_ULTIMATUM_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gameaudit/detail/text.hpp"
#include "gameaudit/numeric.hpp"

namespace gameaudit {

// Ultimatum game with a random responder: the proposer splits `total` into
// an offer from {offer_step, 2*offer_step, ..., total - offer_step}; the
// responder accepts exactly when the offer reaches their private threshold,
// drawn from a known distribution over integers in [0, total]. On
// rejection both sides get nothing.
class UltimatumInstance {
 public:
  UltimatumInstance(int total, int offer_step, std::vector<std::pair<int, double>> threshold_probs)
      : total_(total), offer_step_(offer_step) {
    if (total <= 0) throw std::invalid_argument("total must be positive");
    if (offer_step <= 0) throw std::invalid_argument("offer step must be positive");
    if (total % offer_step != 0) throw std::invalid_argument("offer step must divide the total");
    if (total == offer_step) throw std::invalid_argument("no admissible offers: step equals total");
    if (threshold_probs.empty()) throw std::invalid_argument("threshold distribution is empty");
    std::sort(threshold_probs.begin(), threshold_probs.end());
    double sum = 0.0;
    for (const auto& [t, p] : threshold_probs) {
      if (t < 0 || t > total) throw std::invalid_argument("threshold outside [0, total]");
      if (!std::isfinite(p) || p < 0.0) throw std::invalid_argument("probabilities must be nonnegative");
      sum += p;
      if (!thresholds_.empty() && thresholds_.back().first == t)
        thresholds_.back().second += p;
      else
        thresholds_.emplace_back(t, p);
    }
    if (std::fabs(sum - 1.0) > tol::probability)
      throw std::invalid_argument("threshold probabilities must sum to 1");
  }

  int total() const { return total_; }
  int offer_step() const { return offer_step_; }
  const std::vector<std::pair<int, double>>& thresholds() const { return thresholds_; }

  // P(threshold <= offer): the acceptance probability of `offer`.
  double accept_probability(int offer) const {
    double acc = 0.0;
    for (const auto& [t, p] : thresholds_) {
      if (t > offer) break;
      acc += p;
    }
    return acc;
  }

 private:
  int total_;
  int offer_step_;
  std::vector<std::pair<int, double>> thresholds_;  // sorted, duplicates merged
};

struct UltimatumOffer {
  int offer = 0;
  double proposer_expected = 0.0;
  double accept_probability = 0.0;
};

// The offer maximizing the proposer's expected payoff (total - offer) *
// P(accept). Ties go to the smaller offer.
inline UltimatumOffer ultimatum_optimal_offer(const UltimatumInstance& inst) {
  UltimatumOffer best;
  bool first = true;
  for (int offer = inst.offer_step(); offer <= inst.total() - inst.offer_step();
       offer += inst.offer_step()) {
    const double p = inst.accept_probability(offer);
    const double expected = static_cast<double>(inst.total() - offer) * p;
    if (first || expected > best.proposer_expected) {
      best = {offer, expected, p};
      first = false;
    }
  }
  return best;
}

// CSV rows "threshold,probability" with an optional literal header line.
// Probability mass that misses 1 by at most 1e-6 is renormalized; anything
// further off is rejected.
inline std::vector<std::pair<int, double>> parse_threshold_csv(std::istream& in,
                                                               std::string_view source) {
  std::vector<std::pair<int, double>> out;
  std::string line;
  std::size_t line_no = 0;
  double sum = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (line_no == 1 && t == "threshold,probability") continue;
    auto parts = detail::split(t, ',');
    if (parts.size() != 2) detail::fail_at(source, line_no, "expected 'threshold,probability'");
    auto thr = detail::parse_int(parts[0]);
    auto prob = detail::parse_double(parts[1]);
    if (!thr) detail::fail_at(source, line_no, "threshold must be an integer");
    if (!prob || *prob < 0.0) detail::fail_at(source, line_no, "probability must be a nonnegative number");
    out.emplace_back(static_cast<int>(*thr), *prob);
    sum += *prob;
  }
  if (out.empty()) detail::fail_at(source, line_no, "no threshold rows found");
  if (std::fabs(sum - 1.0) > 1e-6)
    detail::fail_at(source, line_no,
                    "probabilities sum to " + format_significant(sum, 17) + ", expected 1 within 1e-6");
  for (auto& [t, p] : out) p /= sum;
  return out;
}

inline std::vector<std::pair<int, double>> load_threshold_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_threshold_csv(in, path.string());
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_ULTIMATUM_HPP
