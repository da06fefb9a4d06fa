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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "gameaudit/envy.hpp"
#include "gameaudit/ultimatum.hpp"
#include "support/oracles.hpp"

using namespace gameaudit;
namespace oracle = gameaudit::testing;

namespace {

bool contains(const std::vector<StrategyProfile>& v, StrategyProfile p) {
  for (const auto& q : v)
    if (q == p) return true;
  return false;
}

}  // namespace

TEST_CASE("zero envy reproduces the plain investment game", "[envy]") {
  const BimatrixGame base = investment_game();
  const BimatrixGame zero = apply_envy({0.0, 0.0, 0.0, 0.0});
  REQUIRE(zero.rows() == base.rows());
  REQUIRE(zero.cols() == base.cols());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(zero.at(r, c) == base.at(r, c));
  CHECK(zero.row_labels() == base.row_labels());
  CHECK(zero.col_labels() == base.col_labels());
}

TEST_CASE("symmetric envy of 1.5 flips the off-diagonal cells", "[envy]") {
  const BimatrixGame g = apply_envy({1.5, 1.5, 1.5, 1.5});
  // Lone defector enjoys 4.5; the firm left behind drops to 0.5.
  CHECK(g.at(0, 1) == PayoffPair{0.5, 4.5});
  CHECK(g.at(1, 0) == PayoffPair{4.5, 0.5});
  CHECK(g.at(0, 0) == PayoffPair{4.0, 4.0});
  CHECK(g.at(1, 1) == PayoffPair{2.0, 2.0});
}

TEST_CASE("each envy parameter moves exactly one payoff entry", "[envy][property]") {
  std::mt19937_64 eng(424242);
  auto draw = [&] { return 3.0 * oracle::canonical(eng); };
  for (int trial = 0; trial < 100; ++trial) {
    const EnvyParams p{draw(), draw(), draw(), draw()};
    const double h = draw();
    const BimatrixGame base = apply_envy(p);

    const BimatrixGame da = apply_envy({p.alpha + h, p.beta, p.gamma, p.delta});
    CHECK(da.at(0, 1).col == Catch::Approx(base.at(0, 1).col + h));
    CHECK(da.at(0, 1).row == base.at(0, 1).row);
    CHECK(da.at(1, 0) == base.at(1, 0));

    const BimatrixGame db = apply_envy({p.alpha, p.beta + h, p.gamma, p.delta});
    CHECK(db.at(0, 1).row == Catch::Approx(base.at(0, 1).row - h));
    CHECK(db.at(0, 1).col == base.at(0, 1).col);

    const BimatrixGame dg = apply_envy({p.alpha, p.beta, p.gamma + h, p.delta});
    CHECK(dg.at(1, 0).col == Catch::Approx(base.at(1, 0).col - h));
    CHECK(dg.at(1, 0).row == base.at(1, 0).row);

    const BimatrixGame dd = apply_envy({p.alpha, p.beta, p.gamma, p.delta + h});
    CHECK(dd.at(1, 0).row == Catch::Approx(base.at(1, 0).row + h));
    CHECK(dd.at(1, 0).col == base.at(1, 0).col);

    // Diagonal cells never move.
    CHECK(da.at(0, 0) == base.at(0, 0));
    CHECK(db.at(1, 1) == base.at(1, 1));
  }
}

TEST_CASE("envy parameters must be finite and nonnegative", "[envy]") {
  CHECK_THROWS_AS(apply_envy({-0.1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_envy({0, 0, -2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_envy({0, std::numeric_limits<double>::quiet_NaN(), 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_envy({0, 0, 0, std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
}

TEST_CASE("regime classification at the three reference parameter points", "[envy]") {
  const auto strong = classify_envy_regime({1.5, 1.5, 1.5, 1.5});
  REQUIRE(strong.strict_nash.size() == 1);
  CHECK(strong.strict_nash[0] == StrategyProfile{1, 1});
  CHECK_FALSE(contains(strong.weak_nash, {0, 0}));
  REQUIRE(strong.payoff_dominant.has_value());
  CHECK(*strong.payoff_dominant == StrategyProfile{1, 1});

  const auto none = classify_envy_regime({0, 0, 0, 0});
  REQUIRE(none.strict_nash.size() == 1);
  CHECK(none.strict_nash[0] == StrategyProfile{0, 0});
  CHECK(contains(none.weak_nash, {1, 1}));
  CHECK(none.weak_nash.size() == 2);

  const auto mild = classify_envy_regime({0.5, 0.5, 0.5, 0.5});
  REQUIRE(mild.strict_nash.size() == 2);
  CHECK(mild.strict_nash[0] == StrategyProfile{0, 0});
  CHECK(mild.strict_nash[1] == StrategyProfile{1, 1});
  REQUIRE(mild.payoff_dominant.has_value());
  CHECK(*mild.payoff_dominant == StrategyProfile{0, 0});
}

TEST_CASE("regime classification equals a brute-force deviation scan", "[envy][property]") {
  std::mt19937_64 eng(8675309);
  auto draw = [&] { return 3.0 * oracle::canonical(eng); };
  for (int trial = 0; trial < 1000; ++trial) {
    const EnvyParams p{draw(), draw(), draw(), draw()};
    const auto cls = classify_envy_regime(p);
    const BimatrixGame g = apply_envy(p);
    const auto strict_ref = oracle::brute_force_pure_nash(g, true);
    const auto weak_ref = oracle::brute_force_pure_nash(g, false);
    INFO("trial " << trial);
    REQUIRE(cls.strict_nash.size() == strict_ref.size());
    for (std::size_t i = 0; i < strict_ref.size(); ++i) CHECK(cls.strict_nash[i] == strict_ref[i]);
    REQUIRE(cls.weak_nash.size() == weak_ref.size());
    for (std::size_t i = 0; i < weak_ref.size(); ++i) CHECK(cls.weak_nash[i] == weak_ref[i]);
  }
}

TEST_CASE("regime law: coordination survives weakly iff alpha and delta stay at most 1",
          "[envy][property]") {
  std::mt19937_64 eng(1123581321);
  auto draw = [&] { return 3.0 * oracle::canonical(eng); };
  for (int trial = 0; trial < 1000; ++trial) {
    const EnvyParams p{draw(), draw(), draw(), draw()};
    const auto cls = classify_envy_regime(p);
    INFO("alpha=" << p.alpha << " beta=" << p.beta << " gamma=" << p.gamma << " delta=" << p.delta);
    CHECK(contains(cls.weak_nash, {0, 0}) == (p.alpha <= 1.0 && p.delta <= 1.0));
    CHECK(contains(cls.strict_nash, {1, 1}) == (p.beta > 0.0 && p.gamma > 0.0));
  }
  // Boundary cases the random draws cannot hit.
  CHECK(contains(classify_envy_regime({1, 0, 0, 1}).weak_nash, {0, 0}));
  CHECK_FALSE(contains(classify_envy_regime({1, 0, 0, 1}).strict_nash, {0, 0}));
  CHECK_FALSE(contains(classify_envy_regime({1.01, 0, 0, 0}).weak_nash, {0, 0}));
  CHECK_FALSE(contains(classify_envy_regime({0, 0, 0, 1.01}).weak_nash, {0, 0}));
  CHECK_FALSE(contains(classify_envy_regime({0, 0, 1, 0}).strict_nash, {1, 1}));
}

TEST_CASE("symmetric sweep walks the grid and flags the boundary", "[envy]") {
  const auto sweep = envy_threshold_sweep(0.25);
  REQUIRE(sweep.size() == 9);  // 0, 0.25, ..., 2.0
  CHECK(sweep.front().first == 0.0);
  CHECK(sweep.back().first == 2.0);
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    const double eps = sweep[k].first;
    const auto& cls = sweep[k].second;
    CHECK(eps == Catch::Approx(0.25 * static_cast<double>(k)));
    CHECK(contains(cls.weak_nash, {0, 0}) == (eps <= 1.0));
    CHECK(contains(cls.strict_nash, {1, 1}) == (eps > 0.0));
  }
  // Exactly at the boundary coordination is weak but no longer strict.
  const auto& at_one = sweep[4].second;
  CHECK(contains(at_one.weak_nash, {0, 0}));
  CHECK_FALSE(contains(at_one.strict_nash, {0, 0}));

  CHECK_THROWS_AS(envy_threshold_sweep(0.0), std::invalid_argument);
  CHECK_THROWS_AS(envy_threshold_sweep(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(envy_threshold_sweep(1.5), std::invalid_argument);
  CHECK_THROWS_AS(envy_threshold_sweep(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
}

TEST_CASE("selfish responder lets the proposer keep almost everything", "[ultimatum]") {
  const UltimatumInstance inst(10, 1, {{0, 1.0}});
  const UltimatumOffer best = ultimatum_optimal_offer(inst);
  CHECK(best.offer == 1);
  CHECK(best.proposer_expected == Catch::Approx(9.0));
  CHECK(best.accept_probability == Catch::Approx(1.0));
}

TEST_CASE("uniform thresholds push the offer to the middle", "[ultimatum]") {
  std::vector<std::pair<int, double>> probs;
  for (int t = 1; t <= 9; ++t) probs.emplace_back(t, 1.0 / 9.0);
  const UltimatumInstance inst(10, 1, probs);
  const UltimatumOffer best = ultimatum_optimal_offer(inst);
  CHECK(best.offer == 5);
  CHECK(best.proposer_expected == Catch::Approx(25.0 / 9.0));
  CHECK(best.accept_probability == Catch::Approx(5.0 / 9.0));
}

TEST_CASE("a hard fairness threshold forces a matching offer", "[ultimatum]") {
  const UltimatumInstance inst(10, 1, {{6, 1.0}});
  const UltimatumOffer best = ultimatum_optimal_offer(inst);
  CHECK(best.offer == 6);
  CHECK(best.proposer_expected == Catch::Approx(4.0));
}

TEST_CASE("expected-payoff ties resolve to the smaller offer", "[ultimatum]") {
  // Offers 2 and 7 both yield exactly 5: 10 * 0.5 and 5 * 1.
  const UltimatumInstance inst(12, 1, {{2, 0.5}, {7, 0.5}});
  const UltimatumOffer best = ultimatum_optimal_offer(inst);
  CHECK(best.offer == 2);
  CHECK(best.proposer_expected == 5.0);
}

TEST_CASE("optimal offer agrees with independent enumeration", "[ultimatum][property]") {
  std::mt19937_64 eng(246810);
  for (int trial = 0; trial < 200; ++trial) {
    const int total = 2 + static_cast<int>(eng() % 99);  // 2..100
    std::vector<int> divisors;
    for (int d = 1; d < total; ++d)
      if (total % d == 0) divisors.push_back(d);
    const int step = divisors[eng() % divisors.size()];
    const int k = 1 + static_cast<int>(eng() % 4);
    std::vector<std::pair<int, double>> probs;
    double mass = 0.0;
    for (int i = 0; i < k; ++i) {
      probs.emplace_back(static_cast<int>(eng() % (total + 1)), oracle::canonical(eng) + 0.01);
      mass += probs.back().second;
    }
    for (auto& [t, p] : probs) p /= mass;
    const UltimatumInstance inst(total, step, probs);
    const UltimatumOffer got = ultimatum_optimal_offer(inst);

    // Oracle scans offers from the top so ">=" keeps the smallest optimum.
    int best_offer = 0;
    double best_val = -1.0;
    for (int offer = total - step; offer >= step; offer -= step) {
      const double val = (total - offer) * inst.accept_probability(offer);
      if (val >= best_val) {
        best_val = val;
        best_offer = offer;
      }
    }
    INFO("trial " << trial << " total=" << total << " step=" << step);
    CHECK(got.offer == best_offer);
    CHECK(got.proposer_expected == Catch::Approx(best_val).margin(1e-12));
  }
}

TEST_CASE("raising every threshold can only hurt the proposer", "[ultimatum][property]") {
  std::mt19937_64 eng(97531);
  for (int trial = 0; trial < 200; ++trial) {
    const int total = 10 + static_cast<int>(eng() % 41);
    const int k = 1 + static_cast<int>(eng() % 4);
    const int shift = 1 + static_cast<int>(eng() % 5);
    std::vector<std::pair<int, double>> probs, shifted;
    double mass = 0.0;
    for (int i = 0; i < k; ++i) {
      probs.emplace_back(static_cast<int>(eng() % (total + 1)), oracle::canonical(eng) + 0.01);
      mass += probs.back().second;
    }
    for (auto& [t, p] : probs) p /= mass;
    for (const auto& [t, p] : probs) shifted.emplace_back(std::min(t + shift, total), p);
    const UltimatumOffer before = ultimatum_optimal_offer(UltimatumInstance(total, 1, probs));
    const UltimatumOffer after = ultimatum_optimal_offer(UltimatumInstance(total, 1, shifted));
    INFO("trial " << trial);
    CHECK(after.proposer_expected <= before.proposer_expected + 1e-12);
  }
}

TEST_CASE("an upward threshold shift can lower the optimal offer", "[ultimatum]") {
  // The optimal payoff falls monotonically under upward shifts (previous
  // test); the optimal offer itself does not. Here a mass point at 5 makes
  // offer 5 optimal, but after shifting everything up by 1 the proposer
  // abandons the now-expensive fair crowd and lowballs the selfish half.
  const UltimatumOffer before = ultimatum_optimal_offer(UltimatumInstance(10, 1, {{0, 0.5}, {5, 0.5}}));
  CHECK(before.offer == 5);
  CHECK(before.proposer_expected == Catch::Approx(5.0));
  const UltimatumOffer after = ultimatum_optimal_offer(UltimatumInstance(10, 1, {{1, 0.5}, {6, 0.5}}));
  CHECK(after.offer == 1);
  CHECK(after.proposer_expected == Catch::Approx(4.5));
  CHECK(after.offer < before.offer);
}

TEST_CASE("demanding the whole pot leaves nothing to gain", "[ultimatum]") {
  const UltimatumInstance inst(10, 1, {{10, 1.0}});
  const UltimatumOffer best = ultimatum_optimal_offer(inst);
  // Every admissible offer is rejected; ties at zero resolve downward.
  CHECK(best.offer == 1);
  CHECK(best.proposer_expected == 0.0);
  CHECK(best.accept_probability == 0.0);
}

TEST_CASE("instance validation", "[ultimatum]") {
  CHECK_THROWS_AS(UltimatumInstance(0, 1, {{0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(UltimatumInstance(10, 0, {{0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(UltimatumInstance(10, 3, {{0, 1.0}}), std::invalid_argument);   // step must divide
  CHECK_THROWS_AS(UltimatumInstance(10, 10, {{0, 1.0}}), std::invalid_argument);  // no offers left
  CHECK_THROWS_AS(UltimatumInstance(10, 1, {{11, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(UltimatumInstance(10, 1, {{-1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(UltimatumInstance(10, 1, {{3, 0.5}}), std::invalid_argument);  // mass != 1
  CHECK_THROWS_AS(UltimatumInstance(10, 1, {{3, -0.5}, {4, 1.5}}), std::invalid_argument);
  CHECK_THROWS_AS(UltimatumInstance(10, 1, {}), std::invalid_argument);

  const UltimatumInstance merged(10, 1, {{2, 0.25}, {2, 0.25}, {7, 0.5}});
  REQUIRE(merged.thresholds().size() == 2);
  CHECK(merged.thresholds()[0] == std::pair<int, double>(2, 0.5));
  CHECK(merged.accept_probability(0) == 0.0);
  CHECK(merged.accept_probability(2) == Catch::Approx(0.5));
  CHECK(merged.accept_probability(6) == Catch::Approx(0.5));
  CHECK(merged.accept_probability(7) == Catch::Approx(1.0));
}

TEST_CASE("threshold csv parsing renormalizes tiny drift and rejects real gaps", "[ultimatum]") {
  std::istringstream ok("threshold,probability\n1,0.5\n3,0.4999999\n");
  auto probs = parse_threshold_csv(ok, "ok.csv");
  REQUIRE(probs.size() == 2);
  CHECK(probs[0].second + probs[1].second == Catch::Approx(1.0).margin(1e-12));

  std::istringstream no_header("2,0.25\n5,0.75\n");
  CHECK(parse_threshold_csv(no_header, "plain.csv").size() == 2);

  std::istringstream off("1,0.5\n3,0.4\n");
  CHECK_THROWS_AS(parse_threshold_csv(off, "off.csv"), parse_error);
  std::istringstream bad_row("1,0.5,9\n3,0.5\n");
  CHECK_THROWS_AS(parse_threshold_csv(bad_row, "bad.csv"), parse_error);
  std::istringstream not_int("1.5,1.0\n");
  CHECK_THROWS_AS(parse_threshold_csv(not_int, "frac.csv"), parse_error);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_threshold_csv(empty, "empty.csv"), parse_error);
}

TEST_CASE("bundled threshold files load and reproduce the reference offers", "[ultimatum][data]") {
  const auto uniform = load_threshold_csv(std::string(GAMEAUDIT_DATA_DIR) + "/thresholds_uniform.csv");
  const UltimatumOffer mid = ultimatum_optimal_offer(UltimatumInstance(10, 1, uniform));
  CHECK(mid.offer == 5);
  CHECK(mid.proposer_expected == Catch::Approx(25.0 / 9.0).margin(1e-9));

  const auto selfish = load_threshold_csv(std::string(GAMEAUDIT_DATA_DIR) + "/thresholds_zero.csv");
  const UltimatumOffer corner = ultimatum_optimal_offer(UltimatumInstance(10, 1, selfish));
  CHECK(corner.offer == 1);
  CHECK(corner.proposer_expected == Catch::Approx(9.0));
}
