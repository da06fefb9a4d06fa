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

#ifndef GAMEAUDIT_CLI_HPP
#define GAMEAUDIT_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gameaudit/gameaudit.hpp"

namespace gameaudit::cli {

namespace detail {

// "$137,500,000" or "$688,722.22"; cents are printed only when the amount
// is not whole.
inline std::string format_currency(double amount) {
  const bool negative = amount < 0.0;
  const long long cents = std::llround(std::fabs(amount) * 100.0);
  const long long whole = cents / 100;
  const int frac = static_cast<int>(cents % 100);
  const std::string digits = std::to_string(whole);
  std::string grouped;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count != 0 && count % 3 == 0) grouped += ',';
    grouped += *it;
    ++count;
  }
  std::reverse(grouped.begin(), grouped.end());
  std::string out = negative ? "-$" : "$";
  out += grouped;
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), ".%02d", frac);
    out += buf;
  }
  return out;
}

// Quantities: whole numbers get comma grouping, everything else the
// significant-digit format.
inline std::string format_quantity(double q, int digits) {
  if (q >= 0.0 && std::fabs(q - std::round(q)) < 1e-9 && q < 1e15) {
    const std::string s = format_currency(std::round(q));
    return s.substr(1);  // drop the '$'
  }
  return format_significant(q, digits);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  int digits = 6;

  std::string fmt(double v) const { return format_significant(v, digits); }
};

inline std::string profile_str(const BimatrixGame& game, const StrategyProfile& p) {
  return "(" + game.row_labels()[p.row] + ", " + game.col_labels()[p.col] + ")";
}

inline std::string profile_set_str(const BimatrixGame& game, const std::vector<StrategyProfile>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += ", ";
    s += profile_str(game, set[i]);
  }
  return s + "}";
}

inline void print_mix(const Context& ctx, const char* name, const std::vector<double>& mix) {
  ctx.out << name;
  for (double v : mix) ctx.out << " " << ctx.fmt(v);
  ctx.out << "\n";
}

inline int run_solve(const Context& ctx, const std::string& game_path, const std::string& mode_name,
                     bool mixed) {
  const BimatrixGame game = load_game(game_path);
  const NashMode mode = mode_name == "strict" ? NashMode::Strict : NashMode::Weak;
  ctx.out << "game: " << game_path << " (" << game.rows() << "x" << game.cols() << ")\n";
  const auto equilibria = enumerate_pure_nash(game, mode);
  ctx.out << mode_name << " pure Nash equilibria (" << equilibria.size() << "):\n";
  if (equilibria.empty()) ctx.out << "  none\n";
  for (const auto& p : equilibria)
    ctx.out << "  " << profile_str(game, p) << "  payoffs (" << ctx.fmt(game.at(p.row, p.col).row)
            << ", " << ctx.fmt(game.at(p.row, p.col).col) << ")\n";
  if (mixed) {
    const auto sum = game.constant_sum();
    if (!sum) {
      ctx.out << "mixed minimax: skipped (game is not constant-sum)\n";
    } else {
      const MixedProfile profile = solve_constant_sum_mixed(game);
      ctx.out << "mixed minimax (constant sum " << ctx.fmt(*sum) << "):\n";
      print_mix(ctx, "  row mix:", profile.row_mix);
      print_mix(ctx, "  col mix:", profile.col_mix);
      ctx.out << "  value (row player): " << ctx.fmt(profile.value) << "\n";
      ctx.out << "  value (col player): " << ctx.fmt(*sum - profile.value) << "\n";
    }
  }
  return 0;
}

inline void print_envy_classification(const Context& ctx, const BimatrixGame& game,
                                      const EnvyClassification& cls) {
  ctx.out << "strict Nash equilibria: " << profile_set_str(game, cls.strict_nash) << "\n";
  ctx.out << "weak Nash equilibria: " << profile_set_str(game, cls.weak_nash) << "\n";
  ctx.out << "payoff-dominant strict equilibrium: "
          << (cls.payoff_dominant ? profile_str(game, *cls.payoff_dominant) : std::string("none")) << "\n";
}

inline int run_envy(const Context& ctx, const std::vector<double>& params_in, bool sweep, double step) {
  if (sweep) {
    const auto results = envy_threshold_sweep(step);
    const BimatrixGame labels = investment_game();
    for (const auto& [eps, cls] : results) {
      ctx.out << "epsilon=" << ctx.fmt(eps) << "  strict=" << profile_set_str(labels, cls.strict_nash)
              << "  weak=" << profile_set_str(labels, cls.weak_nash) << "  dominant="
              << (cls.payoff_dominant ? profile_str(labels, *cls.payoff_dominant) : std::string("none"))
              << "\n";
    }
    return 0;
  }
  const EnvyParams params{params_in[0], params_in[1], params_in[2], params_in[3]};
  const BimatrixGame game = apply_envy(params);
  ctx.out << "envy parameters: alpha=" << ctx.fmt(params.alpha) << " beta=" << ctx.fmt(params.beta)
          << " gamma=" << ctx.fmt(params.gamma) << " delta=" << ctx.fmt(params.delta) << "\n";
  ctx.out << "payoff matrix (row player, col player):\n";
  for (std::size_t r = 0; r < 2; ++r) {
    ctx.out << " ";
    for (std::size_t c = 0; c < 2; ++c)
      ctx.out << " (" << ctx.fmt(game.at(r, c).row) << ", " << ctx.fmt(game.at(r, c).col) << ")";
    ctx.out << "\n";
  }
  print_envy_classification(ctx, game, classify_envy_regime(params));
  return 0;
}

inline int run_regime(const Context& ctx, const std::string& game_path, std::vector<std::string> vary,
                      std::size_t resolution, const std::string& out_path) {
  const PenaltyGame base = load_penalty_game(game_path);
  auto parse_entry = [&](const std::string& text) {
    const auto parts = gameaudit::detail::split(text, ',');
    if (parts.size() != 2)
      throw std::invalid_argument("--vary entry must be '<keeperZone>,<shotZone>', got '" + text + "'");
    return VariedEntry{parse_keeper_zone(gameaudit::detail::trim(parts[0]), "--vary", 0),
                       parse_shot_zone(gameaudit::detail::trim(parts[1]), "--vary", 0)};
  };
  const RegimeGrid grid = sweep_regime(base, parse_entry(vary[0]), parse_entry(vary[1]), resolution);

  const std::string ext = out_path.size() >= 4 ? out_path.substr(out_path.size() - 4) : "";
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  if (ext == ".csv") write_regime_csv(grid, file);
  else if (ext == ".pgm") write_regime_pgm(grid, file);
  else throw std::invalid_argument("--out path must end in .csv or .pgm");
  file.close();

  ctx.out << "regime map over " << entry_label(grid.entry1) << " x " << entry_label(grid.entry2)
          << " at resolution " << resolution << "\n";
  ctx.out << "cells: Valid " << grid.count(IndifferenceStatus::Valid) << ", Invalid "
          << grid.count(IndifferenceStatus::Invalid) << ", Degenerate "
          << grid.count(IndifferenceStatus::Degenerate) << " of " << grid.cells.size() << "\n";
  ctx.out << "written: " << out_path << "\n";
  return 0;
}

inline int run_montecarlo(const Context& ctx, const std::string& game_path, const std::string& dist_path,
                          std::size_t samples, std::uint64_t seed) {
  const PenaltyGame base = load_penalty_game(game_path);
  const auto varied = load_distribution_file(dist_path);
  const MonteCarloReport report = monte_carlo_regime(base, varied, samples, seed);
  ctx.out << "samples: " << report.samples << " (seed " << seed << ")\n";
  ctx.out << "varied entries:";
  for (const auto& p : varied) ctx.out << " " << entry_label(p.entry);
  ctx.out << "\n";
  ctx.out << "fraction valid: " << ctx.fmt(report.fraction_valid) << "\n";
  ctx.out << "fraction invalid: " << ctx.fmt(report.fraction_invalid) << "\n";
  ctx.out << "fraction degenerate: " << ctx.fmt(report.fraction_degenerate) << "\n";
  ctx.out << "mean parameters:";
  for (double v : report.mean_params) ctx.out << " " << ctx.fmt(v);
  ctx.out << "\n";
  ctx.out << "classification at the mean: " << to_string(report.classification_at_mean) << "\n";
  ctx.out << "mean goal value over valid samples: "
          << (report.mean_value_over_valid ? ctx.fmt(*report.mean_value_over_valid) : std::string("n/a"))
          << "\n";
  ctx.out << "straddles regime boundary: " << (report.straddles_boundary ? "yes" : "no") << "\n";
  if (report.straddles_boundary)
    ctx.out << "warning: the samples mix regimes; the mean goal value averages over"
               " a region where no full-support solution exists on part of it\n";
  return 0;
}

inline int run_utility(const Context& ctx, const std::string& instance_path, bool rank,
                       const std::string& flip_target, const std::vector<double>& weights) {
  const DecisionInstance inst = load_decision_csv(instance_path);
  if (rank) {
    ctx.out << "ranking by criterion sums:\n";
    std::size_t place = 1;
    for (const auto& r : rank_by_sum(inst))
      ctx.out << "  " << place++ << ". " << inst.option_labels[r.option] << "  total " << ctx.fmt(r.score)
              << "\n";
    return 0;
  }
  if (!flip_target.empty()) {
    std::size_t target = inst.option_labels.size();
    for (std::size_t o = 0; o < inst.option_labels.size(); ++o)
      if (inst.option_labels[o] == flip_target) target = o;
    if (target == inst.option_labels.size())
      throw std::invalid_argument("no option labeled '" + flip_target + "' in " + instance_path);
    const FlipResult result = find_flipping_transform(inst, target);
    if (const auto* blocked = std::get_if<NoFlipPossible>(&result)) {
      ctx.out << "no monotone rescoring can make \"" << flip_target << "\" win: \""
              << inst.option_labels[blocked->dominating_option]
              << "\" is at least as good on every criterion\n";
      return 0;
    }
    const auto& transform = std::get<MonotoneTransform>(result);
    ctx.out << "monotone transform making \"" << flip_target << "\" the strict winner:\n";
    for (std::size_t c = 0; c < transform.per_criterion.size(); ++c) {
      ctx.out << "  " << inst.criteria_labels[c] << " breakpoints:";
      for (const auto& [x, y] : transform.per_criterion[c].points())
        ctx.out << " (" << ctx.fmt(x) << "," << ctx.fmt(y) << ")";
      ctx.out << "\n";
    }
    ctx.out << "ranking under the transform:\n";
    std::size_t place = 1;
    for (const auto& r : rank_by_scores(inst, transform))
      ctx.out << "  " << place++ << ". " << inst.option_labels[r.option] << "  score " << ctx.fmt(r.score)
              << "\n";
    return 0;
  }
  const LinearInvarianceReport report = check_linear_invariance(inst, weights);
  ctx.out << "weights:";
  for (double w : weights) ctx.out << " " << ctx.fmt(w);
  ctx.out << "\n";
  ctx.out << "winner by plain sums: " << inst.option_labels[rank_by_sum(inst)[0].option] << "\n";
  if (report.preserves_argmax) {
    ctx.out << "weighted winner: unchanged\n";
    ctx.out << "preserves argmax: yes\n";
  } else {
    ctx.out << "weighted winner: " << inst.option_labels[report.witness->first] << "\n";
    ctx.out << "preserves argmax: no (" << inst.option_labels[report.witness->first] << " overtakes "
            << inst.option_labels[report.witness->second] << ")\n";
  }
  return 0;
}

inline int run_pinto(const Context& ctx, const std::string& break_even_item) {
  const CostBenefitModel model = pinto_model();
  const CostBenefitResult result = cost_benefit(model);
  ctx.out << "cost side:\n";
  for (std::size_t i = 0; i < model.cost_side.size(); ++i)
    ctx.out << "  " << model.cost_side[i].label << ": " << format_currency(model.cost_side[i].unit_value)
            << " x " << format_quantity(model.cost_side[i].quantity, ctx.digits) << " = "
            << format_currency(result.cost_items[i].second) << "\n";
  ctx.out << "total cost: " << format_currency(result.total_cost) << "\n";
  ctx.out << "benefit side:\n";
  for (std::size_t i = 0; i < model.benefit_side.size(); ++i)
    ctx.out << "  " << model.benefit_side[i].label << ": "
            << format_currency(model.benefit_side[i].unit_value) << " x "
            << format_quantity(model.benefit_side[i].quantity, ctx.digits) << " = "
            << format_currency(result.benefit_items[i].second) << "\n";
  ctx.out << "total benefit: " << format_currency(result.total_benefit) << "\n";
  ctx.out << "decision: " << (result.decision == CbDecision::Proceed ? "Proceed" : "Reject") << "\n";

  double itemized = 0.0;
  ctx.out << "itemized societal loss per death:\n";
  for (const auto& [label, amount] : pinto_societal_loss_items()) {
    ctx.out << "  " << label << ": " << format_currency(amount) << "\n";
    itemized += amount;
  }
  ctx.out << "itemized total: " << format_currency(itemized) << "\n";

  const double be = break_even(model, break_even_item);
  ctx.out << "break-even unit value for \"" << break_even_item << "\": " << format_currency(be) << "\n";
  return 0;
}

inline void print_axiom_report(const Context& ctx, const AxiomReport& report) {
  for (const auto& [name, result] : report.entries()) {
    ctx.out << "  " << name << ": ";
    switch (result.status) {
      case AxiomStatus::Holds:
        ctx.out << "holds";
        if (!result.note.empty()) ctx.out << " (" << result.note << ")";
        break;
      case AxiomStatus::Fails: {
        ctx.out << "FAILS";
        if (!result.witness.empty()) {
          ctx.out << "  witness (";
          for (std::size_t i = 0; i < result.witness.size(); ++i) {
            if (i) ctx.out << ", ";
            ctx.out << result.witness[i];
          }
          ctx.out << ")";
        }
        if (!result.note.empty()) ctx.out << ": " << result.note;
        break;
      }
      case AxiomStatus::NotApplicable:
        ctx.out << "n/a (" << result.note << ")";
        break;
    }
    ctx.out << "\n";
  }
}

inline int run_axioms(const Context& ctx, const std::string& structure_path, const std::string& group_kind,
                      bool field, bool order, const std::string& hom_path) {
  const FiniteStructure s = load_structure(structure_path);
  ctx.out << "structure: " << structure_path << "\n";
  ctx.out << "carrier (" << s.size() << "):";
  for (const auto& label : s.carrier()) ctx.out << " " << label;
  ctx.out << "\n";
  AxiomReport report;
  std::string check_name;
  if (!group_kind.empty()) {
    check_name = "group under " + group_kind;
    report = check_group(s, group_kind == "add" ? TableKind::Add : TableKind::Mul);
  } else if (field) {
    check_name = "field";
    report = check_field(s);
  } else if (order) {
    check_name = "ordered structure";
    report = check_order_compat(s);
  } else {
    check_name = "homomorphism into the rationals";
    report = check_homomorphism(s, load_image_map(hom_path));
  }
  ctx.out << "check: " << check_name << "\n";
  print_axiom_report(ctx, report);
  ctx.out << "result: " << (report.all_hold() ? "PASS" : "FAIL") << "\n";
  return 0;
}

inline int run_ultimatum(const Context& ctx, int total, const std::string& thresholds_path) {
  const UltimatumInstance inst(total, 1, load_threshold_csv(thresholds_path));
  const UltimatumOffer best = ultimatum_optimal_offer(inst);
  ctx.out << "offers considered: " << inst.offer_step() << ".." << inst.total() - inst.offer_step()
          << " (step " << inst.offer_step() << ")\n";
  ctx.out << "optimal offer: " << best.offer << "\n";
  ctx.out << "proposer expected payoff: " << ctx.fmt(best.proposer_expected) << "\n";
  ctx.out << "acceptance probability at that offer: " << ctx.fmt(best.accept_probability) << "\n";
  return 0;
}

}  // namespace detail

// Entry point used by the binary and by tests; `args` excludes the program
// name. Exit codes: 0 success, 1 domain/computation error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"audit toolkit for finite two-player games and quantified-value reasoning"};
  app.require_subcommand(1);
  int digits = 6;
  app.add_option("--digits", digits, "significant digits for numeric output (default 6)")
      ->check(CLI::Range(1, 17));

  auto* solve = app.add_subcommand("solve", "enumerate pure Nash equilibria of a game file");
  std::string solve_game, solve_mode = "weak";
  bool solve_mixed = false;
  solve->add_option("--game", solve_game, "strategic-form game file")->required();
  solve->add_option("--mode", solve_mode, "weak or strict (default weak)")
      ->check(CLI::IsMember({"weak", "strict"}));
  solve->add_flag("--mixed", solve_mixed, "also report minimax mixes for constant-sum games");

  auto* envy = app.add_subcommand("envy", "build and classify the envy-adjusted investment game");
  double envy_epsilon = 0.0, envy_step = 0.01;
  std::vector<double> envy_params;
  bool envy_sweep = false;
  auto* eps_opt = envy->add_option("--epsilon", envy_epsilon, "symmetric envy strength (alpha=beta=gamma=delta)");
  auto* params_opt =
      envy->add_option("--params", envy_params, "alpha,beta,gamma,delta")->delimiter(',')->expected(4);
  auto* sweep_opt = envy->add_flag("--sweep", envy_sweep, "classify along epsilon in [0,2]");
  envy->add_option("--step", envy_step, "sweep grid step (default 0.01)")->needs(sweep_opt);
  eps_opt->excludes(params_opt)->excludes(sweep_opt);
  params_opt->excludes(sweep_opt);

  auto* regime = app.add_subcommand("regime", "classification raster over two varied penalty entries");
  std::string regime_game, regime_out;
  std::vector<std::string> regime_vary;
  std::size_t regime_resolution = 101;
  regime->add_option("--game", regime_game, "penalty game file")->required();
  regime->add_option("--vary", regime_vary, "two entries '<keeperZone>,<shotZone>'")->expected(2)->required();
  regime->add_option("--resolution", regime_resolution, "grid resolution per axis (default 101)")
      ->check(CLI::Range(2, 100000));
  regime->add_option("--out", regime_out, "output path, .csv or .pgm")->required();

  auto* montecarlo = app.add_subcommand("montecarlo", "sample random penalty entries and report regime mix");
  std::string mc_game, mc_dist;
  std::size_t mc_samples = 10000;
  std::uint64_t mc_seed = 0;
  montecarlo->add_option("--game", mc_game, "penalty game file")->required();
  montecarlo->add_option("--dist", mc_dist, "distribution spec file")->required();
  montecarlo->add_option("--samples", mc_samples, "sample count (default 10000)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  montecarlo->add_option("--seed", mc_seed, "RNG seed (default 0)");

  auto* utility = app.add_subcommand("utility", "rank options and audit monotone rescoring");
  std::string util_instance, util_flip;
  std::vector<double> util_weights;
  bool util_rank = false;
  utility->add_option("--instance", util_instance, "decision CSV")->required();
  auto* rank_opt = utility->add_flag("--rank", util_rank, "rank by plain criterion sums");
  auto* flip_opt = utility->add_option("--flip", util_flip, "search a transform making this option win");
  auto* weights_opt =
      utility->add_option("--weights", util_weights, "positive per-criterion weights")->delimiter(',');
  rank_opt->excludes(flip_opt)->excludes(weights_opt);
  flip_opt->excludes(weights_opt);

  auto* pinto = app.add_subcommand("pinto", "bundled fuel-tank cost-benefit dataset");
  std::string pinto_item = "death";
  pinto->add_option("--break-even", pinto_item, "line item to solve break-even for (default death)");

  auto* axioms = app.add_subcommand("axioms", "check algebraic axioms of a finite structure");
  std::string ax_structure, ax_group, ax_hom;
  bool ax_field = false, ax_order = false;
  axioms->add_option("--structure", ax_structure, "structure file")->required();
  auto* group_opt =
      axioms->add_option("--group", ax_group, "group axioms on 'add' or 'mul'")->check(CLI::IsMember({"add", "mul"}));
  auto* field_opt = axioms->add_flag("--field", ax_field, "field axioms");
  auto* order_opt = axioms->add_flag("--order", ax_order, "order compatibility axioms");
  auto* hom_opt = axioms->add_option("--hom", ax_hom, "image map file for a homomorphism check");
  group_opt->excludes(field_opt)->excludes(order_opt)->excludes(hom_opt);
  field_opt->excludes(order_opt)->excludes(hom_opt);
  order_opt->excludes(hom_opt);

  auto* ultimatum = app.add_subcommand("ultimatum", "optimal proposer offer against a threshold responder");
  int ult_total = 0;
  std::string ult_thresholds;
  ultimatum->add_option("--total", ult_total, "amount to split")->required()->check(CLI::Range(1, 1000000));
  ultimatum->add_option("--thresholds", ult_thresholds, "threshold,probability CSV")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const detail::Context ctx{out, err, digits};
  try {
    if (solve->parsed()) return detail::run_solve(ctx, solve_game, solve_mode, solve_mixed);
    if (envy->parsed()) {
      if (envy_sweep) return detail::run_envy(ctx, {}, true, envy_step);
      if (!params_opt->count() && !eps_opt->count()) {
        err << "usage error: envy needs --epsilon, --params or --sweep\n";
        return 2;
      }
      std::vector<double> params = params_opt->count()
                                       ? envy_params
                                       : std::vector<double>{envy_epsilon, envy_epsilon, envy_epsilon,
                                                             envy_epsilon};
      return detail::run_envy(ctx, params, false, envy_step);
    }
    if (regime->parsed())
      return detail::run_regime(ctx, regime_game, regime_vary, regime_resolution, regime_out);
    if (montecarlo->parsed()) return detail::run_montecarlo(ctx, mc_game, mc_dist, mc_samples, mc_seed);
    if (utility->parsed()) {
      if (!util_rank && util_flip.empty() && !weights_opt->count()) {
        err << "usage error: utility needs --rank, --flip or --weights\n";
        return 2;
      }
      return detail::run_utility(ctx, util_instance, util_rank, util_flip, util_weights);
    }
    if (pinto->parsed()) return detail::run_pinto(ctx, pinto_item);
    if (axioms->parsed()) {
      if (ax_group.empty() && !ax_field && !ax_order && ax_hom.empty()) {
        err << "usage error: axioms needs --group, --field, --order or --hom\n";
        return 2;
      }
      return detail::run_axioms(ctx, ax_structure, ax_group, ax_field, ax_order, ax_hom);
    }
    if (ultimatum->parsed()) return detail::run_ultimatum(ctx, ult_total, ult_thresholds);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand given\n";
  return 2;
}

}  // namespace gameaudit::cli

#endif  // GAMEAUDIT_CLI_HPP
