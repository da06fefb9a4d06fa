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

#ifndef GAMEAUDIT_COSTBENEFIT_HPP
#define GAMEAUDIT_COSTBENEFIT_HPP

#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gameaudit/detail/text.hpp"

namespace gameaudit {

// One line of a cost-benefit sheet: `quantity` units at `unit_value` each.
struct LineItem {
  std::string label;
  double unit_value = 0.0;
  double quantity = 0.0;
};

struct CostBenefitModel {
  std::vector<LineItem> cost_side;
  std::vector<LineItem> benefit_side;
};

// Either side may be empty; an absent side simply totals zero.
inline void validate(const CostBenefitModel& model) {
  for (const auto* side : {&model.cost_side, &model.benefit_side})
    for (const auto& item : *side) {
      if (item.label.empty()) throw std::invalid_argument("line items need a label");
      if (!std::isfinite(item.unit_value) || !std::isfinite(item.quantity) || item.quantity < 0.0)
        throw std::invalid_argument("line items need finite values and nonnegative quantities");
    }
}

enum class CbDecision { Proceed, Reject };

struct CostBenefitResult {
  double total_cost = 0.0;
  double total_benefit = 0.0;
  CbDecision decision = CbDecision::Reject;
  std::vector<std::pair<std::string, double>> cost_items;      // label, amount
  std::vector<std::pair<std::string, double>> benefit_items;   // label, amount
};

// Totals each side and proceeds exactly when benefit >= cost.
inline CostBenefitResult cost_benefit(const CostBenefitModel& model) {
  validate(model);
  CostBenefitResult result;
  for (const auto& item : model.cost_side) {
    const double amount = item.unit_value * item.quantity;
    result.cost_items.emplace_back(item.label, amount);
    result.total_cost += amount;
  }
  for (const auto& item : model.benefit_side) {
    const double amount = item.unit_value * item.quantity;
    result.benefit_items.emplace_back(item.label, amount);
    result.total_benefit += amount;
  }
  result.decision = result.total_benefit >= result.total_cost ? CbDecision::Proceed : CbDecision::Reject;
  return result;
}

// The unit value that would balance the two sides when assigned to `label`
// (searched on the benefit side first, then the cost side), holding every
// other line fixed. For a benefit item: the value closing the shortfall
// cost - benefit; for a cost item: the value closing benefit - cost.
inline double break_even(const CostBenefitModel& model, std::string_view label) {
  validate(model);
  const CostBenefitResult result = cost_benefit(model);
  for (const auto& item : model.benefit_side) {
    if (item.label != label) continue;
    if (item.quantity <= 0.0) throw std::invalid_argument("break-even item has zero quantity");
    const double rest = result.total_benefit - item.unit_value * item.quantity;
    return (result.total_cost - rest) / item.quantity;
  }
  for (const auto& item : model.cost_side) {
    if (item.label != label) continue;
    if (item.quantity <= 0.0) throw std::invalid_argument("break-even item has zero quantity");
    const double rest = result.total_cost - item.unit_value * item.quantity;
    return (result.total_benefit - rest) / item.quantity;
  }
  throw std::invalid_argument("no line item labeled '" + std::string(label) + "'");
}

// The 1970s fuel-tank memorandum: a $11 fix across 12.5 million vehicles
// weighed against the projected payouts for 180 deaths, 180 serious burn
// injuries and 2,100 burned vehicles.
inline CostBenefitModel pinto_model() {
  CostBenefitModel model;
  model.cost_side.push_back({"tank upgrade", 11.0, 12500000.0});
  model.benefit_side.push_back({"death", 200000.0, 180.0});
  model.benefit_side.push_back({"serious injury", 67000.0, 180.0});
  model.benefit_side.push_back({"burned vehicle", 700.0, 2100.0});
  return model;
}

// The governmental per-death valuation behind the $200,000 figure,
// itemized. The components sum to $200,725.
inline std::vector<std::pair<std::string, double>> pinto_societal_loss_items() {
  return {{"direct productivity losses", 132000.0},
          {"indirect productivity losses", 41300.0},
          {"hospital", 700.0},
          {"insurance administration", 4700.0},
          {"legal and court expenses", 3000.0},
          {"employer losses", 1000.0},
          {"property damage", 1500.0},
          {"victim's pain and suffering", 10000.0},
          {"funeral", 900.0},
          {"lost consumption", 5000.0},
          {"miscellaneous accident costs", 200.0},
          {"other", 425.0}};
}

// CSV with header "side,label,unit_value,quantity", side in {cost, benefit}.
inline CostBenefitModel parse_cost_benefit_csv(std::istream& in, std::string_view source) {
  CostBenefitModel model;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header_seen) {
      if (t != "side,label,unit_value,quantity")
        detail::fail_at(source, line_no, "header must be 'side,label,unit_value,quantity'");
      header_seen = true;
      continue;
    }
    auto parts = detail::split(t, ',');
    if (parts.size() != 4) detail::fail_at(source, line_no, "expected 4 fields");
    auto side = detail::trim(parts[0]);
    auto label = detail::trim(parts[1]);
    auto unit = detail::parse_double(parts[2]);
    auto qty = detail::parse_double(parts[3]);
    if (label.empty()) detail::fail_at(source, line_no, "empty label");
    if (!unit || !qty || *qty < 0.0)
      detail::fail_at(source, line_no, "unit_value and quantity must be numbers, quantity nonnegative");
    LineItem item{std::string(label), *unit, *qty};
    if (side == "cost") model.cost_side.push_back(std::move(item));
    else if (side == "benefit") model.benefit_side.push_back(std::move(item));
    else detail::fail_at(source, line_no, "side must be 'cost' or 'benefit'");
  }
  if (!header_seen) detail::fail_at(source, line_no, "missing header row");
  try {
    validate(model);
  } catch (const std::invalid_argument& e) {
    detail::fail_at(source, line_no, e.what());
  }
  return model;
}

inline CostBenefitModel load_cost_benefit_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_cost_benefit_csv(in, path.string());
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_COSTBENEFIT_HPP
