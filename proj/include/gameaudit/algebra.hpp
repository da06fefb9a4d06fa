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

#ifndef GAMEAUDIT_ALGEBRA_HPP
#define GAMEAUDIT_ALGEBRA_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gameaudit/detail/text.hpp"
#include "gameaudit/rational.hpp"

namespace gameaudit {

// A finite carrier of labeled elements with up to two partial operation
// tables, an optional strict total order (given as the ascending label
// sequence) and optional designated zero/one elements. Partial cells model
// ad-hoc value scales where most combinations were simply never named.
class FiniteStructure {
 public:
  // n*n row-major; nullopt marks an undefined cell.
  using OpTable = std::vector<std::optional<std::size_t>>;

  FiniteStructure(std::vector<std::string> carrier, std::optional<OpTable> add_table,
                  std::optional<OpTable> mul_table = std::nullopt,
                  std::optional<std::vector<std::size_t>> order = std::nullopt,
                  std::optional<std::size_t> zero = std::nullopt,
                  std::optional<std::size_t> one = std::nullopt)
      : carrier_(std::move(carrier)),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        order_(std::move(order)),
        zero_(zero),
        one_(one) {
    const std::size_t n = carrier_.size();
    if (n == 0) throw std::invalid_argument("carrier must be nonempty");
    for (const auto& label : carrier_) {
      if (label.empty()) throw std::invalid_argument("carrier labels must be nonempty");
      if (label.find(',') != std::string::npos)
        throw std::invalid_argument("carrier labels must not contain ','");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (carrier_[i] == carrier_[j]) throw std::invalid_argument("carrier labels must be unique");
    for (const auto* table : {&add_, &mul_}) {
      if (!*table) continue;
      if ((*table)->size() != n * n) throw std::invalid_argument("operation table must be n x n");
      for (const auto& cell : **table)
        if (cell && *cell >= n) throw std::invalid_argument("table cell references no carrier element");
    }
    if (order_) {
      if (order_->size() != n) throw std::invalid_argument("order must list each element exactly once");
      std::vector<bool> seen(n, false);
      for (std::size_t idx : *order_) {
        if (idx >= n || seen[idx]) throw std::invalid_argument("order must list each element exactly once");
        seen[idx] = true;
      }
      order_pos_.emplace(n, 0);
      for (std::size_t pos = 0; pos < n; ++pos) (*order_pos_)[(*order_)[pos]] = pos;
    }
    if (zero_ && *zero_ >= n) throw std::invalid_argument("zero references no carrier element");
    if (one_ && *one_ >= n) throw std::invalid_argument("one references no carrier element");
  }

  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& label(std::size_t i) const { return carrier_.at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      if (carrier_[i] == label) return i;
    return std::nullopt;
  }

  bool has_add() const { return add_.has_value(); }
  bool has_mul() const { return mul_.has_value(); }
  bool has_order() const { return order_.has_value(); }

  std::optional<std::size_t> add(std::size_t a, std::size_t b) const { return cell(add_, a, b); }
  std::optional<std::size_t> mul(std::size_t a, std::size_t b) const { return cell(mul_, a, b); }

  // Strict order by position in the order sequence; requires has_order().
  bool order_less(std::size_t a, std::size_t b) const {
    return (*order_pos_).at(a) < (*order_pos_).at(b);
  }
  const std::optional<std::vector<std::size_t>>& order() const { return order_; }

  std::optional<std::size_t> zero_index() const { return zero_; }
  std::optional<std::size_t> one_index() const { return one_; }

 private:
  std::optional<std::size_t> cell(const std::optional<OpTable>& table, std::size_t a, std::size_t b) const {
    if (!table) return std::nullopt;
    if (a >= size() || b >= size()) throw std::out_of_range("element index out of range");
    return (*table)[a * size() + b];
  }

  std::vector<std::string> carrier_;
  std::optional<OpTable> add_, mul_;
  std::optional<std::vector<std::size_t>> order_;
  std::optional<std::vector<std::size_t>> order_pos_;
  std::optional<std::size_t> zero_, one_;
};

enum class AxiomStatus { Holds, Fails, NotApplicable };

// `witness` holds carrier labels; for Fails it replays to a concrete
// violation against the tables. `note` explains the violation or the
// missing ingredient in words.
struct AxiomResult {
  AxiomStatus status = AxiomStatus::Holds;
  std::vector<std::string> witness;
  std::string note;

  static AxiomResult holds(std::string note = "") { return {AxiomStatus::Holds, {}, std::move(note)}; }
  static AxiomResult fails(std::vector<std::string> witness, std::string note = "") {
    return {AxiomStatus::Fails, std::move(witness), std::move(note)};
  }
  static AxiomResult not_applicable(std::string note) {
    return {AxiomStatus::NotApplicable, {}, std::move(note)};
  }
};

// Ordered list of (axiom name, result). Witness scans always walk tuples in
// carrier-sequence lexicographic order, so reports are deterministic.
class AxiomReport {
 public:
  void add(std::string name, AxiomResult result) { entries_.emplace_back(std::move(name), std::move(result)); }

  const AxiomResult* find(std::string_view name) const {
    for (const auto& [n, r] : entries_)
      if (n == name) return &r;
    return nullptr;
  }

  bool all_hold() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.second.status == AxiomStatus::Holds; });
  }

  const std::vector<std::pair<std::string, AxiomResult>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, AxiomResult>> entries_;
};

enum class TableKind { Add, Mul };

namespace detail {

using OpFn = std::optional<std::size_t> (*)(const FiniteStructure&, std::size_t, std::size_t);

inline std::optional<std::size_t> add_fn(const FiniteStructure& s, std::size_t a, std::size_t b) {
  return s.add(a, b);
}
inline std::optional<std::size_t> mul_fn(const FiniteStructure& s, std::size_t a, std::size_t b) {
  return s.mul(a, b);
}

struct SubUniverse {
  std::vector<std::size_t> members;  // ascending carrier indices
  std::vector<bool> contains;        // indexed by carrier index
};

inline SubUniverse full_universe(std::size_t n) {
  SubUniverse u;
  for (std::size_t i = 0; i < n; ++i) u.members.push_back(i);
  u.contains.assign(n, true);
  return u;
}

inline SubUniverse universe_without(std::size_t n, std::size_t excluded) {
  SubUniverse u;
  u.contains.assign(n, true);
  u.contains[excluded] = false;
  for (std::size_t i = 0; i < n; ++i)
    if (i != excluded) u.members.push_back(i);
  return u;
}

inline std::vector<std::string> labels_of(const FiniteStructure& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(s.label(i));
  return out;
}

// First (a, b) whose product is undefined or escapes the sub-universe.
inline AxiomResult scan_closure(const FiniteStructure& s, OpFn op, const SubUniverse& u, char symbol) {
  for (std::size_t a : u.members)
    for (std::size_t b : u.members) {
      const auto r = op(s, a, b);
      if (!r)
        return AxiomResult::fails(labels_of(s, {a, b}),
                                  s.label(a) + " " + symbol + " " + s.label(b) + " is undefined");
      if (!u.contains[*r])
        return AxiomResult::fails(labels_of(s, {a, b}), s.label(a) + " " + symbol + " " + s.label(b) +
                                                            " = " + s.label(*r) + " leaves the set");
    }
  return AxiomResult::holds();
}

// First (a, b, c) with (a b) c != a (b c); triples with an undefined or
// escaping intermediate are skipped (closure reports those).
inline AxiomResult scan_associativity(const FiniteStructure& s, OpFn op, const SubUniverse& u, char symbol) {
  for (std::size_t a : u.members)
    for (std::size_t b : u.members)
      for (std::size_t c : u.members) {
        const auto ab = op(s, a, b);
        const auto bc = op(s, b, c);
        if (!ab || !bc || !u.contains[*ab] || !u.contains[*bc]) continue;
        const auto left = op(s, *ab, c);
        const auto right = op(s, a, *bc);
        if (!left || !right) continue;
        if (*left != *right)
          return AxiomResult::fails(labels_of(s, {a, b, c}),
                                    "(" + s.label(a) + " " + symbol + " " + s.label(b) + ") " + symbol +
                                        " " + s.label(c) + " = " + s.label(*left) + " but " + s.label(a) +
                                        " " + symbol + " (" + s.label(b) + " " + symbol + " " + s.label(c) +
                                        ") = " + s.label(*right));
      }
  return AxiomResult::holds();
}

// First (a, b) with a b != b a; pairs with an undefined side are skipped.
inline AxiomResult scan_commutativity(const FiniteStructure& s, OpFn op, const SubUniverse& u, char symbol) {
  for (std::size_t a : u.members)
    for (std::size_t b : u.members) {
      const auto ab = op(s, a, b);
      const auto ba = op(s, b, a);
      if (!ab || !ba) continue;
      if (*ab != *ba)
        return AxiomResult::fails(labels_of(s, {a, b}),
                                  s.label(a) + " " + symbol + " " + s.label(b) + " = " + s.label(*ab) +
                                      " but " + s.label(b) + " " + symbol + " " + s.label(a) + " = " +
                                      s.label(*ba));
    }
  return AxiomResult::holds();
}

// First member acting as a two-sided identity on the sub-universe.
inline std::optional<std::size_t> find_identity(const FiniteStructure& s, OpFn op, const SubUniverse& u) {
  for (std::size_t e : u.members) {
    bool ok = true;
    for (std::size_t a : u.members) {
      const auto ea = op(s, e, a);
      const auto ae = op(s, a, e);
      if (!ea || !ae || *ea != a || *ae != a) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

inline AxiomResult scan_inverses(const FiniteStructure& s, OpFn op, const SubUniverse& u, std::size_t e) {
  for (std::size_t a : u.members) {
    bool found = false;
    for (std::size_t b : u.members) {
      const auto ab = op(s, a, b);
      const auto ba = op(s, b, a);
      if (ab && ba && *ab == e && *ba == e) {
        found = true;
        break;
      }
    }
    if (!found)
      return AxiomResult::fails({s.label(a)},
                                "no element inverts " + s.label(a) + " about " + s.label(e));
  }
  return AxiomResult::holds();
}

}  // namespace detail

// Group axioms (closure, associativity, identity, inverses) for the chosen
// table over the full carrier. A missing table yields NotApplicable rows.
inline AxiomReport check_group(const FiniteStructure& s, TableKind kind) {
  AxiomReport report;
  const bool present = kind == TableKind::Add ? s.has_add() : s.has_mul();
  const char* table_name = kind == TableKind::Add ? "add" : "mul";
  if (!present) {
    const std::string note = std::string(table_name) + " table absent";
    for (const char* axiom : {"closure", "associativity", "identity", "inverses"})
      report.add(axiom, AxiomResult::not_applicable(note));
    return report;
  }
  const detail::OpFn op = kind == TableKind::Add ? detail::add_fn : detail::mul_fn;
  const char symbol = kind == TableKind::Add ? '+' : '*';
  const auto u = detail::full_universe(s.size());
  report.add("closure", detail::scan_closure(s, op, u, symbol));
  report.add("associativity", detail::scan_associativity(s, op, u, symbol));
  const auto e = detail::find_identity(s, op, u);
  report.add("identity", e ? AxiomResult::holds("identity is " + s.label(*e))
                           : AxiomResult::fails({}, "no two-sided identity element"));
  report.add("inverses", e ? detail::scan_inverses(s, op, u, *e)
                           : AxiomResult::not_applicable("no identity to invert about"));
  return report;
}

// Field axioms: abelian additive group on the carrier, abelian
// multiplicative group on the carrier without zero, and distributivity.
// `zero` is the designated zero if present, otherwise the discovered
// additive identity.
inline AxiomReport check_field(const FiniteStructure& s) {
  AxiomReport report;
  const auto full = detail::full_universe(s.size());

  std::optional<std::size_t> zero = s.zero_index();
  if (s.has_add()) {
    report.add("additive closure", detail::scan_closure(s, detail::add_fn, full, '+'));
    report.add("additive associativity", detail::scan_associativity(s, detail::add_fn, full, '+'));
    report.add("additive commutativity", detail::scan_commutativity(s, detail::add_fn, full, '+'));
    const auto e = detail::find_identity(s, detail::add_fn, full);
    report.add("additive identity", e ? AxiomResult::holds("zero is " + s.label(*e))
                                      : AxiomResult::fails({}, "no two-sided additive identity"));
    report.add("additive inverses", e ? detail::scan_inverses(s, detail::add_fn, full, *e)
                                      : AxiomResult::not_applicable("no additive identity"));
    if (!zero) zero = e;
  } else {
    for (const char* axiom : {"additive closure", "additive associativity", "additive commutativity",
                              "additive identity", "additive inverses"})
      report.add(axiom, AxiomResult::not_applicable("add table absent"));
  }

  if (!s.has_mul()) {
    for (const char* axiom : {"multiplicative closure", "multiplicative associativity",
                              "multiplicative commutativity", "multiplicative identity",
                              "multiplicative inverses"})
      report.add(axiom, AxiomResult::not_applicable("mul table absent"));
  } else if (!zero) {
    for (const char* axiom : {"multiplicative closure", "multiplicative associativity",
                              "multiplicative commutativity", "multiplicative identity",
                              "multiplicative inverses"})
      report.add(axiom, AxiomResult::not_applicable("no zero element to exclude"));
  } else if (s.size() < 2) {
    for (const char* axiom : {"multiplicative closure", "multiplicative associativity",
                              "multiplicative commutativity", "multiplicative identity",
                              "multiplicative inverses"})
      report.add(axiom, AxiomResult::not_applicable("no nonzero elements"));
  } else {
    const auto nonzero = detail::universe_without(s.size(), *zero);
    report.add("multiplicative closure", detail::scan_closure(s, detail::mul_fn, nonzero, '*'));
    report.add("multiplicative associativity",
               detail::scan_associativity(s, detail::mul_fn, nonzero, '*'));
    report.add("multiplicative commutativity",
               detail::scan_commutativity(s, detail::mul_fn, full, '*'));
    std::optional<std::size_t> one = s.one_index();
    if (!one) one = detail::find_identity(s, detail::mul_fn, nonzero);
    bool one_ok = false;
    if (one && *one != *zero) {
      one_ok = true;
      for (std::size_t a : nonzero.members) {
        const auto ea = s.mul(*one, a);
        const auto ae = s.mul(a, *one);
        if (!ea || !ae || *ea != a || *ae != a) {
          one_ok = false;
          break;
        }
      }
    }
    report.add("multiplicative identity",
               one_ok ? AxiomResult::holds("one is " + s.label(*one))
                      : AxiomResult::fails({}, "no two-sided multiplicative identity on the nonzero part"));
    report.add("multiplicative inverses",
               one_ok ? detail::scan_inverses(s, detail::mul_fn, nonzero, *one)
                      : AxiomResult::not_applicable("no multiplicative identity"));
  }

  if (s.has_add() && s.has_mul()) {
    AxiomResult dist = AxiomResult::holds();
    for (std::size_t a = 0; a < s.size() && dist.status == AxiomStatus::Holds; ++a)
      for (std::size_t b = 0; b < s.size() && dist.status == AxiomStatus::Holds; ++b)
        for (std::size_t c = 0; c < s.size(); ++c) {
          // a*(b+c) = a*b + a*c and (a+b)*c = a*c + b*c; triples touching
          // an undefined cell are skipped (closure reports those).
          const auto bc = s.add(b, c);
          const auto ab_m = s.mul(a, b);
          const auto ac_m = s.mul(a, c);
          if (bc && ab_m && ac_m) {
            const auto left = s.mul(a, *bc);
            const auto right = s.add(*ab_m, *ac_m);
            if (left && right && *left != *right) {
              dist = AxiomResult::fails(detail::labels_of(s, {a, b, c}),
                                        s.label(a) + " * (" + s.label(b) + " + " + s.label(c) +
                                            ") = " + s.label(*left) + " but " + s.label(a) + " * " +
                                            s.label(b) + " + " + s.label(a) + " * " + s.label(c) + " = " +
                                            s.label(*right));
              break;
            }
          }
          const auto ab_a = s.add(a, b);
          const auto ac2 = s.mul(a, c);
          const auto bc2 = s.mul(b, c);
          if (ab_a && ac2 && bc2) {
            const auto left = s.mul(*ab_a, c);
            const auto right = s.add(*ac2, *bc2);
            if (left && right && *left != *right) {
              dist = AxiomResult::fails(detail::labels_of(s, {a, b, c}),
                                        "(" + s.label(a) + " + " + s.label(b) + ") * " + s.label(c) +
                                            " = " + s.label(*left) + " but " + s.label(a) + " * " +
                                            s.label(c) + " + " + s.label(b) + " * " + s.label(c) + " = " +
                                            s.label(*right));
              break;
            }
          }
        }
    report.add("distributivity", dist);
  } else {
    report.add("distributivity", AxiomResult::not_applicable("needs both tables"));
  }
  return report;
}

// Order compatibility: the structural order axioms, translation invariance
// of addition, and positivity closure of multiplication.
inline AxiomReport check_order_compat(const FiniteStructure& s) {
  AxiomReport report;
  if (!s.has_order()) {
    for (const char* axiom : {"order totality", "order antisymmetry", "order transitivity",
                              "translation invariance", "positivity closure"})
      report.add(axiom, AxiomResult::not_applicable("order absent"));
    return report;
  }
  // The order is given as an ascending sequence over the whole carrier, so
  // totality, antisymmetry and transitivity hold by construction.
  const char* structural = "holds by construction: the order is a sequence listing every element once";
  report.add("order totality", AxiomResult::holds(structural));
  report.add("order antisymmetry", AxiomResult::holds(structural));
  report.add("order transitivity", AxiomResult::holds(structural));

  if (!s.has_add()) {
    report.add("translation invariance", AxiomResult::not_applicable("add table absent"));
  } else {
    AxiomResult trans = AxiomResult::holds();
    for (std::size_t a = 0; a < s.size() && trans.status == AxiomStatus::Holds; ++a)
      for (std::size_t b = 0; b < s.size() && trans.status == AxiomStatus::Holds; ++b) {
        if (a == b || !s.order_less(a, b)) continue;
        for (std::size_t c = 0; c < s.size(); ++c) {
          const auto ac = s.add(a, c);
          const auto bc = s.add(b, c);
          if (!ac || !bc) continue;  // closure's business
          if (!s.order_less(*ac, *bc)) {
            trans = AxiomResult::fails(detail::labels_of(s, {a, b, c}),
                                       s.label(a) + " < " + s.label(b) + " but " + s.label(a) + " + " +
                                           s.label(c) + " = " + s.label(*ac) + " is not below " +
                                           s.label(b) + " + " + s.label(c) + " = " + s.label(*bc));
            break;
          }
        }
      }
    report.add("translation invariance", trans);
  }

  if (!s.has_mul() || !s.zero_index()) {
    report.add("positivity closure",
               AxiomResult::not_applicable(!s.has_mul() ? "mul table absent" : "zero not designated"));
  } else {
    const std::size_t zero = *s.zero_index();
    AxiomResult pos = AxiomResult::holds();
    for (std::size_t a = 0; a < s.size() && pos.status == AxiomStatus::Holds; ++a) {
      if (!s.order_less(zero, a)) continue;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (!s.order_less(zero, b)) continue;
        const auto ab = s.mul(a, b);
        if (!ab) continue;
        if (!s.order_less(zero, *ab)) {
          pos = AxiomResult::fails(detail::labels_of(s, {a, b}),
                                   s.label(a) + " and " + s.label(b) + " are positive but " + s.label(a) +
                                       " * " + s.label(b) + " = " + s.label(*ab) + " is not");
          break;
        }
      }
    }
    report.add("positivity closure", pos);
  }
  return report;
}

// Checks that `image` is an additive homomorphism into the rationals:
// phi(a + b) = phi(a) + phi(b) on every defined cell (exact rational
// comparison), and strict order preservation when an order is present.
// The image must cover the carrier exactly.
inline AxiomReport check_homomorphism(const FiniteStructure& s,
                                      const std::map<std::string, Rational>& image) {
  for (const auto& label : s.carrier())
    if (!image.count(label))
      throw std::invalid_argument("image does not map carrier element '" + label + "'");
  for (const auto& [label, value] : image)
    if (!s.index_of(label))
      throw std::invalid_argument("image maps unknown element '" + label + "'");
  auto phi = [&](std::size_t i) { return image.at(s.label(i)); };

  AxiomReport report;
  if (!s.has_add()) {
    report.add("additivity", AxiomResult::not_applicable("add table absent"));
  } else {
    AxiomResult additivity = AxiomResult::holds();
    for (std::size_t a = 0; a < s.size() && additivity.status == AxiomStatus::Holds; ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        const auto ab = s.add(a, b);
        if (!ab) continue;  // undefined cells are closure's business
        if (!(phi(*ab) == phi(a) + phi(b))) {
          additivity = AxiomResult::fails(detail::labels_of(s, {a, b}),
                                          "phi(" + s.label(a) + " + " + s.label(b) + ") = phi(" +
                                              s.label(*ab) + ") = " + phi(*ab).str() + " but " +
                                              phi(a).str() + " + " + phi(b).str() + " = " +
                                              (phi(a) + phi(b)).str());
          break;
        }
      }
    report.add("additivity", additivity);
  }

  if (!s.has_order()) {
    report.add("order preservation", AxiomResult::not_applicable("order absent"));
  } else {
    AxiomResult preservation = AxiomResult::holds();
    for (std::size_t a = 0; a < s.size() && preservation.status == AxiomStatus::Holds; ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a == b || !s.order_less(a, b)) continue;
        if (!(phi(a) < phi(b))) {
          preservation = AxiomResult::fails(detail::labels_of(s, {a, b}),
                                            s.label(a) + " < " + s.label(b) + " but phi values " +
                                                phi(a).str() + " and " + phi(b).str() +
                                                " are not increasing");
          break;
        }
      }
    report.add("order preservation", preservation);
  }
  return report;
}

// Replays a Fails witness against the structure; used by self-tests to
// confirm every reported witness is a genuine violation. Returns false for
// results that are not Fails or witnesses that do not violate the axiom.
inline bool replay_witness(const FiniteStructure& s, std::string_view axiom, const AxiomResult& result,
                           const std::map<std::string, Rational>* image = nullptr) {
  if (result.status != AxiomStatus::Fails) return false;
  std::vector<std::size_t> w;
  for (const auto& label : result.witness) {
    auto idx = s.index_of(label);
    if (!idx) return false;
    w.push_back(*idx);
  }
  auto defined_ne = [](std::optional<std::size_t> x, std::optional<std::size_t> y) {
    return x && y && *x != *y;
  };
  if (axiom == "closure" || axiom == "additive closure")
    return w.size() == 2 && !s.add(w[0], w[1]).has_value();
  if (axiom == "multiplicative closure") {
    if (w.size() != 2) return false;
    const auto r = s.mul(w[0], w[1]);
    return !r || (s.zero_index() && *r == *s.zero_index());
  }
  if (axiom == "associativity" || axiom == "additive associativity") {
    if (w.size() != 3) return false;
    const auto ab = s.add(w[0], w[1]);
    const auto bc = s.add(w[1], w[2]);
    if (!ab || !bc) return false;
    return defined_ne(s.add(*ab, w[2]), s.add(w[0], *bc));
  }
  if (axiom == "multiplicative associativity") {
    if (w.size() != 3) return false;
    const auto ab = s.mul(w[0], w[1]);
    const auto bc = s.mul(w[1], w[2]);
    if (!ab || !bc) return false;
    return defined_ne(s.mul(*ab, w[2]), s.mul(w[0], *bc));
  }
  if (axiom == "additive commutativity")
    return w.size() == 2 && defined_ne(s.add(w[0], w[1]), s.add(w[1], w[0]));
  if (axiom == "multiplicative commutativity")
    return w.size() == 2 && defined_ne(s.mul(w[0], w[1]), s.mul(w[1], w[0]));
  if (axiom == "inverses" || axiom == "additive inverses" || axiom == "multiplicative inverses") {
    // Witness is an element with no two-sided inverse about the relevant
    // identity; replay by re-running the search for that single element.
    if (w.size() != 1) return false;
    const bool mul_side = axiom == "multiplicative inverses";
    const detail::OpFn op = mul_side ? detail::mul_fn : detail::add_fn;
    auto u = detail::full_universe(s.size());
    std::optional<std::size_t> e;
    if (mul_side) {
      std::optional<std::size_t> zero = s.zero_index();
      if (!zero) zero = detail::find_identity(s, detail::add_fn, u);
      if (!zero) return false;
      u = detail::universe_without(s.size(), *zero);
      e = s.one_index();
      if (!e) e = detail::find_identity(s, detail::mul_fn, u);
    } else {
      e = detail::find_identity(s, detail::add_fn, u);
    }
    if (!e) return false;
    for (std::size_t b : u.members) {
      const auto ab = op(s, w[0], b);
      const auto ba = op(s, b, w[0]);
      if (ab && ba && *ab == *e && *ba == *e) return false;
    }
    return true;
  }
  if (axiom == "distributivity") {
    if (w.size() != 3) return false;
    const auto bc = s.add(w[1], w[2]);
    const auto ab = s.mul(w[0], w[1]);
    const auto ac = s.mul(w[0], w[2]);
    if (bc && ab && ac && defined_ne(s.mul(w[0], *bc), s.add(*ab, *ac))) return true;
    const auto ab2 = s.add(w[0], w[1]);
    const auto ac2 = s.mul(w[0], w[2]);
    const auto bc2 = s.mul(w[1], w[2]);
    return ab2 && ac2 && bc2 && defined_ne(s.mul(*ab2, w[2]), s.add(*ac2, *bc2));
  }
  if (axiom == "translation invariance") {
    if (w.size() != 3 || !s.has_order() || !s.order_less(w[0], w[1])) return false;
    const auto ac = s.add(w[0], w[2]);
    const auto bc = s.add(w[1], w[2]);
    return ac && bc && !s.order_less(*ac, *bc);
  }
  if (axiom == "positivity closure") {
    if (w.size() != 2 || !s.has_order() || !s.zero_index()) return false;
    const std::size_t zero = *s.zero_index();
    if (!s.order_less(zero, w[0]) || !s.order_less(zero, w[1])) return false;
    const auto ab = s.mul(w[0], w[1]);
    return ab && !s.order_less(zero, *ab);
  }
  if (axiom == "additivity") {
    if (w.size() != 2 || !image) return false;
    const auto ab = s.add(w[0], w[1]);
    if (!ab) return false;
    auto phi = [&](std::size_t i) { return image->at(s.label(i)); };
    return !(phi(*ab) == phi(w[0]) + phi(w[1]));
  }
  if (axiom == "order preservation") {
    if (w.size() != 2 || !image || !s.has_order() || !s.order_less(w[0], w[1])) return false;
    auto phi = [&](std::size_t i) { return image->at(s.label(i)); };
    return !(phi(w[0]) < phi(w[1]));
  }
  return false;
}

// Structure file format, by section:
//
//   [carrier]   one label per line
//   [add]       lines "a,b,c" meaning a + b = c; absent pairs are Undefined
//   [mul]       lines "a,b,c" meaning a * b = c
//   [order]     labels ascending, each exactly once
//   [zero]      single label
//   [one]       single label
//
// '#' lines and blank lines are ignored. [carrier] is mandatory and must
// come first; the other sections are optional.
inline FiniteStructure parse_structure(std::istream& in, std::string_view source) {
  std::vector<std::string> carrier;
  std::optional<FiniteStructure::OpTable> add_table, mul_table;
  std::optional<std::vector<std::size_t>> order;
  std::optional<std::size_t> zero, one;

  enum class Section { None, Carrier, Add, Mul, Order, Zero, One };
  Section section = Section::None;

  auto index_of = [&](std::string_view label, std::size_t line_no) {
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == label) return i;
    detail::fail_at(source, line_no, "unknown carrier element '" + std::string(label) + "'");
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '[') {
      if (t == "[carrier]") section = Section::Carrier;
      else if (t == "[add]") section = Section::Add;
      else if (t == "[mul]") section = Section::Mul;
      else if (t == "[order]") section = Section::Order;
      else if (t == "[zero]") section = Section::Zero;
      else if (t == "[one]") section = Section::One;
      else detail::fail_at(source, line_no, "unknown section " + std::string(t));
      if (section != Section::Carrier && carrier.empty())
        detail::fail_at(source, line_no, "[carrier] must come first");
      if (section == Section::Add && !add_table) add_table.emplace();
      if (section == Section::Mul && !mul_table) mul_table.emplace();
      if (section == Section::Order && !order) order.emplace();
      continue;
    }
    switch (section) {
      case Section::None:
        detail::fail_at(source, line_no, "content before any section header");
      case Section::Carrier: {
        for (const auto& existing : carrier)
          if (existing == t) detail::fail_at(source, line_no, "duplicate carrier element '" + std::string(t) + "'");
        if (t.find(',') != std::string_view::npos)
          detail::fail_at(source, line_no, "carrier labels must not contain ','");
        carrier.emplace_back(t);
        break;
      }
      case Section::Add:
      case Section::Mul: {
        auto parts = detail::split(t, ',');
        if (parts.size() != 3) detail::fail_at(source, line_no, "expected 'a,b,c' meaning a op b = c");
        const std::size_t a = index_of(detail::trim(parts[0]), line_no);
        const std::size_t b = index_of(detail::trim(parts[1]), line_no);
        const std::size_t c = index_of(detail::trim(parts[2]), line_no);
        auto& table = section == Section::Add ? add_table : mul_table;
        if (table->empty()) table->assign(carrier.size() * carrier.size(), std::nullopt);
        if (table->size() != carrier.size() * carrier.size())
          detail::fail_at(source, line_no, "operation rows must follow the complete [carrier] section");
        auto& cell = (*table)[a * carrier.size() + b];
        if (cell) detail::fail_at(source, line_no, "cell (" + std::string(detail::trim(parts[0])) + "," +
                                                       std::string(detail::trim(parts[1])) + ") defined twice");
        cell = c;
        break;
      }
      case Section::Order:
        order->push_back(index_of(t, line_no));
        break;
      case Section::Zero:
        if (zero) detail::fail_at(source, line_no, "[zero] takes a single label");
        zero = index_of(t, line_no);
        break;
      case Section::One:
        if (one) detail::fail_at(source, line_no, "[one] takes a single label");
        one = index_of(t, line_no);
        break;
    }
  }
  if (carrier.empty()) detail::fail_at(source, line_no, "missing [carrier] section");
  if (add_table && add_table->empty()) add_table->assign(carrier.size() * carrier.size(), std::nullopt);
  if (mul_table && mul_table->empty()) mul_table->assign(carrier.size() * carrier.size(), std::nullopt);
  try {
    return FiniteStructure(std::move(carrier), std::move(add_table), std::move(mul_table),
                           std::move(order), zero, one);
  } catch (const std::invalid_argument& e) {
    detail::fail_at(source, line_no, e.what());
  }
}

inline FiniteStructure load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_structure(in, path.string());
}

// Image map file: lines "label,value" with value an integer, fraction
// "p/q" or plain decimal.
inline std::map<std::string, Rational> parse_image_map(std::istream& in, std::string_view source) {
  std::map<std::string, Rational> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto parts = detail::split(t, ',');
    if (parts.size() != 2) detail::fail_at(source, line_no, "expected 'label,value'");
    auto label = detail::trim(parts[0]);
    auto value = Rational::parse(parts[1]);
    if (label.empty()) detail::fail_at(source, line_no, "empty label");
    if (!value) detail::fail_at(source, line_no, "value must be an integer, fraction p/q or decimal");
    if (out.count(std::string(label))) detail::fail_at(source, line_no, "label mapped twice");
    out.emplace(std::string(label), *value);
  }
  if (out.empty()) detail::fail_at(source, line_no, "no image rows found");
  return out;
}

inline std::map<std::string, Rational> load_image_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string() + ": cannot open file");
  return parse_image_map(in, path.string());
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_ALGEBRA_HPP
