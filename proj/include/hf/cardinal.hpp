#pragma once

// Cardinal comparison by injections and the cardinal operations: tagged
// disjoint union, Cartesian product, and function spaces, all built from
// Kuratowski pairs.

#include <optional>
#include <utility>
#include <vector>

#include "hf/set.hpp"

namespace hf {

// {{a}, {a, b}}.
HFSet kpair(HFSet a, HFSet b);
// Inverse of kpair; nullopt when p is not a Kuratowski pair.
std::optional<std::pair<HFSet, HFSet>> kpair_unpack(HFSet p);

// A set of Kuratowski pairs with no repeated first coordinate.
class FunctionGraph {
 public:
  FunctionGraph() = default;
  // nullopt unless every member is a pair and the relation is functional.
  static std::optional<FunctionGraph> from_set(HFSet graph);
  // Throws std::invalid_argument on a repeated domain element.
  static FunctionGraph from_pairs(const std::vector<std::pair<HFSet, HFSet>>& pairs);

  HFSet graph() const noexcept { return graph_; }
  const std::vector<std::pair<HFSet, HFSet>>& pairs() const noexcept { return pairs_; }
  HFSet domain() const;
  HFSet range() const;
  std::optional<HFSet> apply(HFSet a) const;
  bool is_injective() const;
  bool is_total_on(HFSet dom) const { return domain() == dom; }
  bool maps_into(HFSet codomain) const;

 private:
  HFSet graph_;
  std::vector<std::pair<HFSet, HFSet>> pairs_;
};

// Throws BudgetExceeded when |x|·|y| exceeds limits.max_members.
HFSet product(HFSet x, HFSet y, const Limits& limits = {});

// x ≤_c y, decided by member counts.
bool inj_exists(HFSet x, HFSet y);
// Exhaustive search for an injection x → y; factorial time.
std::optional<FunctionGraph> find_injection(HFSet x, HFSet y);

bool card_le(HFSet x, HFSet y);
bool card_eq(HFSet x, HFSet y);
bool card_lt(HFSet x, HFSet y);

// (x × {∅}) ∪ (y × {{∅}}).
HFSet card_add(HFSet x, HFSet y, const Limits& limits = {});
// All total functions y → x. Throws BudgetExceeded when |x|^|y| exceeds
// limits.max_members.
HFSet card_exp(HFSet x, HFSet y, const Limits& limits = {});
// x ∪ {x}.
HFSet card_succ(HFSet x);

Code card(HFSet x);

}  // namespace hf
