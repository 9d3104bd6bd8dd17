#pragma once

// Lexicographic orderings of power sets, the Ack ordering of the cumulative
// hierarchy, binary numerals along it, successor, and order segments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hf/set.hpp"

namespace hf {

// An explicit finite linear ordering [x_0, ..., x_n] without duplicates.
class LinearOrder {
 public:
  LinearOrder() = default;
  // Throws std::invalid_argument on a repeated item.
  explicit LinearOrder(std::vector<HFSet> items);

  std::span<const HFSet> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const HFSet& operator[](std::size_t i) const { return items_[i]; }
  std::optional<std::size_t> index_of(HFSet x) const;
  bool contains(HFSet x) const { return index_.contains(x); }
  // Field(L) = {x_0, ..., x_n}.
  HFSet field() const;
  // [from, ..., to]_L inclusive. Throws NotASubset when an endpoint is absent.
  LinearOrder segment(HFSet from, HFSet to) const;
  bool is_prefix_of(const LinearOrder& other) const;

  std::string to_string() const;

 private:
  std::vector<HFSet> items_;
  std::unordered_map<HFSet, std::size_t> index_;
};

// X <_Lex(L) Y iff X != Y and the L-greatest element of X △ Y lies in Y.
// Throws NotASubset unless X, Y ⊆ Field(L).
bool lex_less(const LinearOrder& L, HFSet X, HFSet Y);

// Sorts the given subsets of Field(L) by Lex(L).
LinearOrder lex_sort(const LinearOrder& L, std::vector<HFSet> subsets);

// Ack(V_0) = [], Ack(V_{k+1}) = Lex(Ack(V_k)), computed literally by sorting
// the members of each level. Cached; throws BudgetExceeded past V_5 at the
// default budget.
const LinearOrder& ack_order(std::uint32_t m, const Limits& limits = {});

// x <_a y without materializing levels: rank first, then the ack-greatest
// element of x △ y decides. Uses neither codes nor the stored member order.
bool ack_less(HFSet x, HFSet y);

// x <_a y iff R(x) ⊆ R(y) and x precedes y in Ack(R(y)), on materialized
// levels. Throws BudgetExceeded when R(y) cannot be materialized.
bool ack_less_literal(HFSet x, HFSet y, const Limits& limits = {});

// Walks the Ack ordering of the universe from its least element. Within V_5
// the materialized ordering is read; beyond it each step applies the carry
// rule.
class AckCursor {
 public:
  AckCursor() = default;
  HFSet current() const;
  std::uint64_t index() const noexcept { return index_; }
  void advance();

 private:
  std::uint64_t index_ = 0;
  std::optional<HFSet> beyond_;
};

// Number of sets strictly <_a x. Literal index lookup for rank <= 4,
// otherwise the positional sum over members.
Code position(HFSet x, const Limits& limits = {});

// S_a(x): the element following x in Ack(P(R(x))).
HFSet successor_a(HFSet x, const Limits& limits = {});
// The scan of the materialized Ack(P(R(x))); nullopt when it cannot be built.
std::optional<HFSet> successor_literal(HFSet x, const Limits& limits = {});
// Carry rule: with k the least index such that x_k ∉ x, S_a(x) = (x \ {x_0..x_{k-1}}) ∪ {x_k}.
HFSet successor_carry(HFSet x);

// Num(x): bit i is 1 iff the i-th set in Ack order is a member of x, for
// i = 0 .. position(x). Little-endian; the last bit (x itself) is 0.
struct Numeral {
  std::vector<std::uint8_t> bits;

  std::string to_string() const;
  // Throws std::invalid_argument on characters other than 0/1.
  static Numeral parse(std::string_view text);
  friend bool operator==(const Numeral&, const Numeral&) = default;
};

// Throws BudgetExceeded when position(x) exceeds limits.max_members.
Numeral numeral(HFSet x, const Limits& limits = {});
Code numeral_value(const Numeral& n);

// |Field([{∅}, ..., x])| in Ack order; 0 for x = ∅.
Code segment_card(HFSet x, const Limits& limits = {});

}  // namespace hf
