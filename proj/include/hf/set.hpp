#pragma once

// Hereditarily finite sets as hash-consed immutable DAG nodes.
//
// Every HFSet is interned: two HFSets are structurally equal iff they share a
// node, so Extensionality holds by construction and equality is a pointer
// compare. Members are kept in canonical ascending order, which is Ackermann
// code order whenever codes are known. A node memoizes its rank and, when its
// bit length fits the memo cap (2^20 bits), its Ackermann code. Sets whose
// code is astronomically large (Kuratowski pairs of pairs, function graphs)
// are still ordinary values; only encode() on them fails.
//
// Nodes are never freed. All functions here are safe to call concurrently.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hf/code.hpp"
#include "hf/errors.hpp"

namespace hf {

namespace detail {
struct Node;
}

class HFSet {
 public:
  // The empty set.
  HFSet() noexcept;

  std::span<const HFSet> members() const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::uint32_t rank() const noexcept;
  // Memoized Ackermann code, or nullptr when it exceeds the memo cap.
  const Code* code() const noexcept;
  // Creation-order identifier, stable for the life of the process.
  std::uint64_t id() const noexcept;

  friend bool operator==(HFSet a, HFSet b) noexcept { return a.node_ == b.node_; }

  const detail::Node* node() const noexcept { return node_; }
  static HFSet from_node(const detail::Node* n) noexcept { return HFSet(n); }

 private:
  explicit HFSet(const detail::Node* n) noexcept : node_(n) {}
  const detail::Node* node_;
};

struct HFSetHash {
  std::size_t operator()(HFSet s) const noexcept { return std::hash<const void*>{}(s.node()); }
};

// Bit-length cap for memoized codes.
inline constexpr std::size_t kCodeMemoBits = std::size_t{1} << 20;

// Canonical total order: Ackermann code order when both codes are memoized,
// otherwise rank first and then the greatest element of the symmetric
// difference (the same order, computed structurally).
bool canonical_less(HFSet a, HFSet b) noexcept;

HFSet empty();
HFSet from_children(std::span<const HFSet> children);
HFSet from_children(std::initializer_list<HFSet> children);

// Throws BudgetExceeded when the code is longer than limits.max_code_bits.
Code encode(HFSet x, const Limits& limits = {});
HFSet decode(const Code& n, const Limits& limits = {});
HFSet decode(std::uint64_t n);

bool mem(HFSet x, HFSet y) noexcept;
bool is_subset(HFSet x, HFSet y) noexcept;

HFSet pair(HFSet x, HFSet y);
HFSet singleton(HFSet x);
HFSet sumset(HFSet x);
HFSet set_union(HFSet x, HFSet y);
HFSet set_difference(HFSet x, HFSet y);
HFSet symmetric_difference(HFSet x, HFSet y);
// Throws BudgetExceeded when 2^|x| exceeds limits.max_members.
HFSet powerset(HFSet x, const Limits& limits = {});

std::uint32_t rank(HFSet x) noexcept;

// R(x) as a level index: V_{rank(x)+1}.
struct LevelRef {
  std::uint32_t index = 0;
  std::optional<HFSet> materialized;
};

// |V_m| (V_0 = {}, V_{m+1} = P(V_m)), or nullopt once it no longer fits 64 bits.
std::optional<std::uint64_t> level_size(std::uint32_t m) noexcept;

// Materializes R(x) when |R(x)| fits limits.max_members.
LevelRef level_of(HFSet x, const Limits& limits = {});
HFSet materialize_level(std::uint32_t m, const Limits& limits = {});
// The level predicate: S = V_n for the chain V_0 = {}, V_{k+1} = P(V_k), all inside S.
bool is_level(HFSet s, const Limits& limits = {});

HFSet separate(HFSet y, const std::function<bool(HFSet)>& pred);

bool is_transitive(HFSet x) noexcept;
bool is_ordinal(HFSet x) noexcept;

// Von Neumann ordinal n; throws BudgetExceeded when n > limits.max_members.
HFSet ordinal(std::uint64_t n, const Limits& limits = {});
// Throws NotAnOrdinal.
std::uint64_t ordinal_value(HFSet x);
HFSet ord_succ(HFSet x);
HFSet ord_add(HFSet x, HFSet y, const Limits& limits = {});
HFSet ord_mul(HFSet x, HFSet y, const Limits& limits = {});
HFSet ord_exp(HFSet x, HFSet y, const Limits& limits = {});

}  // namespace hf

template <>
struct std::hash<hf::HFSet> {
  std::size_t operator()(hf::HFSet s) const noexcept { return hf::HFSetHash{}(s); }
};
