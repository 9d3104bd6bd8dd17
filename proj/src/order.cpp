#include "hf/order.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "hf/literal.hpp"

namespace hf {

LinearOrder::LinearOrder(std::vector<HFSet> items) : items_(std::move(items)) {
  index_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (!index_.emplace(items_[i], i).second) throw std::invalid_argument("duplicate item in linear order");
}

std::optional<std::size_t> LinearOrder::index_of(HFSet x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

HFSet LinearOrder::field() const { return from_children(items_); }

LinearOrder LinearOrder::segment(HFSet from, HFSet to) const {
  const auto a = index_of(from);
  const auto b = index_of(to);
  if (!a || !b) throw NotASubset("segment endpoint is not in the ordering");
  if (*a > *b) return LinearOrder{};
  return LinearOrder(std::vector<HFSet>(items_.begin() + static_cast<std::ptrdiff_t>(*a),
                                        items_.begin() + static_cast<std::ptrdiff_t>(*b) + 1));
}

bool LinearOrder::is_prefix_of(const LinearOrder& other) const {
  return size() <= other.size() && std::equal(items_.begin(), items_.end(), other.items_.begin());
}

std::string LinearOrder::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ", ";
    out += print_set_literal(items_[i]);
  }
  return out + "]";
}

namespace {

// X as a bitmask over L-indices.
Code index_mask(const LinearOrder& L, HFSet X) {
  Code mask;
  for (HFSet m : X.members()) {
    const auto i = L.index_of(m);
    if (!i) throw NotASubset("set is not a subset of the ordering's field");
    mask.set_bit(*i);
  }
  return mask;
}

}  // namespace

bool lex_less(const LinearOrder& L, HFSet X, HFSet Y) {
  const Code x = index_mask(L, X);
  const Code y = index_mask(L, Y);
  if (x == y) return false;
  // The highest differing index is the L-greatest element of X △ Y.
  const std::size_t top = (x ^ y).bit_length() - 1;
  return y.test_bit(top);
}

LinearOrder lex_sort(const LinearOrder& L, std::vector<HFSet> subsets) {
  struct Keyed {
    Code mask;
    HFSet set;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(subsets.size());
  for (HFSet s : subsets) keyed.push_back({index_mask(L, s), s});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.mask == b.mask) return false;
    const std::size_t top = (a.mask ^ b.mask).bit_length() - 1;
    return b.mask.test_bit(top);
  });
  std::vector<HFSet> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(k.set);
  return LinearOrder(std::move(out));
}

namespace {

constexpr std::uint32_t kMaxCachedLevel = 5;

struct AckCache {
  std::mutex mu;
  std::array<std::optional<LinearOrder>, kMaxCachedLevel + 1> orders;
};

AckCache& ack_cache() {
  static AckCache c;
  return c;
}

}  // namespace

const LinearOrder& ack_order(std::uint32_t m, const Limits& limits) {
  const auto size = level_size(m);
  if (m > kMaxCachedLevel || !size || *size > limits.max_members)
    throw BudgetExceeded("Ack(V_" + std::to_string(m) + ") is too large to materialize");
  AckCache& cache = ack_cache();
  std::lock_guard lock(cache.mu);
  if (!cache.orders[0]) cache.orders[0] = LinearOrder{};
  for (std::uint32_t k = 1; k <= m; ++k) {
    if (cache.orders[k]) continue;
    const HFSet level = materialize_level(k, limits);
    std::vector<HFSet> subsets(level.members().begin(), level.members().end());
    // Shuffle so the sort does real work rather than confirming stored order.
    std::mt19937_64 rng(0x5eedULL + k);
    std::shuffle(subsets.begin(), subsets.end(), rng);
    cache.orders[k] = lex_sort(*cache.orders[k - 1], std::move(subsets));
  }
  return *cache.orders[m];
}

namespace {

bool contains_by_identity(HFSet s, HFSet x) {
  for (HFSet m : s.members())
    if (m == x) return true;
  return false;
}

}  // namespace

bool ack_less(HFSet x, HFSet y) {
  if (x == y) return false;
  if (x.rank() != y.rank()) return x.rank() < y.rank();
  std::optional<HFSet> best;
  bool best_in_y = false;
  auto consider = [&](HFSet m, bool in_y) {
    if (!best || ack_less(*best, m)) {
      best = m;
      best_in_y = in_y;
    }
  };
  if (x.size() + y.size() > 64) {
    std::unordered_set<HFSet> xs(x.members().begin(), x.members().end());
    std::unordered_set<HFSet> ys(y.members().begin(), y.members().end());
    for (HFSet m : x.members())
      if (!ys.contains(m)) consider(m, false);
    for (HFSet m : y.members())
      if (!xs.contains(m)) consider(m, true);
  } else {
    for (HFSet m : x.members())
      if (!contains_by_identity(y, m)) consider(m, false);
    for (HFSet m : y.members())
      if (!contains_by_identity(x, m)) consider(m, true);
  }
  return best_in_y;
}

bool ack_less_literal(HFSet x, HFSet y, const Limits& limits) {
  const LevelRef rx = level_of(x, limits);
  const LevelRef ry = level_of(y, limits);
  if (!ry.materialized || !rx.materialized)
    throw BudgetExceeded("R(y) cannot be materialized for the literal Ack comparison");
  if (!is_subset(*rx.materialized, *ry.materialized)) return false;
  const LinearOrder& order = ack_order(ry.index, limits);
  const auto ix = order.index_of(x);
  const auto iy = order.index_of(y);
  return *ix < *iy;
}

HFSet AckCursor::current() const {
  if (beyond_) return *beyond_;
  return ack_order(kMaxCachedLevel)[static_cast<std::size_t>(index_)];
}

void AckCursor::advance() {
  const LinearOrder& prefix = ack_order(kMaxCachedLevel);
  if (!beyond_ && index_ + 1 < prefix.size()) {
    ++index_;
    return;
  }
  beyond_ = successor_carry(current());
  ++index_;
}

Code position(HFSet x, const Limits& limits) {
  if (x.rank() + 1 <= 5) {
    const LinearOrder& order = ack_order(x.rank() + 1, limits);
    return Code{static_cast<std::uint64_t>(*order.index_of(x))};
  }
  Code total;
  for (HFSet m : x.members()) {
    const Code p = position(m, limits);
    const auto bit = p.to_u64();
    if (!bit || *bit >= limits.max_code_bits) throw BudgetExceeded("position exceeds the code budget");
    total.set_bit(static_cast<std::size_t>(*bit));
  }
  return total;
}

std::optional<HFSet> successor_literal(HFSet x, const Limits& limits) {
  const std::uint32_t m = x.rank() + 2;
  const auto size = level_size(m);
  if (m > kMaxCachedLevel || !size || *size > limits.max_members) return std::nullopt;
  const LinearOrder& order = ack_order(m, limits);
  const std::size_t i = *order.index_of(x);
  // x ∈ R(x) ⊆ P(R(x)) and is never the last element of Ack(P(R(x))).
  return order[i + 1];
}

HFSet successor_carry(HFSet x) {
  AckCursor cursor;
  std::vector<HFSet> below;
  while (mem(cursor.current(), x)) {
    below.push_back(cursor.current());
    cursor.advance();
  }
  std::vector<HFSet> out;
  out.reserve(x.size() + 1 - below.size());
  for (HFSet m : x.members())
    if (std::find(below.begin(), below.end(), m) == below.end()) out.push_back(m);
  out.push_back(cursor.current());
  return from_children(out);
}

HFSet successor_a(HFSet x, const Limits& limits) {
  if (auto s = successor_literal(x, limits)) return *s;
  return successor_carry(x);
}

std::string Numeral::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out += b ? '1' : '0';
  return out;
}

Numeral Numeral::parse(std::string_view text) {
  Numeral n;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("numeral digits must be 0 or 1");
    n.bits.push_back(c == '1');
  }
  return n;
}

Numeral numeral(HFSet x, const Limits& limits) {
  const Code p = position(x, limits);
  const auto n = p.to_u64();
  if (!n || *n >= limits.max_members) throw BudgetExceeded("numeral longer than the enumeration budget");
  Numeral out;
  out.bits.reserve(static_cast<std::size_t>(*n) + 1);
  AckCursor cursor;
  for (std::uint64_t i = 0; i <= *n; ++i) {
    out.bits.push_back(mem(cursor.current(), x) ? 1 : 0);
    if (i < *n) cursor.advance();
  }
  return out;
}

Code numeral_value(const Numeral& n) {
  Code out;
  for (std::size_t i = 0; i < n.bits.size(); ++i)
    if (n.bits[i]) out.set_bit(i);
  return out;
}

Code segment_card(HFSet x, const Limits& limits) {
  if (x == empty()) return Code{};
  AckCursor cursor;
  std::uint64_t count = 0;
  cursor.advance();
  while (true) {
    ++count;
    if (cursor.current() == x) return Code{count};
    if (count >= limits.max_members) throw BudgetExceeded("segment longer than the enumeration budget");
    cursor.advance();
  }
}

}  // namespace hf
