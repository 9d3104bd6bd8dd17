#include "hf/set.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>

namespace hf {
namespace detail {

struct Node {
  std::vector<HFSet> members;
  std::optional<Code> code;
  std::uint32_t rank = 0;
  std::uint64_t id = 0;
  std::size_t hash = 0;
  mutable std::atomic<const Node*> powerset_memo{nullptr};
  mutable std::atomic<const Node*> sumset_memo{nullptr};
};

namespace {

constexpr std::size_t kShards = 64;
constexpr std::size_t kSmallCodes = std::size_t{1} << 16;

std::size_t key_hash(std::span<const HFSet> ms) noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL ^ ms.size();
  for (HFSet m : ms) {
    h ^= m.id() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Shard {
  std::mutex mu;
  std::unordered_multimap<std::size_t, const Node*> table;
  std::deque<Node> storage;
};

class Universe {
 public:
  static Universe& get() {
    static Universe u;
    return u;
  }

  const Node* empty_node() const noexcept { return empty_; }

  // members must already be in canonical order without duplicates.
  const Node* intern_sorted(std::vector<HFSet>&& members) {
    const std::size_t h = key_hash(members);
    Shard& shard = shards_[h % kShards];
    std::lock_guard lock(shard.mu);
    auto [lo, hi] = shard.table.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (std::ranges::equal(it->second->members, members)) return it->second;
    Node& n = shard.storage.emplace_back();
    n.hash = h;
    n.id = next_id_.fetch_add(1, std::memory_order_relaxed);
    std::uint32_t r = 0;
    bool codes_known = true;
    std::uint64_t max_code = 0;
    for (HFSet m : members) {
      r = std::max(r, m.rank() + 1);
      const Code* c = m.code();
      const auto v = c ? c->to_u64() : std::nullopt;
      if (!v || *v >= kCodeMemoBits) {
        codes_known = false;
      } else {
        max_code = std::max(max_code, *v);
      }
    }
    n.rank = r;
    if (codes_known) {
      Code code;
      if (!members.empty()) code.set_bit(static_cast<std::size_t>(max_code));
      for (HFSet m : members) code.set_bit(static_cast<std::size_t>(*m.code()->to_u64()));
      n.code = std::move(code);
    }
    n.members = std::move(members);
    shard.table.emplace(h, &n);
    return &n;
  }

  const Node* small(std::size_t code) {
    const Node* n = small_[code].load(std::memory_order_acquire);
    if (n) return n;
    std::vector<HFSet> ms;
    for (std::size_t i = 0; (code >> i) != 0; ++i)
      if ((code >> i) & 1U) ms.push_back(HFSet::from_node(small(i)));
    n = intern_sorted(std::move(ms));
    small_[code].store(n, std::memory_order_release);
    return n;
  }

 private:
  Universe() : small_(kSmallCodes) {
    empty_ = intern_sorted({});
    small_[0].store(empty_);
  }

  std::array<Shard, kShards> shards_;
  std::atomic<std::uint64_t> next_id_{0};
  const Node* empty_ = nullptr;
  std::vector<std::atomic<const Node*>> small_;
};

}  // namespace
}  // namespace detail

using detail::Node;
using detail::Universe;

HFSet::HFSet() noexcept : node_(Universe::get().empty_node()) {}
std::span<const HFSet> HFSet::members() const noexcept { return node_->members; }
std::size_t HFSet::size() const noexcept { return node_->members.size(); }
std::uint32_t HFSet::rank() const noexcept { return node_->rank; }
const Code* HFSet::code() const noexcept { return node_->code ? &*node_->code : nullptr; }
std::uint64_t HFSet::id() const noexcept { return node_->id; }

bool canonical_less(HFSet a, HFSet b) noexcept {
  if (a == b) return false;
  const Code* ca = a.code();
  const Code* cb = b.code();
  if (ca && cb) return *ca < *cb;
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  auto am = a.members();
  auto bm = b.members();
  std::size_t i = am.size();
  std::size_t j = bm.size();
  while (i > 0 && j > 0) {
    if (am[i - 1] == bm[j - 1]) {
      --i;
      --j;
      continue;
    }
    return canonical_less(am[i - 1], bm[j - 1]);
  }
  return j > 0;
}

namespace {

HFSet make_sorted(std::vector<HFSet>&& ms) { return HFSet::from_node(Universe::get().intern_sorted(std::move(ms))); }

HFSet make(std::vector<HFSet> ms) {
  std::sort(ms.begin(), ms.end(), canonical_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return make_sorted(std::move(ms));
}

}  // namespace

HFSet empty() { return HFSet{}; }

HFSet from_children(std::span<const HFSet> children) { return make({children.begin(), children.end()}); }

HFSet from_children(std::initializer_list<HFSet> children) { return make(children); }

Code encode(HFSet x, const Limits& limits) {
  const Code* c = x.code();
  if (!c || c->bit_length() > limits.max_code_bits)
    throw BudgetExceeded("Ackermann code exceeds the " + std::to_string(limits.max_code_bits) + "-bit budget");
  return *c;
}

HFSet decode(std::uint64_t n) {
  if (n < detail::kSmallCodes) return HFSet::from_node(Universe::get().small(n));
  return decode(Code{n});
}

HFSet decode(const Code& n, const Limits& limits) {
  if (n.bit_length() > limits.max_code_bits)
    throw BudgetExceeded("code of " + std::to_string(n.bit_length()) + " bits exceeds the budget");
  if (auto v = n.to_u64(); v && *v < detail::kSmallCodes) return decode(*v);
  std::vector<HFSet> ms;
  ms.reserve(n.popcount());
  n.for_each_set_bit([&](std::size_t i) { ms.push_back(decode(static_cast<std::uint64_t>(i))); });
  return make_sorted(std::move(ms));
}

bool mem(HFSet x, HFSet y) noexcept {
  const Code* cx = x.code();
  const Code* cy = y.code();
  if (cx && cy) {
    const auto i = cx->to_u64();
    return i && y.code()->test_bit(static_cast<std::size_t>(*i));
  }
  auto ms = y.members();
  return std::binary_search(ms.begin(), ms.end(), x, canonical_less);
}

bool is_subset(HFSet x, HFSet y) noexcept {
  if (x.size() > y.size()) return false;
  if (x.code() && y.code()) return x.code()->is_submask_of(*y.code());
  return std::ranges::all_of(x.members(), [&](HFSet m) { return mem(m, y); });
}

HFSet pair(HFSet x, HFSet y) { return make({x, y}); }

HFSet singleton(HFSet x) { return make_sorted({x}); }

HFSet sumset(HFSet x) {
  if (const Node* memo = x.node()->sumset_memo.load(std::memory_order_acquire)) return HFSet::from_node(memo);
  HFSet out;
  const bool coded = std::ranges::all_of(x.members(), [](HFSet m) { return m.code() != nullptr; });
  if (coded) {
    // Code law: code(U x) is the OR of the member codes.
    Code acc;
    for (HFSet m : x.members()) acc |= *m.code();
    out = decode(acc, Limits{kCodeMemoBits, Limits{}.max_members});
  } else {
    std::vector<HFSet> all;
    for (HFSet m : x.members()) all.insert(all.end(), m.members().begin(), m.members().end());
    out = make(std::move(all));
  }
  x.node()->sumset_memo.store(out.node(), std::memory_order_release);
  return out;
}

HFSet set_union(HFSet x, HFSet y) {
  std::vector<HFSet> all;
  std::ranges::set_union(x.members(), y.members(), std::back_inserter(all), canonical_less);
  return make_sorted(std::move(all));
}

HFSet set_difference(HFSet x, HFSet y) {
  std::vector<HFSet> out;
  std::ranges::set_difference(x.members(), y.members(), std::back_inserter(out), canonical_less);
  return make_sorted(std::move(out));
}

HFSet symmetric_difference(HFSet x, HFSet y) {
  std::vector<HFSet> out;
  std::ranges::set_symmetric_difference(x.members(), y.members(), std::back_inserter(out), canonical_less);
  return make_sorted(std::move(out));
}

HFSet powerset(HFSet x, const Limits& limits) {
  if (const Node* memo = x.node()->powerset_memo.load(std::memory_order_acquire)) return HFSet::from_node(memo);
  const std::size_t k = x.size();
  if (k >= 63 || (std::uint64_t{1} << k) > limits.max_members)
    throw BudgetExceeded("power set of a " + std::to_string(k) + "-element set exceeds the member budget");
  auto ms = x.members();
  std::vector<HFSet> subsets;
  subsets.reserve(std::size_t{1} << k);
  // Mask order is canonical order: the greatest member decides, as in Lex.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<HFSet> sub;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) sub.push_back(ms[i]);
    subsets.push_back(make_sorted(std::move(sub)));
  }
  HFSet out = make_sorted(std::move(subsets));
  x.node()->powerset_memo.store(out.node(), std::memory_order_release);
  return out;
}

std::uint32_t rank(HFSet x) noexcept { return x.rank(); }

std::optional<std::uint64_t> level_size(std::uint32_t m) noexcept {
  std::uint64_t size = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (size >= 64) return std::nullopt;
    size = std::uint64_t{1} << size;
  }
  return size;
}

HFSet materialize_level(std::uint32_t m, const Limits& limits) {
  const auto size = level_size(m);
  if (!size || *size > limits.max_members)
    throw BudgetExceeded("level V_" + std::to_string(m) + " is too large to materialize");
  // Levels are immutable and interned, so each is built once.
  static std::mutex mu;
  static std::vector<HFSet> built{HFSet{}};
  std::lock_guard<std::mutex> lock(mu);
  while (built.size() <= m) built.push_back(powerset(built.back(), limits));
  return built[m];
}

LevelRef level_of(HFSet x, const Limits& limits) {
  LevelRef ref;
  ref.index = x.rank() + 1;
  if (const auto size = level_size(ref.index); size && *size <= limits.max_members)
    ref.materialized = materialize_level(ref.index, limits);
  return ref;
}

bool is_level(HFSet s, const Limits& limits) {
  HFSet v;
  while (true) {
    if (!is_subset(v, s)) return false;
    if (v == s) return true;
    // P(v) has 2^|v| members and must fit inside s.
    if (v.size() >= 63 || (std::uint64_t{1} << v.size()) > s.size()) return false;
    v = powerset(v, limits);
  }
}

HFSet separate(HFSet y, const std::function<bool(HFSet)>& pred) {
  std::vector<HFSet> out;
  for (HFSet m : y.members())
    if (pred(m)) out.push_back(m);
  return make_sorted(std::move(out));
}

bool is_transitive(HFSet x) noexcept {
  for (HFSet m : x.members())
    for (HFSet c : m.members())
      if (!mem(c, x)) return false;
  return true;
}

bool is_ordinal(HFSet x) noexcept {
  if (!is_transitive(x)) return false;
  auto ms = x.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!mem(ms[i], ms[j]) && !mem(ms[j], ms[i])) return false;
  return true;
}

HFSet ordinal(std::uint64_t n, const Limits& limits) {
  if (n > limits.max_members) throw BudgetExceeded("ordinal " + std::to_string(n) + " exceeds the member budget");
  std::vector<HFSet> ms;
  ms.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    ms.push_back(make_sorted(std::vector<HFSet>(ms)));
  }
  return make_sorted(std::move(ms));
}

std::uint64_t ordinal_value(HFSet x) {
  if (!is_ordinal(x)) throw NotAnOrdinal("not a von Neumann ordinal");
  return x.size();
}

HFSet ord_succ(HFSet x) { return set_union(x, singleton(x)); }

HFSet ord_add(HFSet x, HFSet y, const Limits& limits) {
  return ordinal(ordinal_value(x) + ordinal_value(y), limits);
}

HFSet ord_mul(HFSet x, HFSet y, const Limits& limits) {
  const std::uint64_t a = ordinal_value(x);
  const std::uint64_t b = ordinal_value(y);
  if (a != 0 && b > limits.max_members / a) throw BudgetExceeded("ordinal product exceeds the member budget");
  return ordinal(a * b, limits);
}

HFSet ord_exp(HFSet x, HFSet y, const Limits& limits) {
  const std::uint64_t a = ordinal_value(x);
  const std::uint64_t b = ordinal_value(y);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b && r != 0; ++i) {
    if (a != 0 && r > limits.max_members / a) throw BudgetExceeded("ordinal power exceeds the member budget");
    r *= a;
  }
  return ordinal(r, limits);
}

}  // namespace hf
