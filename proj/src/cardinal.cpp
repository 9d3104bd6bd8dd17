#include "hf/cardinal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hf {

HFSet kpair(HFSet a, HFSet b) { return pair(singleton(a), pair(a, b)); }

std::optional<std::pair<HFSet, HFSet>> kpair_unpack(HFSet p) {
  auto ms = p.members();
  if (ms.size() == 1) {
    if (ms[0].size() != 1) return std::nullopt;
    const HFSet a = ms[0].members()[0];
    return std::pair{a, a};
  }
  if (ms.size() != 2) return std::nullopt;
  HFSet small = ms[0];
  HFSet big = ms[1];
  if (small.size() != 1) std::swap(small, big);
  if (small.size() != 1 || big.size() != 2) return std::nullopt;
  const HFSet a = small.members()[0];
  if (!mem(a, big)) return std::nullopt;
  const HFSet b = big.members()[0] == a ? big.members()[1] : big.members()[0];
  return std::pair{a, b};
}

std::optional<FunctionGraph> FunctionGraph::from_set(HFSet graph) {
  FunctionGraph f;
  f.graph_ = graph;
  for (HFSet p : graph.members()) {
    auto ab = kpair_unpack(p);
    if (!ab) return std::nullopt;
    f.pairs_.push_back(*ab);
  }
  std::vector<HFSet> dom;
  for (auto& [a, b] : f.pairs_) dom.push_back(a);
  std::sort(dom.begin(), dom.end(), canonical_less);
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end()) return std::nullopt;
  return f;
}

FunctionGraph FunctionGraph::from_pairs(const std::vector<std::pair<HFSet, HFSet>>& pairs) {
  std::vector<HFSet> elems;
  elems.reserve(pairs.size());
  for (auto& [a, b] : pairs) elems.push_back(kpair(a, b));
  auto f = from_set(from_children(elems));
  if (!f || f->pairs_.size() != pairs.size()) throw std::invalid_argument("pairs do not form a function");
  return *f;
}

HFSet FunctionGraph::domain() const {
  std::vector<HFSet> out;
  for (auto& [a, b] : pairs_) out.push_back(a);
  return from_children(out);
}

HFSet FunctionGraph::range() const {
  std::vector<HFSet> out;
  for (auto& [a, b] : pairs_) out.push_back(b);
  return from_children(out);
}

std::optional<HFSet> FunctionGraph::apply(HFSet a) const {
  for (auto& [d, v] : pairs_)
    if (d == a) return v;
  return std::nullopt;
}

bool FunctionGraph::is_injective() const { return range().size() == pairs_.size(); }

bool FunctionGraph::maps_into(HFSet codomain) const {
  return std::ranges::all_of(pairs_, [&](const auto& p) { return mem(p.second, codomain); });
}

namespace {

void check_count(std::uint64_t a, std::uint64_t b, const Limits& limits, const char* what) {
  if (a != 0 && b > limits.max_members / a) throw BudgetExceeded(std::string(what) + " exceeds the member budget");
}

}  // namespace

HFSet product(HFSet x, HFSet y, const Limits& limits) {
  check_count(x.size(), y.size(), limits, "product");
  std::vector<HFSet> out;
  out.reserve(x.size() * y.size());
  for (HFSet a : x.members())
    for (HFSet b : y.members()) out.push_back(kpair(a, b));
  return from_children(out);
}

bool inj_exists(HFSet x, HFSet y) { return x.size() <= y.size(); }

std::optional<FunctionGraph> find_injection(HFSet x, HFSet y) {
  auto xs = x.members();
  auto ys = y.members();
  std::vector<std::size_t> choice(xs.size());
  std::vector<bool> used(ys.size(), false);
  // Depth-first over partial injections.
  std::size_t depth = 0;
  std::vector<std::size_t> next(xs.size() + 1, 0);
  while (true) {
    if (depth == xs.size()) {
      std::vector<std::pair<HFSet, HFSet>> pairs;
      for (std::size_t i = 0; i < xs.size(); ++i) pairs.emplace_back(xs[i], ys[choice[i]]);
      return FunctionGraph::from_pairs(pairs);
    }
    std::size_t j = next[depth];
    while (j < ys.size() && used[j]) ++j;
    if (j == ys.size()) {
      if (depth == 0) return std::nullopt;
      next[depth] = 0;
      --depth;
      used[choice[depth]] = false;
      next[depth] = choice[depth] + 1;
      continue;
    }
    choice[depth] = j;
    used[j] = true;
    next[depth] = j + 1;
    ++depth;
  }
}

bool card_le(HFSet x, HFSet y) { return inj_exists(x, y); }
bool card_eq(HFSet x, HFSet y) { return inj_exists(x, y) && inj_exists(y, x); }
bool card_lt(HFSet x, HFSet y) { return inj_exists(x, y) && !inj_exists(y, x); }

HFSet card_add(HFSet x, HFSet y, const Limits& limits) {
  if (x.size() + y.size() > limits.max_members) throw BudgetExceeded("cardinal sum exceeds the member budget");
  const HFSet zero = empty();
  const HFSet one = singleton(zero);
  return set_union(product(x, singleton(zero), limits), product(y, singleton(one), limits));
}

HFSet card_exp(HFSet x, HFSet y, const Limits& limits) {
  const std::size_t n = x.size();
  const std::size_t k = y.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k && total != 0; ++i) {
    check_count(total, n, limits, "function space");
    total *= n;
  }
  if (total == 0) return empty();
  auto xs = x.members();
  auto ys = y.members();
  std::vector<std::size_t> digit(k, 0);
  std::vector<HFSet> functions;
  functions.reserve(static_cast<std::size_t>(total));
  std::vector<HFSet> graph(k);
  for (std::uint64_t f = 0; f < total; ++f) {
    for (std::size_t i = 0; i < k; ++i) graph[i] = kpair(ys[i], xs[digit[i]]);
    functions.push_back(from_children(graph));
    for (std::size_t i = 0; i < k; ++i) {
      if (++digit[i] < n) break;
      digit[i] = 0;
    }
  }
  return from_children(functions);
}

HFSet card_succ(HFSet x) { return set_union(x, singleton(x)); }

Code card(HFSet x) { return Code{static_cast<std::uint64_t>(x.size())}; }

}  // namespace hf
