#include "hf/arith.hpp"

#include <string>
#include <vector>

#include "hf/cardinal.hpp"
#include "hf/order.hpp"

namespace hf {
namespace {

// Function spaces up to this size are built outright; larger ones are
// counted by an odometer over the functions.
constexpr std::uint64_t kMaterializeFunctions = 4096;

void require_literal(HFSet x, const ArithMode& mode, const Limits& limits) {
  const Code c = encode(x, limits);
  if (c > Code{mode.literal_cutoff})
    throw BudgetExceeded("operand " + c.to_decimal() + " is outside the literal domain");
}

// Walks z along the Ack order, one step per element of the witness, and
// checks the final segment is cardinally equivalent to it.
template <typename Step>
HFSet walk_to(std::uint64_t count, HFSet witness_or_empty, bool have_witness, Step&& step, const Limits& limits) {
  AckCursor z;
  std::vector<HFSet> seg;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i + 1 > limits.max_members) throw BudgetExceeded("segment walk exceeds the enumeration budget");
    z.advance();
    seg.push_back(z.current());
    step();
  }
  if (have_witness && !card_eq(witness_or_empty, from_children(seg)))
    throw Error("segment walk disagrees with the cardinal witness");
  return z.current();
}

HFSet fast_result(const Code& c, const Limits& limits) { return decode(c, limits); }

}  // namespace

HFSet segment_field(HFSet x, const Limits& limits) {
  if (x == empty()) return empty();
  std::vector<HFSet> seg;
  AckCursor cursor;
  do {
    cursor.advance();
    seg.push_back(cursor.current());
    if (seg.size() > limits.max_members) throw BudgetExceeded("segment exceeds the member budget");
  } while (!(cursor.current() == x));
  return from_children(seg);
}

HFSet zero_a() { return empty(); }

HFSet add_a(HFSet x, HFSet y, ArithMode mode, const Limits& limits) {
  if (mode.kind == ArithMode::Kind::fast) return fast_result(encode(x, limits) + encode(y, limits), limits);
  require_literal(x, mode, limits);
  require_literal(y, mode, limits);
  const HFSet sum = card_add(segment_field(x, limits), segment_field(y, limits), limits);
  return walk_to(sum.size(), sum, true, [] {}, limits);
}

HFSet mul_a(HFSet x, HFSet y, ArithMode mode, const Limits& limits) {
  if (mode.kind == ArithMode::Kind::fast) return fast_result(encode(x, limits) * encode(y, limits), limits);
  require_literal(x, mode, limits);
  require_literal(y, mode, limits);
  const HFSet prod = product(segment_field(x, limits), segment_field(y, limits), limits);
  return walk_to(prod.size(), prod, true, [] {}, limits);
}

HFSet exp_a(HFSet x, HFSet y, ArithMode mode, const Limits& limits) {
  if (mode.kind == ArithMode::Kind::fast) {
    auto r = Code::pow(encode(x, limits), encode(y, limits), limits.max_code_bits);
    if (!r) throw BudgetExceeded("power exceeds the code budget");
    return fast_result(*r, limits);
  }
  require_literal(x, mode, limits);
  require_literal(y, mode, limits);
  const HFSet base = segment_field(x, limits);
  const HFSet expo = segment_field(y, limits);
  const std::size_t n = base.size();
  const std::size_t k = expo.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k && total != 0; ++i) {
    if (n != 0 && total > limits.max_members / n) throw BudgetExceeded("function space exceeds the member budget");
    total *= n;
  }
  if (total <= kMaterializeFunctions) {
    const HFSet space = card_exp(base, expo, limits);
    return walk_to(space.size(), space, true, [] {}, limits);
  }
  // One Ack step per function expo → base, enumerated as an odometer.
  std::vector<std::size_t> digit(k, 0);
  bool wrapped = false;
  HFSet z = walk_to(
      total, empty(), false,
      [&] {
        for (std::size_t i = 0; i < k; ++i) {
          if (++digit[i] < n) return;
          digit[i] = 0;
        }
        wrapped = true;
      },
      limits);
  if (!wrapped) throw Error("function odometer did not cover the function space");
  return z;
}

bool less_a(HFSet x, HFSet y) { return ack_less(x, y); }

HFSet succ_a(HFSet x, const Limits& limits) { return successor_a(x, limits); }

}  // namespace hf
