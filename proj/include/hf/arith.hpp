#pragma once

// The arithmetic structure ⟨V, 0_a, <_a, S_a, +_a, ×_a, Exp_a⟩ on sets.
//
// Literal mode follows the order-segment definition: the field of the segment
// [{∅}, ..., z] must be cardinally equivalent to the cardinal sum (product,
// function space) of the operands' segment fields, and z is found by walking
// the Ack enumeration. Fast mode computes on codes.

#include <cstdint>

#include "hf/set.hpp"

namespace hf {

struct ArithMode {
  enum class Kind { literal, fast };
  Kind kind = Kind::fast;
  // Literal mode accepts operands whose codes are at most this value.
  std::uint64_t literal_cutoff = 64;

  static ArithMode literal(std::uint64_t cutoff = 64) { return {Kind::literal, cutoff}; }
  static ArithMode fast() { return {Kind::fast, 64}; }
};

// Field([{∅}, ..., x]) in Ack order; ∅ for x = ∅.
HFSet segment_field(HFSet x, const Limits& limits = {});

HFSet zero_a();
// Literal mode throws BudgetExceeded when an operand is above the cutoff.
HFSet add_a(HFSet x, HFSet y, ArithMode mode = {}, const Limits& limits = {});
HFSet mul_a(HFSet x, HFSet y, ArithMode mode = {}, const Limits& limits = {});
HFSet exp_a(HFSet x, HFSet y, ArithMode mode = {}, const Limits& limits = {});
bool less_a(HFSet x, HFSet y);
HFSet succ_a(HFSet x, const Limits& limits = {});

}  // namespace hf
