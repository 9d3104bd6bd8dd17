#pragma once

// Textual set literals: `{}` is the empty set, `{a, b}` nests, and `#n` is
// decode(n) for a decimal natural n. Printing uses nested braces with members
// in canonical (code-ascending) order.

#include <cstddef>
#include <string>
#include <string_view>

#include "hf/set.hpp"

namespace hf {

// Throws SyntaxError (with offset) on malformed input.
HFSet parse_set_literal(std::string_view text, const Limits& limits = {});

// Parses one literal starting at text[pos]; advances pos past it.
HFSet parse_set_literal_at(std::string_view text, std::size_t& pos, const Limits& limits = {});

std::string print_set_literal(HFSet x);

}  // namespace hf
