#include "hf/literal.hpp"

#include <cctype>
#include <vector>

namespace hf {
namespace {

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

void print_into(HFSet x, std::string& out) {
  out += '{';
  bool first = true;
  for (HFSet m : x.members()) {
    if (!first) out += ", ";
    first = false;
    print_into(m, out);
  }
  out += '}';
}

}  // namespace

HFSet parse_set_literal_at(std::string_view text, std::size_t& pos, const Limits& limits) {
  skip_ws(text, pos);
  if (pos >= text.size()) throw SyntaxError("expected a set literal", pos);
  if (text[pos] == '#') {
    const std::size_t start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected digits after '#'", start);
    return decode(Code::from_decimal(text.substr(start, pos - start)), limits);
  }
  if (text[pos] != '{') throw SyntaxError("expected '{' or '#'", pos);
  ++pos;
  std::vector<HFSet> members;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return from_children(members);
  }
  while (true) {
    members.push_back(parse_set_literal_at(text, pos, limits));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return from_children(members);
    }
    throw SyntaxError("expected ',' or '}'", pos);
  }
}

HFSet parse_set_literal(std::string_view text, const Limits& limits) {
  std::size_t pos = 0;
  HFSet out = parse_set_literal_at(text, pos, limits);
  skip_ws(text, pos);
  if (pos != text.size()) throw SyntaxError("trailing characters after set literal", pos);
  return out;
}

std::string print_set_literal(HFSet x) {
  std::string out;
  print_into(x, out);
  return out;
}

}  // namespace hf
