#include "hf/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "hf/simd/kernels.hpp"

namespace hf {
namespace {

using u128 = unsigned __int128;

const simd::KernelTable& kern() { return simd::active_kernels(); }

}  // namespace

Code Code::from_decimal(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty numeral");
  Code out;
  // Consume 19 digits at a time: 10^19 < 2^64.
  std::size_t i = 0;
  while (i < digits.size()) {
    const std::size_t take = std::min<std::size_t>(19, digits.size() - i);
    std::uint64_t chunk = 0;
    std::uint64_t scale = 1;
    for (std::size_t k = 0; k < take; ++k) {
      const char c = digits[i + k];
      if (c < '0' || c > '9') throw std::invalid_argument("not a decimal numeral: " + std::string(digits));
      chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
      scale *= 10;
    }
    Word carry = chunk;
    for (Word& w : out.words_) {
      const u128 t = static_cast<u128>(w) * scale + carry;
      w = static_cast<Word>(t);
      carry = static_cast<Word>(t >> 64);
    }
    if (carry) out.words_.push_back(carry);
    i += take;
  }
  out.trim();
  return out;
}

Code Code::pow2(std::size_t exponent) {
  Code out;
  out.set_bit(exponent);
  return out;
}

Code Code::low_mask(std::size_t n) {
  Code out;
  if (n == 0) return out;
  out.words_.assign((n + kWordBits - 1) / kWordBits, ~Word{0});
  if (const std::size_t rem = n % kWordBits; rem != 0) out.words_.back() = (Word{1} << rem) - 1;
  return out;
}

Code Code::from_words(std::vector<Word> words) {
  Code out;
  out.words_ = std::move(words);
  out.trim();
  return out;
}

std::string Code::to_decimal() const {
  if (words_.empty()) return "0";
  constexpr Word kChunk = 10'000'000'000'000'000'000ULL;  // 10^19
  std::vector<Word> n = words_;
  std::vector<Word> chunks;
  while (!n.empty()) {
    Word rem = 0;
    for (std::size_t i = n.size(); i-- > 0;) {
      const u128 cur = (static_cast<u128>(rem) << 64) | n[i];
      n[i] = static_cast<Word>(cur / kChunk);
      rem = static_cast<Word>(cur % kChunk);
    }
    while (!n.empty() && n.back() == 0) n.pop_back();
    chunks.push_back(rem);
  }
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(19 - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t Code::bit_length() const noexcept {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * kWordBits + (kWordBits - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

std::size_t Code::popcount() const noexcept { return kern().popcount(words_.data(), words_.size()); }

void Code::set_bit(std::size_t i) {
  const std::size_t w = i / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= Word{1} << (i % kWordBits);
}

std::size_t Code::lowest_zero_bit() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != ~Word{0}) return w * kWordBits + static_cast<std::size_t>(std::countr_one(words_[w]));
  return words_.size() * kWordBits;
}

bool Code::is_submask_of(const Code& other) const noexcept {
  if (words_.size() > other.words_.size()) return false;
  return !kern().any_andnot(words_.data(), other.words_.data(), words_.size());
}

std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  const std::ptrdiff_t i = kern().highest_diff(a.words_.data(), b.words_.data(), a.words_.size());
  if (i < 0) return std::strong_ordering::equal;
  const auto k = static_cast<std::size_t>(i);
  return a.words_[k] <=> b.words_[k];
}

Code& Code::operator+=(const Code& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  Word carry = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const u128 t = static_cast<u128>(words_[i]) + (i < o.words_.size() ? o.words_[i] : 0) + carry;
    words_[i] = static_cast<Word>(t);
    carry = static_cast<Word>(t >> 64);
    if (!carry && i >= o.words_.size()) break;
  }
  if (carry) words_.push_back(carry);
  return *this;
}

Code& Code::operator-=(const Code& o) {
  if (*this < o) throw std::domain_error("Code subtraction would be negative");
  Word borrow = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word sub = (i < o.words_.size() ? o.words_[i] : 0);
    const Word before = words_[i];
    const Word d1 = before - sub;
    const Word b1 = before < sub ? 1 : 0;
    const Word d2 = d1 - borrow;
    const Word b2 = d1 < borrow ? 1 : 0;
    words_[i] = d2;
    borrow = b1 | b2;
    if (!borrow && i + 1 >= o.words_.size()) break;
  }
  trim();
  return *this;
}

Code& Code::operator|=(const Code& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  kern().or_into(words_.data(), o.words_.data(), o.words_.size());
  return *this;
}

Code& Code::operator&=(const Code& o) {
  const std::size_t n = std::min(words_.size(), o.words_.size());
  words_.resize(n);
  kern().and_words(words_.data(), words_.data(), o.words_.data(), n);
  trim();
  return *this;
}

Code& Code::operator^=(const Code& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  kern().xor_words(words_.data(), words_.data(), o.words_.data(), o.words_.size());
  trim();
  return *this;
}

Code& Code::operator<<=(std::size_t k) {
  if (words_.empty() || k == 0) return *this;
  const std::size_t ws = k / kWordBits;
  const std::size_t bs = k % kWordBits;
  std::vector<Word> out(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + ws] |= words_[i] << bs;
    if (bs) out[i + ws + 1] |= words_[i] >> (kWordBits - bs);
  }
  words_ = std::move(out);
  trim();
  return *this;
}

Code& Code::operator>>=(std::size_t k) {
  const std::size_t ws = k / kWordBits;
  const std::size_t bs = k % kWordBits;
  if (ws >= words_.size()) {
    words_.clear();
    return *this;
  }
  std::vector<Word> out(words_.size() - ws, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = words_[i + ws] >> bs;
    if (bs && i + ws + 1 < words_.size()) out[i] |= words_[i + ws + 1] << (kWordBits - bs);
  }
  words_ = std::move(out);
  trim();
  return *this;
}

Code operator*(const Code& a, const Code& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Code::Word> out(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    Code::Word carry = 0;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      const u128 t = static_cast<u128>(a.words_[i]) * b.words_[j] + out[i + j] + carry;
      out[i + j] = static_cast<Code::Word>(t);
      carry = static_cast<Code::Word>(t >> 64);
    }
    out[i + b.words_.size()] += carry;
  }
  return Code::from_words(std::move(out));
}

std::pair<Code, Code> Code::divmod(const Code& a, const Code& b) {
  if (b.is_zero()) throw std::domain_error("Code division by zero");
  if (a < b) return {Code{}, a};
  if (b.popcount() == 1) {
    const std::size_t k = b.bit_length() - 1;
    return {a >> k, a & low_mask(k)};
  }
  if (b.words_.size() == 1) {
    const Word d = b.words_[0];
    std::vector<Word> q(a.words_.size(), 0);
    Word rem = 0;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      const u128 cur = (static_cast<u128>(rem) << 64) | a.words_[i];
      q[i] = static_cast<Word>(cur / d);
      rem = static_cast<Word>(cur % d);
    }
    return {from_words(std::move(q)), Code{rem}};
  }
  // Shift-subtract long division, one quotient bit per step.
  Code quotient;
  Code rem;
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    rem <<= 1;
    if (a.test_bit(i)) rem.set_bit(0);
    if (rem >= b) {
      rem -= b;
      quotient.set_bit(i);
    }
  }
  return {quotient, rem};
}

std::optional<Code> Code::pow(const Code& base, const Code& exponent, std::size_t max_bits) {
  if (exponent.is_zero()) return Code{1};
  if (base.is_zero()) return Code{};
  if (base == Code{1}) return Code{1};
  const auto e = exponent.to_u64();
  // base >= 2, so the result has at least exponent + 1 bits.
  if (!e || *e >= max_bits) return std::nullopt;
  if (base.bit_length() > 1 && (base.bit_length() - 1) * *e >= max_bits) return std::nullopt;
  if (base.popcount() == 1) {
    const std::size_t shift = (base.bit_length() - 1) * *e;
    return pow2(shift);
  }
  Code result{1};
  Code square = base;
  std::uint64_t k = *e;
  while (true) {
    if (k & 1U) {
      result = result * square;
      if (result.bit_length() > max_bits) return std::nullopt;
    }
    k >>= 1;
    if (!k) break;
    square = square * square;
    if (square.bit_length() > max_bits) return std::nullopt;
  }
  return result;
}

std::size_t Code::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ words_.size();
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

}  // namespace hf
