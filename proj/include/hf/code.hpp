#pragma once

// Arbitrary-precision natural numbers. A Code is read two ways: as a natural
// number (the arithmetic side) and as a finite bit set (bit i set iff the set
// coded by i is a member).

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hf {

class Code {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Code() = default;
  Code(std::uint64_t v) {  // NOLINT: implicit by design of numeric literals
    if (v != 0) words_.push_back(v);
  }

  // Throws std::invalid_argument on anything but a nonempty run of digits.
  static Code from_decimal(std::string_view digits);
  static Code pow2(std::size_t exponent);
  // 2^n - 1: the code of a set holding every code below n.
  static Code low_mask(std::size_t n);
  static Code from_words(std::vector<Word> words);

  std::string to_decimal() const;

  bool is_zero() const noexcept { return words_.empty(); }
  std::size_t bit_length() const noexcept;
  std::size_t popcount() const noexcept;
  bool test_bit(std::size_t i) const noexcept {
    const std::size_t w = i / kWordBits;
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
  }
  void set_bit(std::size_t i);
  std::optional<std::uint64_t> to_u64() const noexcept {
    if (words_.size() > 1) return std::nullopt;
    return words_.empty() ? 0 : words_[0];
  }
  std::span<const Word> words() const noexcept { return words_; }

  // Calls f(i) for every set bit i, ascending.
  template <class F>
  void for_each_set_bit(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int tz = std::countr_zero(bits);
        f(w * kWordBits + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  // Index of the lowest clear bit.
  std::size_t lowest_zero_bit() const noexcept;

  // True iff every set bit of *this is set in other.
  bool is_submask_of(const Code& other) const noexcept;

  friend bool operator==(const Code& a, const Code& b) noexcept { return a.words_ == b.words_; }
  friend std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept;

  Code& operator+=(const Code& o);
  // Throws std::domain_error when o > *this.
  Code& operator-=(const Code& o);
  Code& operator|=(const Code& o);
  Code& operator&=(const Code& o);
  Code& operator^=(const Code& o);
  Code& operator<<=(std::size_t k);
  Code& operator>>=(std::size_t k);

  friend Code operator+(Code a, const Code& b) { return a += b; }
  friend Code operator-(Code a, const Code& b) { return a -= b; }
  friend Code operator|(Code a, const Code& b) { return a |= b; }
  friend Code operator&(Code a, const Code& b) { return a &= b; }
  friend Code operator^(Code a, const Code& b) { return a ^= b; }
  friend Code operator<<(Code a, std::size_t k) { return a <<= k; }
  friend Code operator>>(Code a, std::size_t k) { return a >>= k; }
  friend Code operator*(const Code& a, const Code& b);

  // Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<Code, Code> divmod(const Code& a, const Code& b);

  // base^exponent; returns nullopt when the result would exceed max_bits.
  static std::optional<Code> pow(const Code& base, const Code& exponent, std::size_t max_bits);

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<Word> words_;  // little-endian, no high zero words
};

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept { return c.hash(); }
};

}  // namespace hf
