#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmwit/error.hpp"
#include "tmwit/natural.hpp"

namespace tmwit {

// ---------------------------------------------------------------------------
// Digit sums and the Thue-Morse bit
// ---------------------------------------------------------------------------

namespace detail {

// Repeated division; valid for every base >= 2, including 2.
inline Natural sum_digits_by_division(std::uint64_t base, Natural n) {
  std::uint64_t total = 0;
  while (!n.is_zero()) total += n.divmod_small(base);
  return Natural(total);
}

inline std::uint64_t sum_digits_by_division(std::uint64_t base, u128 n) {
  std::uint64_t total = 0;
  while (n != 0) {
    total += static_cast<std::uint64_t>(n % base);
    n /= base;
  }
  return total;
}

}  // namespace detail

inline Natural sum_digits(const Natural& base, const Natural& n) {
  if (base < Natural(2u)) throw precondition_error("invalid base: must be >= 2");
  if (base == Natural(2u)) return Natural(n.popcount());
  if (!base.fits_u64()) {
    // A base wider than 64 bits: n has at most a handful of digits.
    Natural total, rest = n;
    while (!rest.is_zero()) {
      total += rest % base;
      rest /= base;
    }
    return total;
  }
  return detail::sum_digits_by_division(base.to_u64(), n);
}

inline std::uint64_t sum_digits(std::uint64_t base, u128 n) {
  if (base < 2) throw precondition_error("invalid base: must be >= 2");
  if (base == 2) return popcount(n);
  return detail::sum_digits_by_division(base, n);
}

// t_n = s_2(n) mod 2.
inline unsigned thue_morse(u128 n) { return static_cast<unsigned>(popcount(n) & 1u); }
inline unsigned thue_morse(const Natural& n) { return static_cast<unsigned>(n.popcount() & 1u); }

// Hamming weight, under the name the lemma conditions use.
inline std::uint64_t weight(const Natural& n) { return n.popcount(); }

// ---------------------------------------------------------------------------
// Binary words
// ---------------------------------------------------------------------------

// A finite word over {0,1}, stored most-significant bit first.
//
// Two index conventions coexist: operator[] reads left to right (MSB-first,
// the display order), while bit_at(pos) reads from the right with position 0
// the least significant bit, which is how the run conditions are phrased.
class BinaryWord {
 public:
  BinaryWord() = default;

  // "1101" -> 1,1,0,1. Characters other than '0'/'1' are rejected.
  static BinaryWord from_string(std::string_view text) {
    BinaryWord w;
    w.bits_.reserve(text.size());
    for (char ch : text) {
      if (ch != '0' && ch != '1') throw precondition_error("binary word must contain only 0 and 1");
      w.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return w;
  }

  // bit^count; count = 0 gives the empty word.
  static BinaryWord repeat(unsigned bit, std::uint64_t count) {
    BinaryWord w;
    w.bits_.assign(count, static_cast<std::uint8_t>(bit & 1u));
    return w;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  unsigned operator[](std::size_t i) const { return bits_[i]; }
  unsigned bit_at(std::size_t pos) const { return bits_.at(bits_.size() - 1 - pos); }

  // s(w): number of 1 bits.
  std::uint64_t weight() const {
    return static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  BinaryWord& operator+=(const BinaryWord& o) {
    bits_.insert(bits_.end(), o.bits_.begin(), o.bits_.end());
    return *this;
  }
  friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a += b; }

  // Value read as a base-2 numeral; leading zeros are allowed.
  Natural value() const {
    Natural out;
    for (auto b : bits_) {
      out <<= 1;
      if (b) out += Natural(1u);
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// a^n in the usual word notation.
inline BinaryWord ones(std::uint64_t n) { return BinaryWord::repeat(1, n); }
inline BinaryWord zeros(std::uint64_t n) { return BinaryWord::repeat(0, n); }

// ell(k) = floor(log2 k) + 1, defined for k >= 1 only.
inline std::uint64_t word_length(const Natural& k) {
  if (k.is_zero()) throw precondition_error("word length of 0 is undefined");
  return k.bit_length();
}

// (k)_2: canonical word, leading bit 1.
inline BinaryWord to_word(const Natural& k) {
  const std::uint64_t len = word_length(k);
  std::string text(len, '0');
  for (std::uint64_t pos = 0; pos < len; ++pos)
    if (k.test_bit(pos)) text[len - 1 - pos] = '1';
  return BinaryWord::from_string(text);
}

// L_j(k): the j least significant bits of (k)_2. j = 0 yields the empty word.
inline BinaryWord lower_slice(const Natural& k, std::uint64_t j) {
  const std::uint64_t len = word_length(k);
  if (j > len) throw precondition_error("slice length exceeds word length");
  std::string text(j, '0');
  for (std::uint64_t pos = 0; pos < j; ++pos)
    if (k.test_bit(pos)) text[j - 1 - pos] = '1';
  return BinaryWord::from_string(text);
}

// U_j(k): the j most significant bits of (k)_2. j = 0 yields the empty word.
inline BinaryWord upper_slice(const Natural& k, std::uint64_t j) {
  const std::uint64_t len = word_length(k);
  if (j > len) throw precondition_error("slice length exceeds word length");
  std::string text(j, '0');
  for (std::uint64_t i = 0; i < j; ++i)
    if (k.test_bit(len - 1 - i)) text[i] = '1';
  return BinaryWord::from_string(text);
}

// ---------------------------------------------------------------------------
// Run decomposition of odd k
// ---------------------------------------------------------------------------

// Maximal runs of (k)_2 for odd k, read MSB-first. runs[0] is the leading
// ones-run and, k being odd, runs.back() is a ones-run too, so the count of
// runs is always odd.
//
// Accessors name the run lengths used by the case analysis:
//   r  leading ones-run                 s  zeros right after it
//   u  trailing ones-run                t  zeros right before it
//   v  ones-run right before the t-run  a  bit at position t+u+1 (LSB = 0)
// Each is empty when the run (or bit) does not exist.
class RunDecomposition {
 public:
  explicit RunDecomposition(std::vector<std::uint64_t> runs, std::uint64_t length)
      : runs_(std::move(runs)), length_(length) {}

  const std::vector<std::uint64_t>& runs() const { return runs_; }
  std::uint64_t length() const { return length_; }
  bool all_ones() const { return runs_.size() == 1; }

  std::optional<std::uint64_t> r() const { return runs_.front(); }
  std::optional<std::uint64_t> s() const {
    if (runs_.size() < 2) return std::nullopt;
    return runs_[1];
  }
  std::optional<std::uint64_t> u() const { return runs_.back(); }
  std::optional<std::uint64_t> t() const {
    if (runs_.size() < 2) return std::nullopt;
    return runs_[runs_.size() - 2];
  }
  std::optional<std::uint64_t> v() const {
    if (runs_.size() < 3) return std::nullopt;
    return runs_[runs_.size() - 3];
  }
  std::optional<unsigned> a() const {
    if (runs_.size() < 3) return std::nullopt;
    const std::uint64_t pos = *t() + *u() + 1;
    if (pos >= length_) return std::nullopt;
    return bit_at(pos);
  }

  // Bit at position pos counted from the least significant end.
  unsigned bit_at(std::uint64_t pos) const {
    std::uint64_t from_top = length_ - 1 - pos;
    unsigned bit = 1;
    for (auto len : runs_) {
      if (from_top < len) return bit;
      from_top -= len;
      bit ^= 1u;
    }
    throw precondition_error("bit position outside the word");
  }

  BinaryWord to_word() const {
    BinaryWord w;
    unsigned bit = 1;
    for (auto len : runs_) {
      w += BinaryWord::repeat(bit, len);
      bit ^= 1u;
    }
    return w;
  }

  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;

 private:
  std::vector<std::uint64_t> runs_;
  std::uint64_t length_;
};

inline RunDecomposition run_decompose(const Natural& k) {
  if (k.is_zero() || k.is_even()) throw precondition_error("run decomposition requires odd k >= 1");
  const std::uint64_t len = k.bit_length();
  std::vector<std::uint64_t> runs;
  bool current = true;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < len; ++i) {
    const bool bit = k.test_bit(len - 1 - i);
    if (bit == current) {
      ++count;
    } else {
      runs.push_back(count);
      current = bit;
      count = 1;
    }
  }
  runs.push_back(count);
  return RunDecomposition(std::move(runs), len);
}

// s_2(a 2^j - b) via s_2(a-1) + j - s_2(b-1), for a >= 1 and 1 <= b < 2^j.
inline Natural shifted_difference_digit_sum(const Natural& a, std::uint64_t j, const Natural& b) {
  if (a.is_zero()) throw precondition_error("shifted difference needs a >= 1");
  if (b.is_zero() || b >= Natural::power_of_two(j))
    throw precondition_error("shifted difference needs 1 <= b < 2^j");
  const Natural one(1u);
  return Natural((a - one).popcount() + j - (b - one).popcount());
}

}  // namespace tmwit
