#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "tmwit/error.hpp"

namespace tmwit {

using u128 = unsigned __int128;

// Exact nonnegative integer of unbounded size.
//
// Backed by boost::multiprecision::cpp_int, which keeps small values in an
// inline buffer. Subtraction below zero throws instead of wrapping, so every
// value that exists is a valid natural number.
class Natural {
 public:
  using backend_type = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Natural(unsigned v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  Natural(int v) : v_(checked_signed(v)) {}  // NOLINT(google-explicit-constructor)
  Natural(std::int64_t v) : v_(checked_signed(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(u128 v) {
    v_ = static_cast<std::uint64_t>(v >> 64);
    v_ <<= 64;
    v_ += static_cast<std::uint64_t>(v);
  }

  // Decimal digits only; no sign, no whitespace, no empty string.
  static Natural parse(std::string_view text) {
    if (text.empty()) throw precondition_error("empty integer literal");
    Natural out;
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw precondition_error("not a nonnegative decimal integer: " + std::string(text));
      out.v_ *= 10;
      out.v_ += static_cast<unsigned>(ch - '0');
    }
    return out;
  }

  static Natural pow(const Natural& base, std::uint64_t exp) {
    Natural out(1u);
    Natural b = base;
    while (exp != 0) {
      if (exp & 1u) out.v_ *= b.v_;
      exp >>= 1;
      if (exp != 0) b.v_ *= b.v_;
    }
    return out;
  }

  static Natural power_of_two(std::uint64_t exp) {
    Natural out;
    boost::multiprecision::bit_set(out.v_, static_cast<unsigned>(exp));
    return out;
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_odd() const { return !v_.is_zero() && boost::multiprecision::bit_test(v_, 0); }
  bool is_even() const { return !is_odd(); }

  // Number of binary digits; 0 for zero.
  std::uint64_t bit_length() const {
    if (v_.is_zero()) return 0;
    return static_cast<std::uint64_t>(boost::multiprecision::msb(v_)) + 1;
  }

  bool test_bit(std::uint64_t pos) const {
    if (pos >= bit_length()) return false;
    return boost::multiprecision::bit_test(v_, static_cast<unsigned>(pos));
  }

  std::uint64_t popcount() const {
    const auto& be = v_.backend();
    const auto* limbs = be.limbs();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < be.size(); ++i)
      total += static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(limbs[i])));
    return total;
  }

  // Exponent of the largest power of two dividing a nonzero value.
  std::uint64_t countr_zero() const {
    if (v_.is_zero()) throw precondition_error("countr_zero of zero");
    return static_cast<std::uint64_t>(boost::multiprecision::lsb(v_));
  }

  bool fits_u64() const { return bit_length() <= 64; }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw precondition_error("value does not fit in 64 bits");
    return static_cast<std::uint64_t>(v_);
  }
  std::optional<std::uint64_t> try_u64() const {
    if (!fits_u64()) return std::nullopt;
    return static_cast<std::uint64_t>(v_);
  }

  std::string to_string() const { return v_.str(); }
  const backend_type& raw() const { return v_; }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator-=(const Natural& o) {
    if (v_ < o.v_) throw precondition_error("natural subtraction underflow");
    v_ -= o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  Natural& operator/=(const Natural& o) {
    if (o.is_zero()) throw precondition_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  Natural& operator%=(const Natural& o) {
    if (o.is_zero()) throw precondition_error("division by zero");
    v_ %= o.v_;
    return *this;
  }
  Natural& operator<<=(std::uint64_t s) { v_ <<= static_cast<unsigned>(s); return *this; }
  Natural& operator>>=(std::uint64_t s) { v_ >>= static_cast<unsigned>(s); return *this; }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }
  friend Natural operator<<(Natural a, std::uint64_t s) { return a <<= s; }
  friend Natural operator>>(Natural a, std::uint64_t s) { return a >>= s; }

  Natural& operator++() { ++v_; return *this; }

  // Quotient and remainder by a machine word, the inner step of base-b digit
  // extraction.
  std::uint64_t divmod_small(std::uint64_t d) {
    if (d == 0) throw precondition_error("division by zero");
    backend_type q, r;
    boost::multiprecision::divide_qr(v_, backend_type(d), q, r);
    v_ = std::move(q);
    return static_cast<std::uint64_t>(r);
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

 private:
  template <class S>
  static std::uint64_t checked_signed(S v) {
    if (v < 0) throw precondition_error("negative value for a natural number");
    return static_cast<std::uint64_t>(v);
  }

  backend_type v_;
};

inline Natural gcd(Natural a, Natural b) {
  while (!b.is_zero()) {
    Natural r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Floor-mod of a signed residue into [0, m).
inline std::uint64_t normalize_residue(std::int64_t c, std::uint64_t m) {
  if (m == 0) throw precondition_error("modulus must be positive");
  const auto sm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(c) % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t popcount(std::uint64_t v) { return static_cast<std::uint64_t>(std::popcount(v)); }
inline std::uint64_t popcount(u128 v) {
  return popcount(static_cast<std::uint64_t>(v)) + popcount(static_cast<std::uint64_t>(v >> 64));
}
inline std::uint64_t popcount(const Natural& v) { return v.popcount(); }

}  // namespace tmwit
