#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tmwit/digitcore.hpp"
#include "tmwit/error.hpp"
#include "tmwit/natural.hpp"
#include "tmwit/query.hpp"

// Brute-force ground truth. Nothing in here consults the case analysis in
// witness.hpp; every answer comes from scanning n = 1, 2, 3, ... in order.

namespace tmwit {

struct SearchBound {
  enum class Policy { Theorem, Explicit, PropBound };
  Natural limit;
  Policy policy = Policy::Explicit;

  // k + 4; only meaningful for the parity-1, base-2 problem.
  static SearchBound theorem(const Natural& k) { return {k + Natural(4u), Policy::Theorem}; }
  static SearchBound explicit_limit(Natural limit) { return {std::move(limit), Policy::Explicit}; }
  // b^r k, within which a solution exists whenever gcd(b-1, r) = 1.
  static SearchBound prop_bound(const GenBaseQuery& q) {
    return {Natural::pow(Natural(q.base()), q.modulus()) * q.k(), Policy::PropBound};
  }
};

namespace detail {

inline constexpr std::uint64_t kFastLimit = std::uint64_t{1} << 62;

// Least n in [1, limit] with parity(k n) == want, stepping the product by k.
// Both k and limit must be below 2^62 so k * limit fits in 124 bits.
inline std::optional<std::uint64_t> first_parity_fast(std::uint64_t k, std::uint64_t limit, unsigned want) {
  u128 product = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    product += k;
    if (thue_morse(product) == want) return n;
  }
  return std::nullopt;
}

inline std::optional<Natural> first_parity_wide(const Natural& k, const Natural& limit, unsigned want) {
  Natural product;
  for (Natural n(1u); n <= limit; ++n) {
    product += k;
    if (thue_morse(product) == want) return n;
  }
  return std::nullopt;
}

inline std::optional<Natural> first_parity(const Natural& k, const Natural& limit, unsigned want) {
  if (k < Natural(kFastLimit) && limit < Natural(kFastLimit)) {
    auto n = first_parity_fast(k.to_u64(), limit.to_u64(), want);
    if (!n) return std::nullopt;
    return Natural(*n);
  }
  return first_parity_wide(k, limit, want);
}

// f(k) on the arbitrary-precision path only; exposed so tests can compare it
// against the machine-word path.
inline Natural f_exact_wide(const Natural& k) {
  const SearchBound bound = SearchBound::theorem(k);
  if (auto n = first_parity_wide(k, bound.limit, 1)) return *n;
  throw theorem_violation("no n <= k + 4 with t_{kn} = 1 for k = " + k.to_string());
}

}  // namespace detail

// f(k) = min{n >= 1 : t_{kn} = 1}.
inline Natural f_exact(const Natural& k) {
  if (k.is_zero()) throw precondition_error("k must be >= 1");
  const SearchBound bound = SearchBound::theorem(k);
  if (auto n = detail::first_parity(k, bound.limit, 1)) return *n;
  throw theorem_violation("no n <= k + 4 with t_{kn} = 1 for k = " + k.to_string());
}

struct ZeroMinResult {
  Natural k;
  std::optional<Natural> n;       // empty on overflow
  bool exceeds_k_plus_2 = false;  // includes the overflow case
  bool overflow = false;          // nothing found up to 4k
};

// Least n >= 1 with t_{kn} = 0, searched up to 4k. The k + 2 bound is only
// conjectured, so exceeding it is reported, not thrown.
inline ZeroMinResult zero_min(const Natural& k) {
  if (k.is_zero()) throw precondition_error("k must be >= 1");
  ZeroMinResult out;
  out.k = k;
  out.n = detail::first_parity(k, k * Natural(4u), 0);
  if (!out.n) {
    out.overflow = true;
    out.exceeds_k_plus_2 = true;
  } else {
    out.exceeds_k_plus_2 = *out.n > k + Natural(2u);
  }
  return out;
}

// All n in [1, n_max] with t_{kn} = 1, ascending.
inline std::vector<Natural> enumerate_hits(const Natural& k, const Natural& n_max) {
  if (k.is_zero()) throw precondition_error("k must be >= 1");
  std::vector<Natural> hits;
  Natural product;
  for (Natural n(1u); n <= n_max; ++n) {
    product += k;
    if (thue_morse(product) == 1) hits.push_back(n);
  }
  return hits;
}

namespace detail {

// Next integer with the same number of set bits (Gosper). x must be nonzero.
inline u128 next_same_weight(u128 x) {
  const u128 low = x & (~x + 1);
  const u128 ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

inline unsigned parity_of_product(const Natural& k, std::optional<std::uint64_t> k64, u128 n) {
  if (k64 && (n >> 64) == 0) return thue_morse(static_cast<u128>(*k64) * static_cast<std::uint64_t>(n));
  return thue_morse(k * Natural(n));
}

}  // namespace detail

// Least n < 2^bit_limit with popcount(n) <= weight_cap and t_{kn} = 1.
// Numbers of each exact weight are visited in increasing order, so the first
// hit per weight is the least of its class; the answer is the least of those.
inline std::optional<Natural> min_weight_witness(const Natural& k, unsigned weight_cap, unsigned bit_limit) {
  if (k.is_zero()) throw precondition_error("k must be >= 1");
  if (weight_cap < 1 || weight_cap > 3) throw precondition_error("weight_cap must be 1, 2 or 3");
  if (bit_limit > 127) throw precondition_error("bit_limit must be <= 127");

  const auto k64 = k.try_u64();
  const u128 end = u128{1} << bit_limit;
  std::optional<u128> best;
  for (unsigned w = 1; w <= weight_cap && w <= bit_limit; ++w) {
    for (u128 n = (u128{1} << w) - 1; n < end; n = detail::next_same_weight(n)) {
      if (best && n >= *best) break;
      if (detail::parity_of_product(k, k64, n) == 1) {
        best = n;
        break;
      }
    }
  }
  if (!best) return std::nullopt;
  return Natural(*best);
}

namespace detail {

// Digit sums here always go through repeated division, base 2 included, so
// this search shares no code with the popcount-based f_exact.
inline std::optional<Natural> g_min_search(const GenBaseQuery& q, const Natural& limit) {
  const std::uint64_t b = q.base(), r = q.modulus(), c = q.target();
  if (q.k() < Natural(kFastLimit) && limit < Natural(kFastLimit)) {
    const std::uint64_t k = q.k().to_u64(), lim = limit.to_u64();
    u128 product = 0;
    for (std::uint64_t n = 1; n <= lim; ++n) {
      product += k;
      if (sum_digits_by_division(b, product) % r == c) return Natural(n);
    }
    return std::nullopt;
  }
  Natural product;
  for (Natural n(1u); n <= limit; ++n) {
    product += q.k();
    if (sum_digits_by_division(b, product).try_u64().value() % r == c) return n;
  }
  return std::nullopt;
}

}  // namespace detail

// Least n >= 1 with s_b(kn) = c (mod r). The residue field of the query is
// ignored; only a = 0 is searched exactly.
inline Natural g_min(const GenBaseQuery& q) {
  const SearchBound bound = SearchBound::prop_bound(q);
  if (auto n = detail::g_min_search(q, bound.limit)) return *n;
  throw theorem_violation("no n < b^r k with s_b(kn) = c (mod r) for k = " + q.k().to_string());
}

}  // namespace tmwit
