#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tmwit/digitcore.hpp"
#include "tmwit/error.hpp"
#include "tmwit/natural.hpp"
#include "tmwit/oracle.hpp"
#include "tmwit/parallel.hpp"
#include "tmwit/query.hpp"

namespace tmwit {

struct PropConstruction {
  std::uint64_t s = 0;  // least s >= 1 with k <= b^s
  std::uint64_t t = 0;  // exponent used, s <= t < s + r
  Natural n;            // b^t - 1
};

struct CorollaryConstruction {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  Natural n;  // k b^s (b^t - 1) + a
  // t selected against c - s_b(a); always true for a returned value.
  bool digit_sum_reading_holds = false;
  // Whether choosing t against c - a (the residue itself) would also have
  // produced a valid n.
  bool literal_reading_holds = false;
};

namespace detail {

// Least s >= 1 with k <= b^s.
inline std::uint64_t covering_exponent(std::uint64_t base, const Natural& k) {
  std::uint64_t s = 1;
  Natural power(base);
  while (power < k) {
    power *= Natural(base);
    ++s;
  }
  return s;
}

// Least t in [s, s + r) with (b - 1) t = target (mod r). Exists because
// b - 1 is invertible mod r.
inline std::uint64_t select_exponent(std::uint64_t base, std::uint64_t r, std::uint64_t s, std::uint64_t target) {
  const u128 step = (base - 1) % r;
  for (std::uint64_t t = s; t < s + r; ++t)
    if (step * (t % r) % r == target) return t;
  throw internal_consistency_error("no admissible exponent; gcd(b - 1, r) != 1?");
}

inline std::uint64_t digit_sum_mod(std::uint64_t base, const Natural& n, std::uint64_t r) {
  return (sum_digits(Natural(base), n) % Natural(r)).to_u64();
}

}  // namespace detail

// n = b^t - 1 with s_b(kn) = (b-1) t = c (mod r) and n < b^r k.
inline PropConstruction prop_construct(const GenBaseQuery& q) {
  if (q.residue()) throw precondition_error("prop_construct takes a query without a residue");
  PropConstruction out;
  out.s = detail::covering_exponent(q.base(), q.k());
  out.t = detail::select_exponent(q.base(), q.modulus(), out.s, q.target());
  out.n = Natural::pow(Natural(q.base()), out.t) - Natural(1u);
  return out;
}

// n = k b^s (b^t - 1) + a with n = a (mod k), s_b(n) = c (mod r) and
// n < b^(r+1) k^3.
//
// Since a < k <= b^s, the digits of a sit strictly below the shifted block,
// so s_b(n) = (b-1) t + s_b(a) and t is chosen against c - s_b(a).
inline CorollaryConstruction corollary_construct(const GenBaseQuery& q) {
  if (!q.residue()) throw precondition_error("corollary_construct needs a residue a");
  const std::uint64_t b = q.base(), r = q.modulus(), c = q.target();
  const Natural& a = *q.residue();
  const Natural& k = q.k();

  CorollaryConstruction out;
  out.s = detail::covering_exponent(b, k);
  const Natural shifted_k = k * Natural::pow(Natural(b), out.s);
  auto build = [&](std::uint64_t t) { return shifted_k * (Natural::pow(Natural(b), t) - Natural(1u)) + a; };

  const std::uint64_t a_digits = detail::digit_sum_mod(b, a, r);
  out.t = detail::select_exponent(b, r, out.s, (c + r - a_digits) % r);
  out.n = build(out.t);
  out.digit_sum_reading_holds = detail::digit_sum_mod(b, out.n, r) == c;
  if (!out.digit_sum_reading_holds)
    throw internal_consistency_error("corollary construction failed its digit-sum check");

  const std::uint64_t a_mod_r = (a % Natural(r)).to_u64();
  const std::uint64_t t_literal = detail::select_exponent(b, r, out.s, (c + r - a_mod_r) % r);
  out.literal_reading_holds = detail::digit_sum_mod(b, build(t_literal), r) == c;
  return out;
}

struct ConjectureReport {
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t c = 0;  // normalized into [0, r)
  std::uint64_t k_max = 0;
  std::uint64_t worst_k = 0;
  std::int64_t worst_gap = 0;  // max over k of g_min(k) - k
  Natural bound;               // b^(r+c)
  bool violated = false;       // worst_gap > bound

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

// Evaluates g_min for every k in [1, k_max] and compares the largest excess
// over k with b^(r+c). Ties go to the smallest k.
inline ConjectureReport conjecture_scan(std::uint64_t b, std::uint64_t r, std::int64_t c, std::uint64_t k_max,
                                        unsigned jobs = 1) {
  if (k_max < 1) throw precondition_error("k_max must be >= 1");
  const GenBaseQuery proto = GenBaseQuery::make(b, r, c, Natural(1u));

  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (k_max - 1) / kChunk + 1;
  std::vector<std::pair<std::int64_t, std::uint64_t>> best(chunks);
  for_each_chunk(1, k_max, kChunk, jobs, [&](std::uint64_t idx, std::uint64_t lo, std::uint64_t hi) {
    std::pair<std::int64_t, std::uint64_t> local{0, 0};
    for (std::uint64_t k = lo; k <= hi; ++k) {
      const Natural g = g_min(proto.with_k(Natural(k)));
      const std::int64_t gap = static_cast<std::int64_t>(g.to_u64()) - static_cast<std::int64_t>(k);
      if (local.second == 0 || gap > local.first) local = {gap, k};
    }
    best[idx] = local;
  });

  ConjectureReport rep;
  rep.b = b;
  rep.r = r;
  rep.c = proto.target();
  rep.k_max = k_max;
  rep.worst_gap = best.front().first;
  rep.worst_k = best.front().second;
  for (const auto& [gap, k] : best) {
    if (gap > rep.worst_gap) {
      rep.worst_gap = gap;
      rep.worst_k = k;
    }
  }
  rep.bound = Natural::pow(Natural(b), r + rep.c);
  rep.violated = rep.worst_gap > 0 && Natural(static_cast<std::uint64_t>(rep.worst_gap)) > rep.bound;
  return rep;
}

}  // namespace tmwit
