#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmwit/digitcore.hpp"
#include "tmwit/error.hpp"
#include "tmwit/natural.hpp"

namespace tmwit {

// Leaf of the case analysis on the binary run structure of an odd k.
enum class CaseLabel {
  AllOnesOddLen,
  AllOnesEvenLen,
  Lemma1,
  Lemma2_rLtU,
  Lemma2_rGtU,
  Lemma2_Palindrome,
  Lemma2_vOdd,
  Lemma2_vEven_uGe4,
  Lemma2_u2_U4_1101,
  Lemma2_u2_U5_11000,
  Lemma2_u2_U5_11001,
  Lemma3_rLtU,
  Lemma3_rGtU,
  Lemma4,
  Lemma5_tSmall,
  Lemma5_tEq_u_s_eq,
  Lemma5_tEq_u_s_big,
  Lemma5_tGtU_gap,
  Lemma6_tSmall,
  Lemma6_tEqU_U2u,
  Lemma6_tEqU_U2u1_one,
  Lemma6_tEqU_U2u1_zero,
  Lemma6_tGtU,
};

inline constexpr std::array<std::pair<CaseLabel, std::string_view>, 23> kCaseNames{{
    {CaseLabel::AllOnesOddLen, "AllOnesOddLen"},
    {CaseLabel::AllOnesEvenLen, "AllOnesEvenLen"},
    {CaseLabel::Lemma1, "Lemma1"},
    {CaseLabel::Lemma2_rLtU, "Lemma2_rLtU"},
    {CaseLabel::Lemma2_rGtU, "Lemma2_rGtU"},
    {CaseLabel::Lemma2_Palindrome, "Lemma2_Palindrome"},
    {CaseLabel::Lemma2_vOdd, "Lemma2_vOdd"},
    {CaseLabel::Lemma2_vEven_uGe4, "Lemma2_vEven_uGe4"},
    {CaseLabel::Lemma2_u2_U4_1101, "Lemma2_u2_U4_1101"},
    {CaseLabel::Lemma2_u2_U5_11000, "Lemma2_u2_U5_11000"},
    {CaseLabel::Lemma2_u2_U5_11001, "Lemma2_u2_U5_11001"},
    {CaseLabel::Lemma3_rLtU, "Lemma3_rLtU"},
    {CaseLabel::Lemma3_rGtU, "Lemma3_rGtU"},
    {CaseLabel::Lemma4, "Lemma4"},
    {CaseLabel::Lemma5_tSmall, "Lemma5_tSmall"},
    {CaseLabel::Lemma5_tEq_u_s_eq, "Lemma5_tEq_u_s_eq"},
    {CaseLabel::Lemma5_tEq_u_s_big, "Lemma5_tEq_u_s_big"},
    {CaseLabel::Lemma5_tGtU_gap, "Lemma5_tGtU_gap"},
    {CaseLabel::Lemma6_tSmall, "Lemma6_tSmall"},
    {CaseLabel::Lemma6_tEqU_U2u, "Lemma6_tEqU_U2u"},
    {CaseLabel::Lemma6_tEqU_U2u1_one, "Lemma6_tEqU_U2u1_one"},
    {CaseLabel::Lemma6_tEqU_U2u1_zero, "Lemma6_tEqU_U2u1_zero"},
    {CaseLabel::Lemma6_tGtU, "Lemma6_tGtU"},
}};

inline std::string_view to_string(CaseLabel c) {
  for (const auto& [label, name] : kCaseNames)
    if (label == c) return name;
  return "?";
}

inline std::optional<CaseLabel> case_from_string(std::string_view name) {
  for (const auto& [label, n] : kCaseNames)
    if (n == name) return label;
  return std::nullopt;
}

// Run-length parameters that selected the case. Only those the case
// consults are set; ell is always set.
struct CaseParams {
  std::uint64_t ell = 0;
  std::optional<std::uint64_t> r, s, t, u, v;
  std::optional<unsigned> a;

  friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

struct Classification {
  CaseLabel label;
  CaseParams params;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Direct: the single candidate n satisfies t_{kn} = 1 on its own.
// Triple: candidates are {1, m, n} with t_{kn} = 1 + t_k + t_{km} (mod 2), so
// at least one of the three hits.
struct Guarantee {
  enum class Kind { Direct, Triple };
  Kind kind = Kind::Direct;
  std::optional<Natural> m;

  static Guarantee direct() { return {}; }
  static Guarantee triple(Natural m) { return {Kind::Triple, std::move(m)}; }

  friend bool operator==(const Guarantee&, const Guarantee&) = default;
};

struct Construction {
  std::vector<Natural> candidates;  // ascending, distinct
  Guarantee guarantee;
  Natural n;  // the constructed multiplier (the largest candidate for Triple arms)
};

struct WitnessCertificate {
  Natural k_input;
  Natural k_odd;
  std::uint64_t shift = 0;
  CaseLabel label = CaseLabel::AllOnesOddLen;
  CaseParams params;
  std::vector<Natural> candidates;
  Guarantee guarantee;
  Natural verified_hit;
  bool fallback_used = false;

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

// k = k_odd * 2^shift.
inline std::pair<Natural, std::uint64_t> reduce_to_odd(const Natural& k) {
  if (k.is_zero()) throw precondition_error("k must be >= 1");
  const std::uint64_t shift = k.countr_zero();
  return {k >> shift, shift};
}

// Total, deterministic classification of an odd k.
inline Classification classify(const Natural& k) {
  if (k.is_zero() || k.is_even()) throw precondition_error("classify requires odd k >= 1");
  const RunDecomposition d = run_decompose(k);
  CaseParams p;
  p.ell = d.length();

  if (d.all_ones()) {
    p.r = d.r();
    return {p.ell % 2 == 1 ? CaseLabel::AllOnesOddLen : CaseLabel::AllOnesEvenLen, p};
  }

  const std::uint64_t r = *d.r(), s = *d.s(), t = *d.t(), u = *d.u();
  p.r = r;
  p.s = s;
  p.t = t;
  p.u = u;

  if (u % 2 == 1) return {CaseLabel::Lemma1, p};

  if (t == 1) {
    if (r < u) return {CaseLabel::Lemma2_rLtU, p};
    if (r > u) return {CaseLabel::Lemma2_rGtU, p};
    if (d.runs().size() == 3 && s == 1) return {CaseLabel::Lemma2_Palindrome, p};
    const std::uint64_t v = *d.v();
    p.v = v;
    if (v % 2 == 1) return {CaseLabel::Lemma2_vOdd, p};
    if (u >= 4) return {CaseLabel::Lemma2_vEven_uGe4, p};
    // u = 2 and r = 2, so (k)_2 starts 110.
    const BinaryWord top5 = upper_slice(k, 5);
    if (top5[3] == 1) return {CaseLabel::Lemma2_u2_U4_1101, p};
    return {top5[4] == 0 ? CaseLabel::Lemma2_u2_U5_11000 : CaseLabel::Lemma2_u2_U5_11001, p};
  }

  if (r < u) return {CaseLabel::Lemma3_rLtU, p};
  if (r > u) return {CaseLabel::Lemma3_rGtU, p};
  if (s + 1 < u) return {CaseLabel::Lemma4, p};

  p.v = d.v();
  p.a = d.a();
  if (!p.a) throw internal_consistency_error("bit above the t-run is missing for k = " + k.to_string());
  if (*p.a == 0) {
    if (t < u) return {CaseLabel::Lemma5_tSmall, p};
    if (t == u) return {s + 1 == u ? CaseLabel::Lemma5_tEq_u_s_eq : CaseLabel::Lemma5_tEq_u_s_big, p};
    return {CaseLabel::Lemma5_tGtU_gap, p};
  }
  if (t < u) return {CaseLabel::Lemma6_tSmall, p};
  if (t == u) {
    if (s + 1 == u) return {CaseLabel::Lemma6_tEqU_U2u, p};
    if (s == u) return {CaseLabel::Lemma6_tEqU_U2u1_one, p};
    return {CaseLabel::Lemma6_tEqU_U2u1_zero, p};
  }
  return {CaseLabel::Lemma6_tGtU, p};
}

namespace detail {

inline Natural pow2(std::uint64_t e) { return Natural::power_of_two(e); }

// 2^e1 + 1 and 2^e1 + 2^e2 + 1.
inline Natural two_term(std::uint64_t e) { return pow2(e) + Natural(1u); }
inline Natural three_term(std::uint64_t e1, std::uint64_t e2) { return pow2(e1) + pow2(e2) + Natural(1u); }

inline Construction direct(Natural n) { return {{n}, Guarantee::direct(), n}; }

inline Construction triple(Natural m, Natural n) {
  std::vector<Natural> c{Natural(1u), m, n};
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return {std::move(c), Guarantee::triple(std::move(m)), std::move(n)};
}

}  // namespace detail

// The multiplier(s) attached to each case. (case, params) must be exactly
// what classify(k_odd) returns.
inline Construction construct_candidates(const Natural& k_odd, CaseLabel label, const CaseParams& params) {
  using namespace detail;
  if (k_odd.is_zero() || k_odd.is_even()) throw precondition_error("construct_candidates requires odd k >= 1");
  if (classify(k_odd) != Classification{label, params})
    throw internal_consistency_error("case/params do not match k = " + k_odd.to_string());

  const std::uint64_t ell = params.ell;
  const std::uint64_t r = params.r.value_or(0), t = params.t.value_or(0), u = params.u.value_or(0);

  switch (label) {
    case CaseLabel::AllOnesOddLen:
      return direct(Natural(1u));
    case CaseLabel::AllOnesEvenLen:
      return direct(k_odd + Natural(4u));
    case CaseLabel::Lemma1:
      return direct(two_term(ell - 1));
    case CaseLabel::Lemma2_rLtU:
    case CaseLabel::Lemma3_rLtU:
      return direct(two_term(ell - r - 1));
    case CaseLabel::Lemma2_rGtU:
    case CaseLabel::Lemma2_vEven_uGe4:
      return triple(Natural(3u), three_term(ell - u, ell - u - 1));
    case CaseLabel::Lemma2_Palindrome:
      return direct(Natural(3u));
    case CaseLabel::Lemma2_vOdd:
      return direct(two_term(ell - u - 1));
    case CaseLabel::Lemma2_u2_U4_1101:
      return direct(two_term(ell - 4));
    case CaseLabel::Lemma2_u2_U5_11000:
      return triple(Natural(3u), three_term(ell - 4, ell - 5));
    case CaseLabel::Lemma2_u2_U5_11001:
      // k * 5 * 2^(ell-5) + k: the top five bits 11001 of k line up under the
      // low bits of 5k.
      return triple(Natural(5u), three_term(ell - 3, ell - 5));
    case CaseLabel::Lemma3_rGtU:
      return direct(two_term(ell - u - 1));
    case CaseLabel::Lemma4:
      return triple(two_term(u - 1), three_term(ell - 1, u - 1));
    case CaseLabel::Lemma5_tSmall:
    case CaseLabel::Lemma5_tEq_u_s_eq:
      return direct(two_term(ell - (u + t)));
    case CaseLabel::Lemma5_tEq_u_s_big:
      return direct(two_term(ell - (t + u + 1)));
    case CaseLabel::Lemma5_tGtU_gap:
    case CaseLabel::Lemma6_tGtU:
      return triple(two_term(u), three_term(ell - 1, ell - u - 1));
    case CaseLabel::Lemma6_tSmall:
    case CaseLabel::Lemma6_tEqU_U2u:
      return triple(Natural(3u), three_term(ell - (t + u - 1), ell - (t + u)));
    case CaseLabel::Lemma6_tEqU_U2u1_one:
      return triple(Natural(3u), three_term(ell - 2 * u, ell - 2 * u - 1));
    case CaseLabel::Lemma6_tEqU_U2u1_zero:
      return triple(two_term(u), three_term(ell - 1, u));
  }
  throw internal_consistency_error("unknown case label");
}

struct CertifyOptions {
  // Return n = 1 immediately when t_k = 1, skipping classification.
  bool shortcut_when_tk_is_one = false;
};

// reduce -> classify -> construct -> verify. Every candidate is evaluated
// directly; if none hits (the case analysis would be wrong), the range
// 1..k_odd+4 is searched and fallback_used is set.
inline WitnessCertificate certify(const Natural& k, CertifyOptions opts = {}) {
  auto [k_odd, shift] = reduce_to_odd(k);
  WitnessCertificate cert;
  cert.k_input = k;
  cert.k_odd = k_odd;
  cert.shift = shift;

  const Classification cls = classify(k_odd);
  cert.label = cls.label;
  cert.params = cls.params;

  if (opts.shortcut_when_tk_is_one && thue_morse(k_odd) == 1) {
    cert.candidates = {Natural(1u)};
    cert.guarantee = Guarantee::direct();
    cert.verified_hit = Natural(1u);
    return cert;
  }

  Construction c = construct_candidates(k_odd, cls.label, cls.params);
  cert.candidates = std::move(c.candidates);
  cert.guarantee = std::move(c.guarantee);

  for (const auto& cand : cert.candidates) {
    if (thue_morse(k_odd * cand) == 1) {
      cert.verified_hit = cand;
      return cert;
    }
  }

  const Natural limit = k_odd + Natural(4u);
  for (Natural n(1u); n <= limit; ++n) {
    if (thue_morse(k_odd * n) == 1) {
      cert.fallback_used = true;
      cert.verified_hit = n;
      cert.candidates.push_back(n);
      std::sort(cert.candidates.begin(), cert.candidates.end());
      return cert;
    }
  }
  throw theorem_violation("no n <= k + 4 with t_{kn} = 1 for k = " + k.to_string());
}

// Constructive upper bound on f(k).
inline Natural f_upper(const Natural& k) { return certify(k).verified_hit; }

// Predicted binary word of k_odd * n for the constructed n, assembled from
// slices of k and of a small multiple of k. Cases whose product is not
// described this way (all-ones words and the 1^u 0 1^u palindrome) throw
// unsupported_case_error.
inline BinaryWord word_shape(const Natural& k_odd, CaseLabel label, const CaseParams& params) {
  if (classify(k_odd) != Classification{label, params})
    throw internal_consistency_error("case/params do not match k = " + k_odd.to_string());

  const auto ell = static_cast<std::int64_t>(params.ell);
  const auto r = static_cast<std::int64_t>(params.r.value_or(0));
  const auto s = static_cast<std::int64_t>(params.s.value_or(0));
  const auto t = static_cast<std::int64_t>(params.t.value_or(0));
  const auto u = static_cast<std::int64_t>(params.u.value_or(0));
  const auto v = static_cast<std::int64_t>(params.v.value_or(0));

  auto len = [](std::int64_t n) {
    if (n < 0) throw internal_consistency_error("negative slice length in word_shape");
    return static_cast<std::uint64_t>(n);
  };
  auto U = [&](const Natural& x, std::int64_t j) { return upper_slice(x, len(j)); };
  auto L = [&](const Natural& x, std::int64_t j) { return lower_slice(x, len(j)); };
  auto O = [&](std::int64_t n) { return ones(len(n)); };
  auto Z = [&](std::int64_t n) { return zeros(len(n)); };
  // Prefix of a multiple x of k: everything above its lowest `tail` bits.
  auto head = [&](const Natural& x, std::int64_t tail) {
    return U(x, static_cast<std::int64_t>(x.bit_length()) - tail);
  };
  const BinaryWord one = ones(1), zero = zeros(1);
  const Natural& k = k_odd;

  switch (label) {
    case CaseLabel::Lemma1:
      return U(k, ell - (u + 1)) + one + Z(u) + L(k, ell - 1);
    case CaseLabel::Lemma2_rLtU:
    case CaseLabel::Lemma3_rLtU:
      return U(k, ell - (u + 1)) + one + Z(u - (r + 1)) + O(r - 1) + zero + one + L(k, ell - r - 1);
    case CaseLabel::Lemma2_rGtU:
      return head(k * Natural(3u), u + 2) + one + zero + O(u - 2) + Z(2) + L(k, ell - (u + 1));
    case CaseLabel::Lemma2_vOdd:
      return U(k, ell - (v + u + 2)) + one + Z(v + 1) + O(u - 2) + zero + one + L(k, ell - (u + 1));
    case CaseLabel::Lemma2_vEven_uGe4:
      return head(k * Natural(3u), v + u + 2) + zero + O(v) + zero + O(u - 3) + zero + O(2) +
             L(k, ell - (u + 1));
    case CaseLabel::Lemma2_u2_U4_1101:
      return U(k, ell - (v + 4)) + one + Z(v - 1) + one + Z(3) + L(k, ell - 4);
    case CaseLabel::Lemma2_u2_U5_11000:
      return head(k * Natural(3u), v + 4) + one + Z(v - 1) + one + Z(2) + one + L(k, ell - 5);
    case CaseLabel::Lemma2_u2_U5_11001:
      return head(k * Natural(5u), v + 4) + one + Z(v + 3) + L(k, ell - 5);
    case CaseLabel::Lemma3_rGtU:
      return U(k, ell - (u + 2)) + one + zero + O(u - 1) + zero + L(k, ell - (u + 1));
    case CaseLabel::Lemma4: {
      const Natural km = k * detail::two_term(static_cast<std::uint64_t>(u - 1));
      return U(k, ell - (u + 2)) + one + Z(u + s + 1) +
             L(km, static_cast<std::int64_t>(km.bit_length()) - (s + u + 1));
    }
    case CaseLabel::Lemma5_tSmall:
      return U(k, ell - (u + t + 2)) + one + Z(t + 1) + O(u - (t + 1)) + zero + O(t) + L(k, ell - (u + t));
    case CaseLabel::Lemma5_tEq_u_s_eq:
      return U(k, ell - (u + t + 2)) + one + Z(t + u + 1) + L(k, ell - (u + t));
    case CaseLabel::Lemma5_tEq_u_s_big: {
      // U_{2u+1}(k) = 1^u 0^u a
      const unsigned a = k.test_bit(static_cast<std::uint64_t>(ell - 2 * u - 1)) ? 1u : 0u;
      return U(k, ell - (u + t + 2)) + one + zero + O(t - 1) + BinaryWord::repeat(a, 1) +
             BinaryWord::repeat(1u - a, len(u)) + L(k, ell - (u + t + 1));
    }
    case CaseLabel::Lemma6_tSmall:
      return head(k * Natural(3u), t + u + 2) + one + Z(t - 1) + one + zero + O(u - (t + 1)) + zero +
             O(t - 2) + zero + one + L(k, ell - (u + t));
    case CaseLabel::Lemma6_tEqU_U2u:
      return head(k * Natural(3u), t + u + 2) + one + Z(t) + O(u) + zero + L(k, ell - 2 * u);
    case CaseLabel::Lemma6_tEqU_U2u1_one:
      return head(k * Natural(3u), t + u + 2) + O(2) + Z(t) + O(u - 1) + zero + L(k, ell - (2 * u + 1));
    case CaseLabel::Lemma6_tEqU_U2u1_zero: {
      const Natural km = k * detail::two_term(static_cast<std::uint64_t>(u));
      return U(k, ell - (u + 2)) + one + zero + O(u - 1) + zero + O(u - 1) + L(km, ell + u - 2 * u);
    }
    case CaseLabel::Lemma5_tGtU_gap:
    case CaseLabel::Lemma6_tGtU: {
      const Natural km = k * detail::two_term(static_cast<std::uint64_t>(u));
      return head(km, 2 * u + 1) + one + Z(u - 1) + O(u - 1) + zero + one + L(k, ell - (u + 1));
    }
    case CaseLabel::AllOnesOddLen:
    case CaseLabel::AllOnesEvenLen:
    case CaseLabel::Lemma2_Palindrome:
      break;
  }
  throw unsupported_case_error(std::string("no product-word decomposition for case ") +
                               std::string(to_string(label)));
}

}  // namespace tmwit
