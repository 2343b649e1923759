#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tmwit/digitcore.hpp"
#include "tmwit/error.hpp"
#include "tmwit/natural.hpp"
#include "tmwit/oracle.hpp"
#include "tmwit/parallel.hpp"
#include "tmwit/witness.hpp"

namespace tmwit {

// Declared in the order their names sort, which is the order they appear in
// the CSV flags column.
enum class ScanFlag : unsigned {
  CertificateFallbackUsed = 1u << 0,
  GapEquals0 = 1u << 1,
  GapEquals1 = 1u << 2,
  GapEquals4 = 1u << 3,
  ZeroMinExceedsKplus2 = 1u << 4,
};

inline constexpr std::pair<ScanFlag, std::string_view> kFlagNames[] = {
    {ScanFlag::CertificateFallbackUsed, "CertificateFallbackUsed"},
    {ScanFlag::GapEquals0, "GapEquals0"},
    {ScanFlag::GapEquals1, "GapEquals1"},
    {ScanFlag::GapEquals4, "GapEquals4"},
    {ScanFlag::ZeroMinExceedsKplus2, "ZeroMinExceedsKplus2"},
};

struct ScanRecord {
  std::uint64_t k = 0;
  std::uint64_t f = 0;
  std::int64_t gap = 0;
  CaseLabel label = CaseLabel::AllOnesOddLen;
  std::uint64_t witness = 0;  // argmin, i.e. f itself
  std::uint64_t witness_weight = 0;
  std::uint64_t certificate_hit = 0;  // verified_hit of the certificate
  std::optional<std::uint64_t> zero_min;  // empty if nothing up to 4k
  unsigned flags = 0;

  bool has(ScanFlag f) const { return (flags & static_cast<unsigned>(f)) != 0; }
  void set(ScanFlag f) { flags |= static_cast<unsigned>(f); }

  std::string flags_string() const {
    std::string out;
    for (const auto& [flag, name] : kFlagNames) {
      if (!has(flag)) continue;
      if (!out.empty()) out += '|';
      out += name;
    }
    return out;
  }

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

namespace detail {

inline bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// 2^(2r) - 1 for some r >= 1.
inline bool is_even_all_ones(std::uint64_t k) {
  return k >= 3 && is_power_of_two(k + 1) && (std::countr_zero(k + 1) % 2 == 0);
}

// 1 or 2^r + 1 with r >= 2.
inline bool is_gap_zero_form(std::uint64_t k) { return k == 1 || (k >= 5 && is_power_of_two(k - 1)); }

[[noreturn]] inline void violation(std::uint64_t k, const std::string& what) {
  throw theorem_violation("k = " + std::to_string(k) + ": " + what);
}

}  // namespace detail

inline constexpr std::uint64_t kMaxScanK = std::uint64_t{1} << 61;

// One row of the characterization scan. Throws theorem_violation when the
// oracle and the certificate disagree or the gap pattern is off.
inline ScanRecord scan_one(std::uint64_t k) {
  if (k == 0 || k > kMaxScanK) throw precondition_error("scan k must be in [1, 2^61]");
  ScanRecord rec;
  rec.k = k;
  rec.f = f_exact(Natural(k)).to_u64();

  const WitnessCertificate cert = certify(Natural(k));
  const std::uint64_t k_odd = cert.k_odd.to_u64();
  rec.label = cert.label;
  rec.certificate_hit = cert.verified_hit.to_u64();
  if (cert.fallback_used) rec.set(ScanFlag::CertificateFallbackUsed);
  if (rec.f > rec.certificate_hit) detail::violation(k, "oracle minimum exceeds certificate hit");
  if (rec.certificate_hit > k_odd + 4) detail::violation(k, "certificate hit exceeds k + 4");

  rec.gap = static_cast<std::int64_t>(rec.f) - static_cast<std::int64_t>(k);
  if (rec.gap > 4) detail::violation(k, "f(k) > k + 4");
  if (rec.gap == 2 || rec.gap == 3) detail::violation(k, "f(k) - k is 2 or 3");
  if ((rec.gap == 4) != detail::is_even_all_ones(k)) detail::violation(k, "f(k) = k + 4 outside k = 2^(2r) - 1");
  if ((rec.gap == 1) != (k == 6)) detail::violation(k, "f(k) = k + 1 outside k = 6");
  if ((rec.gap == 0) != detail::is_gap_zero_form(k)) detail::violation(k, "f(k) = k outside {1, 2^r + 1}");
  if (rec.gap == 4) rec.set(ScanFlag::GapEquals4);
  if (rec.gap == 1) rec.set(ScanFlag::GapEquals1);
  if (rec.gap == 0) rec.set(ScanFlag::GapEquals0);

  rec.witness = rec.f;
  rec.witness_weight = popcount(rec.f);

  const ZeroMinResult z = zero_min(Natural(k));
  if (z.n) rec.zero_min = z.n->to_u64();
  if (z.exceeds_k_plus_2) rec.set(ScanFlag::ZeroMinExceedsKplus2);
  return rec;
}

// Scans [k_min, k_max] and hands records to `sink` in ascending k. Work is
// done in windows so memory stays bounded; inside a window, chunks run on
// `jobs` threads and are merged back into k order before emission.
inline void scan_theorem(std::uint64_t k_min, std::uint64_t k_max, unsigned jobs,
                         const std::function<void(const ScanRecord&)>& sink) {
  if (k_min < 1 || k_min > k_max) throw precondition_error("scan range must satisfy 1 <= k_min <= k_max");
  if (k_max > kMaxScanK) throw precondition_error("scan k must be <= 2^61");
  constexpr std::uint64_t kWindow = 1u << 16;
  constexpr std::uint64_t kChunk = 256;
  std::vector<ScanRecord> window;
  for (std::uint64_t lo = k_min;; lo += kWindow) {
    const std::uint64_t hi = std::min(k_max, lo + kWindow - 1);
    window.assign(hi - lo + 1, ScanRecord{});
    for_each_chunk(lo, hi, kChunk, jobs, [&](std::uint64_t, std::uint64_t a, std::uint64_t b) {
      for (std::uint64_t k = a; k <= b; ++k) window[k - lo] = scan_one(k);
    });
    for (const auto& rec : window) sink(rec);
    if (hi == k_max) break;
  }
}

inline std::vector<ScanRecord> scan_theorem(std::uint64_t k_min, std::uint64_t k_max, unsigned jobs = 1) {
  std::vector<ScanRecord> out;
  out.reserve(k_max >= k_min ? std::min<std::uint64_t>(k_max - k_min + 1, 1u << 20) : 0);
  scan_theorem(k_min, k_max, jobs, [&](const ScanRecord& r) { out.push_back(r); });
  return out;
}

// ---------------------------------------------------------------------------

struct WeightFamilyRow {
  std::uint64_t r = 0;
  Natural k;                             // 3 * 2^r + 3
  std::uint64_t checked = 0;             // multipliers of weight 1 or 2 tried
  std::vector<Natural> counterexamples;  // n with t_{kn} = 1
};

// For k = 3 * 2^r + 3, checks every n < 2^bit_limit of weight 1 or 2.
inline std::vector<WeightFamilyRow> scan_weight_family(std::uint64_t r_min, std::uint64_t r_max, unsigned bit_limit) {
  if (r_min < 4) throw precondition_error("r_min must be >= 4");
  if (bit_limit > 64) throw precondition_error("bit_limit must be <= 64");
  std::vector<WeightFamilyRow> rows;
  for (std::uint64_t r = r_min; r <= r_max; ++r) {
    WeightFamilyRow row;
    row.r = r;
    row.k = Natural(3u) * Natural::power_of_two(r) + Natural(3u);
    const auto k64 = row.k.try_u64();
    auto check = [&](u128 n) {
      ++row.checked;
      if (detail::parity_of_product(row.k, k64, n) == 1) row.counterexamples.emplace_back(n);
    };
    for (unsigned i = 0; i < bit_limit; ++i) {
      check(u128{1} << i);
      for (unsigned j = 0; j < i; ++j) check((u128{1} << i) | (u128{1} << j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------

// Exact count of n in [1, sample_count] with t_{kn} = 1. The fraction is
// kept as counted (hits / sample_count), not reduced.
struct FrequencyRecord {
  Natural k;
  std::uint64_t sample_count = 0;
  std::uint64_t hits = 0;

  std::uint64_t numerator() const { return hits; }
  std::uint64_t denominator() const { return sample_count; }
  double value() const { return static_cast<double>(hits) / static_cast<double>(sample_count); }
};

inline FrequencyRecord frequency(const Natural& k, std::uint64_t sample_count) {
  if (k.is_zero()) throw precondition_error("k must be >= 1");
  if (sample_count < 1) throw precondition_error("sample_count must be >= 1");
  FrequencyRecord rec{k, sample_count, 0};
  if (k < Natural(detail::kFastLimit) && sample_count < detail::kFastLimit) {
    const std::uint64_t k64 = k.to_u64();
    u128 product = 0;
    for (std::uint64_t n = 0; n < sample_count; ++n) {
      product += k64;
      rec.hits += thue_morse(product);
    }
  } else {
    Natural product;
    for (std::uint64_t n = 0; n < sample_count; ++n) {
      product += k;
      rec.hits += thue_morse(product);
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------
// CSV: UTF-8, LF, no trailing whitespace.

inline constexpr std::string_view kScanCsvHeader = "k,f,gap,case,witness,witness_weight,zero_min,flags";
inline constexpr std::string_view kFrequencyCsvHeader = "k,sample_count,ones_numerator,ones_denominator";

inline void write_csv_row(std::ostream& os, const ScanRecord& r) {
  os << r.k << ',' << r.f << ',' << r.gap << ',' << to_string(r.label) << ',' << r.witness << ','
     << r.witness_weight << ',';
  if (r.zero_min) os << *r.zero_min;
  os << ',' << r.flags_string() << '\n';
}

inline void emit_csv(const std::vector<ScanRecord>& records, std::ostream& os) {
  os << kScanCsvHeader << '\n';
  for (const auto& r : records) write_csv_row(os, r);
}

inline void emit_frequency_csv(const std::vector<FrequencyRecord>& records, std::ostream& os) {
  os << kFrequencyCsvHeader << '\n';
  for (const auto& r : records)
    os << r.k << ',' << r.sample_count << ',' << r.numerator() << ',' << r.denominator() << '\n';
}

namespace detail {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& write) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw io_error("cannot open " + path.string() + " for writing");
  write(os);
  os.flush();
  if (!os) throw io_error("write failed: " + path.string());
}

}  // namespace detail

inline void emit_csv(const std::vector<ScanRecord>& records, const std::filesystem::path& path) {
  detail::write_file(path, [&](std::ostream& os) { emit_csv(records, os); });
}

inline void emit_frequency_csv(const std::vector<FrequencyRecord>& records, const std::filesystem::path& path) {
  detail::write_file(path, [&](std::ostream& os) { emit_frequency_csv(records, os); });
}

}  // namespace tmwit
