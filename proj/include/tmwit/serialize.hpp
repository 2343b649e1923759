#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tmwit/error.hpp"
#include "tmwit/genbase.hpp"
#include "tmwit/natural.hpp"
#include "tmwit/oracle.hpp"
#include "tmwit/scanner.hpp"
#include "tmwit/witness.hpp"

// JSON forms of the library's records. Field order is fixed (ordered_json),
// so identical values always print identically.
//
// Integers up to 2^53 - 1 are written as JSON numbers; larger ones as
// decimal strings, so consumers that parse numbers as doubles never see a
// rounded value. Readers accept either form.

namespace tmwit::json {

using ordered = nlohmann::ordered_json;

inline constexpr std::uint64_t kMaxSafeInteger = (std::uint64_t{1} << 53) - 1;

inline ordered natural(const Natural& n) {
  if (n <= Natural(kMaxSafeInteger)) return n.to_u64();
  return n.to_string();
}

inline ordered natural(std::uint64_t n) { return natural(Natural(n)); }

inline Natural to_natural(const ordered& j) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Natural(j.get<std::int64_t>());
  if (j.is_string()) return Natural::parse(j.get<std::string>());
  throw precondition_error("expected a nonnegative integer, got " + j.dump());
}

inline ordered params(const CaseParams& p) {
  ordered j = ordered::object();
  j["ell"] = p.ell;
  if (p.r) j["r"] = *p.r;
  if (p.s) j["s"] = *p.s;
  if (p.t) j["t"] = *p.t;
  if (p.u) j["u"] = *p.u;
  if (p.v) j["v"] = *p.v;
  if (p.a) j["a"] = *p.a;
  return j;
}

inline CaseParams to_params(const ordered& j) {
  CaseParams p;
  p.ell = j.at("ell").get<std::uint64_t>();
  auto opt = [&](const char* key, std::optional<std::uint64_t>& out) {
    if (j.contains(key)) out = j.at(key).get<std::uint64_t>();
  };
  opt("r", p.r);
  opt("s", p.s);
  opt("t", p.t);
  opt("u", p.u);
  opt("v", p.v);
  if (j.contains("a")) p.a = j.at("a").get<unsigned>();
  return p;
}

inline ordered certificate(const WitnessCertificate& c) {
  ordered j;
  j["k_input"] = natural(c.k_input);
  j["k_odd"] = natural(c.k_odd);
  j["shift"] = c.shift;
  j["case"] = std::string(to_string(c.label));
  j["params"] = params(c.params);
  ordered cands = ordered::array();
  for (const auto& n : c.candidates) cands.push_back(natural(n));
  j["candidates"] = std::move(cands);
  ordered g;
  if (c.guarantee.kind == Guarantee::Kind::Direct) {
    g["kind"] = "Direct";
  } else {
    g["kind"] = "Triple";
    g["m"] = natural(*c.guarantee.m);
  }
  j["guarantee"] = std::move(g);
  j["verified_hit"] = natural(c.verified_hit);
  j["fallback_used"] = c.fallback_used;
  return j;
}

inline std::string serialize_certificate(const WitnessCertificate& c) { return certificate(c).dump(); }

inline WitnessCertificate to_certificate(const ordered& j) {
  WitnessCertificate c;
  c.k_input = to_natural(j.at("k_input"));
  c.k_odd = to_natural(j.at("k_odd"));
  c.shift = j.at("shift").get<std::uint64_t>();
  const auto label = case_from_string(j.at("case").get<std::string>());
  if (!label) throw precondition_error("unknown case label " + j.at("case").dump());
  c.label = *label;
  c.params = to_params(j.at("params"));
  for (const auto& n : j.at("candidates")) c.candidates.push_back(to_natural(n));
  const auto& g = j.at("guarantee");
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "Direct") {
    c.guarantee = Guarantee::direct();
  } else if (kind == "Triple") {
    c.guarantee = Guarantee::triple(to_natural(g.at("m")));
  } else {
    throw precondition_error("unknown guarantee kind " + kind);
  }
  c.verified_hit = to_natural(j.at("verified_hit"));
  c.fallback_used = j.value("fallback_used", false);
  return c;
}

inline WitnessCertificate parse_certificate(std::string_view text) {
  return to_certificate(ordered::parse(text));
}

inline ordered scan_record(const ScanRecord& r) {
  ordered j;
  j["k"] = natural(r.k);
  j["f"] = natural(r.f);
  j["gap"] = r.gap;
  j["case"] = std::string(to_string(r.label));
  j["witness"] = natural(r.witness);
  j["witness_weight"] = r.witness_weight;
  j["zero_min"] = r.zero_min ? natural(*r.zero_min) : ordered(nullptr);
  j["flags"] = r.flags_string();
  return j;
}

inline ordered zero_min_result(const ZeroMinResult& z) {
  ordered j;
  j["k"] = natural(z.k);
  j["zero_min"] = z.n ? natural(*z.n) : ordered(nullptr);
  j["exceeds_k_plus_2"] = z.exceeds_k_plus_2;
  j["overflow"] = z.overflow;
  return j;
}

inline ordered frequency_record(const FrequencyRecord& f) {
  ordered j;
  j["k"] = natural(f.k);
  j["sample_count"] = natural(f.sample_count);
  j["ones_numerator"] = natural(f.numerator());
  j["ones_denominator"] = natural(f.denominator());
  return j;
}

inline ordered conjecture_report(const ConjectureReport& r) {
  ordered j;
  j["b"] = r.b;
  j["r"] = r.r;
  j["c"] = r.c;
  j["k_max"] = natural(r.k_max);
  j["worst_k"] = natural(r.worst_k);
  j["worst_gap"] = r.worst_gap;
  j["bound"] = natural(r.bound);
  j["violated"] = r.violated;
  return j;
}

inline ordered weight_family_row(const WeightFamilyRow& row) {
  ordered j;
  j["r"] = row.r;
  j["k"] = natural(row.k);
  j["checked"] = row.checked;
  ordered ce = ordered::array();
  for (const auto& n : row.counterexamples) ce.push_back(natural(n));
  j["counterexamples"] = std::move(ce);
  return j;
}

}  // namespace tmwit::json
