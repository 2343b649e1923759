#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

#include "tmwit/error.hpp"
#include "tmwit/natural.hpp"

namespace tmwit {

// An instance of "find n with s_b(kn) = c (mod r)", optionally with the
// extra side condition n = a (mod k). Construction rejects gcd(b-1, r) != 1,
// the regime where a solution need not exist.
class GenBaseQuery {
 public:
  static GenBaseQuery make(std::uint64_t base, std::uint64_t modulus, std::int64_t target, Natural k,
                           std::optional<Natural> residue = std::nullopt) {
    if (base < 2) throw precondition_error("invalid base: must be >= 2");
    if (modulus < 1) throw precondition_error("modulus must be >= 1");
    if (k.is_zero()) throw precondition_error("k must be >= 1");
    if (std::gcd(base - 1, modulus) != 1)
      throw invalid_query_error("gcd(b - 1, r) must be 1 (b = " + std::to_string(base) +
                                ", r = " + std::to_string(modulus) + ")");
    if (residue && *residue >= k) throw precondition_error("residue a must satisfy 0 <= a < k");
    GenBaseQuery q;
    q.base_ = base;
    q.modulus_ = modulus;
    q.target_ = normalize_residue(target, modulus);
    q.k_ = std::move(k);
    q.residue_ = std::move(residue);
    return q;
  }

  std::uint64_t base() const { return base_; }
  std::uint64_t modulus() const { return modulus_; }
  // c reduced into [0, r).
  std::uint64_t target() const { return target_; }
  const Natural& k() const { return k_; }
  const std::optional<Natural>& residue() const { return residue_; }

  GenBaseQuery with_k(Natural k) const { return make(base_, modulus_, static_cast<std::int64_t>(target_), std::move(k)); }

 private:
  GenBaseQuery() = default;

  std::uint64_t base_ = 2;
  std::uint64_t modulus_ = 1;
  std::uint64_t target_ = 0;
  Natural k_{1u};
  std::optional<Natural> residue_;
};

}  // namespace tmwit
