#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "tmwit/oracle.hpp"
#include "tmwit/witness.hpp"

using namespace tmwit;

namespace {

std::vector<Natural> nats(std::initializer_list<std::uint64_t> xs) {
  std::vector<Natural> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

bool has_display(CaseLabel c) {
  return c != CaseLabel::AllOnesOddLen && c != CaseLabel::AllOnesEvenLen && c != CaseLabel::Lemma2_Palindrome;
}

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce_to_odd(Natural(6u)), std::make_pair(Natural(3u), std::uint64_t{1}));
  EXPECT_EQ(reduce_to_odd(Natural(3u)), std::make_pair(Natural(3u), std::uint64_t{0}));
  EXPECT_EQ(reduce_to_odd(Natural(48u)), std::make_pair(Natural(3u), std::uint64_t{4}));
  EXPECT_THROW(reduce_to_odd(Natural(0u)), precondition_error);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Natural(3u)).label, CaseLabel::AllOnesEvenLen);
  EXPECT_EQ(classify(Natural(7u)).label, CaseLabel::AllOnesOddLen);
  EXPECT_EQ(classify(Natural(9u)).label, CaseLabel::Lemma1);
  const Classification c51 = classify(Natural(51u));
  EXPECT_EQ(c51.label, CaseLabel::Lemma6_tEqU_U2u1_one);
  EXPECT_EQ(c51.params.u, 2u);
  EXPECT_EQ(c51.params.t, 2u);
  EXPECT_EQ(c51.params.a, 1u);
  EXPECT_EQ(classify(Natural(27u)).label, CaseLabel::Lemma2_Palindrome);
  EXPECT_THROW(classify(Natural(10u)), precondition_error);
}

TEST(Classify, NameTableRoundTrips) {
  for (const auto& [label, name] : kCaseNames) {
    EXPECT_EQ(to_string(label), name);
    EXPECT_EQ(case_from_string(name), label);
  }
  EXPECT_FALSE(case_from_string("Lemma7").has_value());
}

TEST(Classify, EveryLabelOccursAndIsStable) {
  std::map<CaseLabel, int> seen;
  for (std::uint64_t k = 1; k < (1u << 16); k += 2) {
    const Classification c = classify(Natural(k));
    ASSERT_EQ(classify(Natural(k)), c);
    ++seen[c.label];
  }
  EXPECT_EQ(seen.size(), kCaseNames.size());
}

TEST(Construct, Examples) {
  auto run = [](std::uint64_t k) {
    const Classification c = classify(Natural(k));
    return construct_candidates(Natural(k), c.label, c.params);
  };
  EXPECT_EQ(run(3).candidates, nats({7}));
  EXPECT_EQ(run(9).candidates, nats({9}));
  const Construction c51 = run(51);
  EXPECT_EQ(c51.candidates, nats({1, 3, 7}));
  EXPECT_EQ(c51.guarantee, Guarantee::triple(Natural(3u)));
  EXPECT_EQ(thue_morse(u128{51}), 0u);
  EXPECT_EQ(thue_morse(u128{153}), 0u);
  EXPECT_EQ(thue_morse(u128{357}), 1u);
}

TEST(Construct, RejectsMismatchedCase) {
  const Classification c = classify(Natural(9u));
  EXPECT_THROW(construct_candidates(Natural(9u), CaseLabel::Lemma4, c.params), internal_consistency_error);
  CaseParams wrong = c.params;
  wrong.ell += 1;
  EXPECT_THROW(construct_candidates(Natural(9u), c.label, wrong), internal_consistency_error);
}

// A k in the u = 2, U_5 = 11001 branch; the hit comes from the constructed n.
TEST(Construct, U5_11001BranchHitsWithTheConstructedMultiplier) {
  const Classification c = classify(Natural(411u));
  ASSERT_EQ(c.label, CaseLabel::Lemma2_u2_U5_11001);
  const Construction con = construct_candidates(Natural(411u), c.label, c.params);
  EXPECT_EQ(con.guarantee, Guarantee::triple(Natural(5u)));
  EXPECT_EQ(con.candidates, nats({1, 5, 81}));  // 2^6 + 2^4 + 1
  EXPECT_EQ(thue_morse(Natural(411u) * Natural(81u)), 1u);
}

TEST(Certify, Examples) {
  const WitnessCertificate c6 = certify(Natural(6u));
  EXPECT_EQ(c6.k_odd, Natural(3u));
  EXPECT_EQ(c6.shift, 1u);
  EXPECT_EQ(c6.candidates, nats({7}));
  EXPECT_EQ(c6.verified_hit, Natural(7u));

  const WitnessCertificate c23 = certify(Natural(23u));
  EXPECT_EQ(c23.label, CaseLabel::Lemma1);
  EXPECT_EQ(c23.params.u, 3u);
  EXPECT_EQ(c23.candidates, nats({17}));
  EXPECT_EQ(c23.verified_hit, Natural(17u));
  EXPECT_EQ(popcount(std::uint64_t{391}), 5u);

  const WitnessCertificate c7 = certify(Natural(7u));
  EXPECT_EQ(c7.label, CaseLabel::AllOnesOddLen);
  EXPECT_EQ(c7.candidates, nats({1}));
  EXPECT_EQ(c7.verified_hit, Natural(1u));

  EXPECT_THROW(certify(Natural(0u)), precondition_error);
}

TEST(Certify, ShortcutIsOffByDefault) {
  // t_11 = 1, yet the full pipeline still classifies and constructs.
  const WitnessCertificate full = certify(Natural(11u));
  EXPECT_EQ(full.label, classify(Natural(11u)).label);
  const WitnessCertificate quick = certify(Natural(11u), CertifyOptions{true});
  EXPECT_EQ(quick.candidates, nats({1}));
  EXPECT_EQ(quick.verified_hit, Natural(1u));
}

TEST(FUpper, Examples) {
  EXPECT_EQ(f_upper(Natural(15u)), Natural(19u));
  EXPECT_EQ(f_upper(Natural(17u)), Natural(17u));
  EXPECT_EQ(f_upper(Natural(5u)), Natural(5u));
}

TEST(FUpper, InvariantUnderDoubling) {
  for (std::uint64_t k = 1; k <= (1u << 15); ++k)
    ASSERT_EQ(f_upper(Natural(k)), f_upper(Natural(2 * k))) << k;
}

TEST(Certify, GuaranteesAreSound) {
  for (std::uint64_t k = 1; k < (1u << 18); k += 2) {
    const Natural nk(k);
    const Classification cls = classify(nk);
    const Construction con = construct_candidates(nk, cls.label, cls.params);
    const unsigned tkn = thue_morse(nk * con.n);
    if (con.guarantee.kind == Guarantee::Kind::Direct) {
      ASSERT_EQ(tkn, 1u) << k;
    } else {
      ASSERT_EQ(tkn ^ thue_morse(nk) ^ thue_morse(nk * *con.guarantee.m), 1u) << k;
    }
  }
}

TEST(Certify, CandidatesAreSmallAndLight) {
  for (std::uint64_t k = 1; k < (1u << 16); k += 2) {
    const WitnessCertificate c = certify(Natural(k));
    ASSERT_FALSE(c.fallback_used) << k;
    ASSERT_TRUE(std::is_sorted(c.candidates.begin(), c.candidates.end()));
    for (const auto& n : c.candidates) {
      ASSERT_LE(n, Natural(k + 4)) << k;
      ASSERT_LE(n.popcount(), 3u) << k;
    }
    ASSERT_EQ(thue_morse(Natural(k) * c.verified_hit), 1u);
  }
}

TEST(WordShape, Examples) {
  const Classification c9 = classify(Natural(9u));
  EXPECT_EQ(word_shape(Natural(9u), c9.label, c9.params).to_string(), "1010001");
  EXPECT_EQ(word_shape(Natural(9u), c9.label, c9.params).value(), Natural(81u));

  const Classification c23 = classify(Natural(23u));
  EXPECT_EQ(word_shape(Natural(23u), c23.label, c23.params), to_word(Natural(391u)));

  const Classification c27 = classify(Natural(27u));
  EXPECT_THROW(word_shape(Natural(27u), c27.label, c27.params), unsupported_case_error);
  const Classification c3 = classify(Natural(3u));
  EXPECT_THROW(word_shape(Natural(3u), c3.label, c3.params), unsupported_case_error);
}

TEST(WordShape, MatchesProductWordForEveryDisplayedCase) {
  for (std::uint64_t k = 1; k < (1u << 16); k += 2) {
    const Natural nk(k);
    const Classification c = classify(nk);
    if (!has_display(c.label)) continue;
    const Natural n = construct_candidates(nk, c.label, c.params).n;
    ASSERT_EQ(word_shape(nk, c.label, c.params), to_word(nk * n)) << k << " " << to_string(c.label);
  }
}

TEST(Certify, WorksBeyondMachineWords) {
  // 2^130 - 1 has even length; 2^129 + 1 sits in Lemma1.
  const Natural big = Natural::power_of_two(130) - Natural(1u);
  const WitnessCertificate c = certify(big);
  EXPECT_EQ(c.label, CaseLabel::AllOnesEvenLen);
  EXPECT_EQ(c.verified_hit, big + Natural(4u));

  const Natural g = Natural::power_of_two(129) + Natural(1u);
  EXPECT_EQ(certify(g).verified_hit, g);
  EXPECT_EQ(certify(g * Natural::power_of_two(70)).verified_hit, g);
}
