#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <string>

#include "tmwit/digitcore.hpp"

using namespace tmwit;

namespace {

// Reference digit sum that never touches the library: base-10 through the
// decimal string, base 2 through a shift loop.
std::uint64_t decimal_digit_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (char ch : std::to_string(n)) s += static_cast<std::uint64_t>(ch - '0');
  return s;
}

std::uint64_t ones_by_shifting(std::uint64_t n) {
  std::uint64_t c = 0;
  for (; n != 0; n >>= 1) c += n & 1u;
  return c;
}

BinaryWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::string s(rng() % (max_len + 1), '0');
  for (auto& ch : s) ch = (rng() & 1u) ? '1' : '0';
  return BinaryWord::from_string(s);
}

}  // namespace

TEST(Natural, ArithmeticIsExactPastSixtyFourBits) {
  const Natural big = Natural::parse("340282366920938463463374607431768211455");  // 2^128 - 1
  EXPECT_EQ(big + Natural(1u), Natural::power_of_two(128));
  EXPECT_EQ(big.popcount(), 128u);
  EXPECT_EQ((big * big).bit_length(), 256u);
  EXPECT_EQ(Natural(u128{1} << 100), Natural::power_of_two(100));
  EXPECT_THROW(Natural(3u) - Natural(4u), precondition_error);
  EXPECT_THROW(Natural::parse("-3"), precondition_error);
  EXPECT_THROW(Natural::parse(""), precondition_error);
}

TEST(SumDigits, Examples) {
  EXPECT_EQ(sum_digits(Natural(10u), Natural(0u)), Natural(0u));
  EXPECT_EQ(sum_digits(Natural(2u), Natural(119759u)), Natural(12u));
  EXPECT_EQ(sum_digits(Natural(10u), Natural(63u)), Natural(9u));
  EXPECT_EQ(sum_digits(10, u128{63}), 9u);
}

TEST(SumDigits, RejectsSmallBases) {
  EXPECT_THROW(sum_digits(Natural(1u), Natural(5u)), precondition_error);
  EXPECT_THROW(sum_digits(Natural(0u), Natural(5u)), precondition_error);
  EXPECT_THROW(sum_digits(1, u128{5}), precondition_error);
}

TEST(SumDigits, PopcountAndDivisionAgree) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 64);
    EXPECT_EQ(sum_digits(2, u128{n}), detail::sum_digits_by_division(2, u128{n}));
    EXPECT_EQ(sum_digits(2, u128{n}), ones_by_shifting(n));
    EXPECT_EQ(sum_digits(10, u128{n}), decimal_digit_sum(n));
  }
  // Past the machine word.
  Natural big = Natural::pow(Natural(3u), 200);
  EXPECT_EQ(sum_digits(Natural(2u), big), detail::sum_digits_by_division(2, big));
}

TEST(SumDigits, HugeBase) {
  const Natural b = Natural::power_of_two(70);
  const Natural n = b * Natural(5u) + Natural(7u);
  EXPECT_EQ(sum_digits(b, n), Natural(12u));
}

TEST(ThueMorse, Examples) {
  EXPECT_EQ(thue_morse(u128{0}), 0u);
  EXPECT_EQ(thue_morse(u128{1}), 1u);
  EXPECT_EQ(thue_morse(u128{3}), 0u);
  EXPECT_EQ(thue_morse(Natural(3u)), 0u);
}

TEST(ThueMorse, Recurrences) {
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    ASSERT_EQ(thue_morse(u128{2 * n}), thue_morse(u128{n}));
    ASSERT_EQ(thue_morse(u128{2 * n + 1}), 1u - thue_morse(u128{n}));
  }
}

TEST(ThueMorse, PrefixMatchesKnownWord) {
  const std::string expected = "0110100110010110";
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_EQ(thue_morse(u128{i}), static_cast<unsigned>(expected[i] - '0')) << i;
}

TEST(Word, ToWordExamples) {
  EXPECT_EQ(to_word(Natural(1u)).to_string(), "1");
  EXPECT_EQ(to_word(Natural(119759u)).size(), 17u);
  EXPECT_EQ(to_word(Natural(51u)).to_string(), "110011");
  EXPECT_THROW(to_word(Natural(0u)), precondition_error);
  EXPECT_THROW(word_length(Natural(0u)), precondition_error);
}

TEST(Word, IndexConventions) {
  const BinaryWord w = to_word(Natural(0b1101u));
  EXPECT_EQ(w[0], 1u);  // MSB-first
  EXPECT_EQ(w[2], 0u);
  EXPECT_EQ(w.bit_at(0), 1u);  // LSB position 0
  EXPECT_EQ(w.bit_at(1), 0u);
  EXPECT_EQ(w.value(), Natural(13u));
}

TEST(Word, SliceExamples) {
  const Natural k(119759u);
  // 1^3 0 1 0^2 1^4 0^2 1^4
  EXPECT_EQ(to_word(k), ones(3) + zeros(1) + ones(1) + zeros(2) + ones(4) + zeros(2) + ones(4));
  EXPECT_EQ(lower_slice(k, 8), ones(2) + zeros(2) + ones(4));
  EXPECT_EQ(upper_slice(k, 12), ones(3) + zeros(1) + ones(1) + zeros(2) + ones(4) + zeros(1));
  EXPECT_EQ(upper_slice(Natural(51u), 6), to_word(Natural(51u)));
  EXPECT_THROW(lower_slice(Natural(51u), 7), precondition_error);
  EXPECT_THROW(upper_slice(Natural(51u), 7), precondition_error);
  EXPECT_TRUE(lower_slice(Natural(51u), 0).empty());
}

TEST(Word, UpperAndLowerSlicesConcatenate) {
  for (std::uint64_t k = 1; k < 4096; ++k) {
    const Natural nk(k);
    const std::uint64_t len = word_length(nk);
    for (std::uint64_t j = 0; j <= len; ++j)
      ASSERT_EQ(upper_slice(nk, j) + lower_slice(nk, len - j), to_word(nk)) << k << " " << j;
  }
}

TEST(Word, ConcatenationIsAdditiveInWeight) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const BinaryWord a = random_word(rng, 80), b = random_word(rng, 80);
    ASSERT_EQ((a + b).weight(), a.weight() + b.weight());
    ASSERT_EQ((a + b).size(), a.size() + b.size());
  }
}

TEST(Word, SliceParityIdentity) {
  for (std::uint64_t k = 1; k < (1u << 16); ++k) {
    const Natural nk(k);
    const std::uint64_t len = word_length(nk), tk = thue_morse(nk);
    for (std::uint64_t j = 1; j < len; ++j)
      ASSERT_EQ(lower_slice(nk, len - j).weight() % 2, (upper_slice(nk, j).weight() + tk) % 2) << k << " " << j;
  }
}

TEST(Carries, DigitSumDefectCountsCarries) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = rng(), b = rng();
    std::uint64_t carries = 0;
    unsigned carry = 0;
    for (int bit = 0; bit < 64; ++bit) {
      const unsigned s = ((a >> bit) & 1u) + ((b >> bit) & 1u) + carry;
      carry = s >> 1;
      carries += carry;
    }
    const u128 sum = u128{a} + b;
    ASSERT_EQ(popcount(a) + popcount(b) - popcount(sum), carries);
  }
}

TEST(Runs, Examples) {
  EXPECT_EQ(run_decompose(Natural(51u)).runs(), (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_EQ(run_decompose(Natural(7u)).runs(), (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(run_decompose(Natural(119759u)).runs(), (std::vector<std::uint64_t>{3, 1, 1, 2, 4, 2, 4}));

  const RunDecomposition d = run_decompose(Natural(51u));
  EXPECT_EQ(d.r(), 2u);
  EXPECT_EQ(d.s(), 2u);
  EXPECT_EQ(d.t(), 2u);
  EXPECT_EQ(d.u(), 2u);
  EXPECT_EQ(d.a(), 1u);  // bit at position 5
}

TEST(Runs, AbsentRunsAreSignalled) {
  const RunDecomposition d = run_decompose(Natural(7u));
  EXPECT_TRUE(d.all_ones());
  EXPECT_EQ(d.r(), 3u);
  EXPECT_FALSE(d.s().has_value());
  EXPECT_FALSE(d.t().has_value());
  EXPECT_FALSE(d.v().has_value());
  EXPECT_FALSE(d.a().has_value());
  // 1101: runs 2,1,1; bit t+u+1 = 3 exists, v = leading run.
  const RunDecomposition e = run_decompose(Natural(0b1101u));
  EXPECT_EQ(e.v(), 2u);
  EXPECT_EQ(e.a(), 1u);
  // 101: position 3 is beyond the word.
  EXPECT_FALSE(run_decompose(Natural(5u)).a().has_value());
}

TEST(Runs, RejectsEvenInput) {
  EXPECT_THROW(run_decompose(Natural(6u)), precondition_error);
  EXPECT_THROW(run_decompose(Natural(0u)), precondition_error);
}

TEST(Runs, RoundTripThroughWord) {
  for (std::uint64_t k = 1; k < (1u << 20); k += 2) {
    const Natural nk(k);
    const RunDecomposition d = run_decompose(nk);
    ASSERT_EQ(d.runs().size() % 2, 1u);
    ASSERT_EQ(d.to_word(), to_word(nk)) << k;
  }
}

TEST(ShiftedDifference, Examples) {
  EXPECT_EQ(shifted_difference_digit_sum(Natural(1u), 3, Natural(1u)), Natural(3u));
  EXPECT_EQ(shifted_difference_digit_sum(Natural(5u), 5, Natural(5u)), Natural(5u));
  EXPECT_EQ(sum_digits(Natural(2u), Natural(155u)), Natural(5u));
  EXPECT_EQ(shifted_difference_digit_sum(Natural(3u), 4, Natural(5u)), Natural(4u));
  EXPECT_EQ(sum_digits(Natural(2u), Natural(43u)), Natural(4u));
}

TEST(ShiftedDifference, RejectsOutOfRange) {
  EXPECT_THROW(shifted_difference_digit_sum(Natural(1u), 3, Natural(0u)), precondition_error);
  EXPECT_THROW(shifted_difference_digit_sum(Natural(1u), 3, Natural(8u)), precondition_error);
  EXPECT_THROW(shifted_difference_digit_sum(Natural(0u), 3, Natural(1u)), precondition_error);
}

TEST(ShiftedDifference, MatchesDirectDigitSumOnGrid) {
  for (std::uint64_t a = 1; a <= 64; ++a)
    for (std::uint64_t j = 1; j <= 12; ++j)
      for (std::uint64_t b = 1; b < (1u << j); ++b)
        ASSERT_EQ(shifted_difference_digit_sum(Natural(a), j, Natural(b)),
                  Natural(ones_by_shifting((a << j) - b)))
            << a << " " << j << " " << b;
}
