#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "freeshift/zline.hpp"
#include "oracles.hpp"

using namespace freeshift;

TEST(GoldenMean, SmallCounts) {
  EXPECT_EQ(golden_mean_cyclic_count(3), 4);
  EXPECT_EQ(golden_mean_cyclic_count(4), 7);
  EXPECT_EQ(golden_mean_cyclic_count(5), 11);
  EXPECT_EQ(golden_mean_cyclic_count(1), 1);
  EXPECT_EQ(golden_mean_cyclic_count(2), 3);
}

TEST(GoldenMean, EnumerationMatchesBruteForceAndTransfer) {
  for (std::size_t n = 1; n <= 16; ++n) {
    EXPECT_EQ(golden_mean_enumerated_count(n), oracle::golden_brute(n)) << n;
    EXPECT_EQ(golden_mean_transfer_count(n), BigInt(oracle::golden_brute(n))) << n;
  }
}

TEST(GoldenMean, LucasRecurrence) {
  for (std::size_t n = 4; n <= 30; ++n)
    EXPECT_EQ(golden_mean_cyclic_count(n), golden_mean_cyclic_count(n - 1) + golden_mean_cyclic_count(n - 2)) << n;
  EXPECT_EQ(golden_mean_cyclic_count(20), 15127);
  EXPECT_EQ(golden_mean_cyclic_count(100), oracle::lucas(100));
}

TEST(GoldenMean, EntropyEstimate) {
  EXPECT_NEAR(golden_mean_entropy_estimate(5), std::log(11.0) / 5, 1e-15);
  EXPECT_NEAR(log_phi(), oracle::log_phi(), 1e-15);
  EXPECT_LT(std::abs(golden_mean_entropy_estimate(20) - log_phi()), 1e-3);
  const double e10 = std::abs(golden_mean_entropy_estimate(10) - log_phi());
  const double e20 = std::abs(golden_mean_entropy_estimate(20) - log_phi());
  const double e30 = std::abs(golden_mean_entropy_estimate(30) - log_phi());
  EXPECT_GT(e10, e20);
  EXPECT_GT(e20, e30);
}

TEST(Word, ParsingAndSlicing) {
  Word w("01101");
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.to_string(), "01101");
  EXPECT_EQ(w.slice(1, 3).to_string(), "110");
  EXPECT_THROW(Word("012"), InputError);
  EXPECT_THROW(Word(std::vector<std::uint8_t>{0, 2}), InputError);
}

TEST(EvenShift, WordExamples) {
  EXPECT_TRUE(even_shift_word_check(Word("0110")));
  EXPECT_FALSE(even_shift_word_check(Word("010")));
  EXPECT_TRUE(even_shift_word_check(Word("111")));
  EXPECT_TRUE(even_shift_word_check(Word("")));
  EXPECT_TRUE(even_shift_word_check(Word("1011")));
  EXPECT_FALSE(even_shift_word_check(Word("0111100100")));
}

TEST(EvenShift, WordCheckMatchesSplitOracle) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      const auto s = oracle::binary_word(m, n);
      EXPECT_EQ(even_shift_word_check(Word(s)), oracle::even_word(s)) << s;
    }
}

TEST(EvenShift, CoverLanguage) {
  auto one = even_cover_language(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].to_string(), "0");
  EXPECT_EQ(one[1].to_string(), "1");
  for (std::size_t n : {4, 12}) {
    auto v = even_cover_factor_check(n);
    EXPECT_TRUE(v.agree) << n;
    EXPECT_FALSE(v.witness.has_value());
    std::size_t want = 0;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) want += oracle::even_word(oracle::binary_word(m, n));
    EXPECT_EQ(v.language_size, want);
  }
  EXPECT_THROW(even_cover_factor_check(17), InputError);
}

TEST(EvenShift, PaddedOracle) {
  EXPECT_TRUE(even_padded_oracle(Word("0110"), 8));
  EXPECT_FALSE(even_padded_oracle(Word("010"), 6));
  EXPECT_TRUE(even_padded_oracle(Word("111"), 6));
  EXPECT_TRUE(even_padded_oracle(Word("101"), 6));
}

TEST(SftGap, Witnesses) {
  EXPECT_EQ(sft_gap_witness(2).to_string(), "0111110");
  EXPECT_EQ(sft_gap_witness(3).to_string(), "011111110");
  EXPECT_EQ(sft_gap_witness(10).size(), 23u);
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto w = sft_gap_witness(k).to_string();
    std::set<std::string> lang;
    for (const auto& u : even_cover_language(k)) lang.insert(u.to_string());
    for (std::size_t i = 0; i + k <= w.size(); ++i) EXPECT_TRUE(lang.count(w.substr(i, k))) << k;
    EXPECT_FALSE(oracle::even_word(w)) << k;
  }
  EXPECT_THROW(sft_gap_witness(1), InputError);
}
