#include <gtest/gtest.h>

#include <cmath>

#include "freeshift/dynprops.hpp"
#include "freeshift/fixtures.hpp"
#include "freeshift/zline.hpp"
#include "oracles.hpp"

using namespace freeshift;
namespace fx = freeshift::fixtures;

TEST(EntropyValue, CanonicalForm) {
  EXPECT_EQ(EntropyValue(4, 2), EntropyValue(2, 1));
  EXPECT_EQ(EntropyValue(8, 6), EntropyValue(2, 2));
  EXPECT_EQ(EntropyValue(8, 6).count(), 2);
  EXPECT_EQ(EntropyValue(8, 6).denom(), 2u);
  EXPECT_EQ(EntropyValue(16, 2).count(), 4);
  EXPECT_EQ(EntropyValue(1, 7), EntropyValue(1, 1));
  EXPECT_TRUE(EntropyValue(1, 7).is_zero());
  EXPECT_NE(EntropyValue(3, 2), EntropyValue(2, 1));
  EXPECT_THROW(EntropyValue(0, 1), DomainError);
  EXPECT_THROW(EntropyValue(2, 0), DomainError);
}

TEST(EntropyValue, OrderingMatchesCrossPowers) {
  for (std::uint64_t n1 = 1; n1 <= 12; ++n1)
    for (std::uint64_t m1 = 1; m1 <= 6; ++m1)
      for (std::uint64_t n2 = 1; n2 <= 12; ++n2)
        for (std::uint64_t m2 = 1; m2 <= 6; ++m2) {
          const EntropyValue a(n1, m1), b(n2, m2);
          EXPECT_EQ(a == b, oracle::same_entropy(n1, m1, n2, m2));
          const double da = std::log(double(n1)) / double(m1), db = std::log(double(n2)) / double(m2);
          if (std::abs(da - db) > 1e-9) EXPECT_EQ(a < b, da < db);
        }
}

TEST(EntropyValue, Formatting) {
  EXPECT_EQ(EntropyValue(11, 5).to_string(), "log(11)/5");
  EXPECT_NEAR(EntropyValue(11, 5).to_double(), std::log(11.0) / 5, 1e-15);
}

TEST(EntropyValue, HugeCountsStayFinite) {
  BigInt big = boost::multiprecision::pow(BigInt(3), 2000);
  EXPECT_NEAR(EntropyValue(big, 1000).to_double(), 2 * std::log(3.0), 1e-9);
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(enumerate_sft(fx::full_shift_spec(cyclic(2)))), EntropyValue(2, 1));
  EXPECT_EQ(entropy(enumerate_sft(fx::two_spec(cyclic(4)))), EntropyValue(2, 4));
  EXPECT_EQ(entropy(enumerate_sft(golden_mean_spec(5))), EntropyValue(11, 5));
  auto empty = enumerate_sft(make_sft(cyclic(2), Alphabet::binary(), {0}, {{0}, {1}}));
  EXPECT_THROW(entropy(empty), DomainError);
}

TEST(EntropySet, Z2PowerTower) {
  auto got = entropy_set(fx::z2_power_tower(3), 3, 3);
  std::vector<EntropyValue> want;
  for (std::uint64_t n = 1; n <= 3; ++n)
    for (std::uint64_t m : {1, 2, 4, 8}) want.emplace_back(n, m);
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  EXPECT_EQ(got, want);
}

TEST(EntropySet, TrivialTower) {
  auto t = GroupTower::build({cyclic(1)}, {});
  auto got = entropy_set(t, 0, 5);
  ASSERT_EQ(got.size(), 5u);
  for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_EQ(got[n - 1], EntropyValue(n, 1));
}

TEST(EntropySet, FastModeUsesLevelsOnly) {
  // Z/4 x Z/2 has a subgroup of order 2 that fast mode skips at level 1,
  // but level 0 (Z/4) still contributes order 4 and the trivial group 1.
  auto t = fx::z4_tower();
  auto full = entropy_set(t, 1, 3);
  auto fast = entropy_set(t, 1, 3, true);
  EXPECT_LT(fast.size(), full.size());
  for (const auto& v : fast) EXPECT_TRUE(std::find(full.begin(), full.end(), v) != full.end());
}

TEST(StronglyIrreducible, Examples) {
  auto z4 = cyclic(4);
  auto full = enumerate_sft(fx::full_shift_spec(z4));
  EXPECT_TRUE(strongly_irreducible(full, std::vector<Element>{0}));
  auto two = enumerate_sft(fx::two_spec(z4));
  EXPECT_TRUE(strongly_irreducible(two, std::vector<Element>{0, 1, 2, 3}));
  auto v = strongly_irreducible_witness(two, std::vector<Element>{0, 1});
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(v.counterexample->u, Pattern(z4, {2}, {0}));
  EXPECT_EQ(v.counterexample->v, Pattern(z4, {0}, {1}));
}

TEST(StronglyIrreducible, AgreesWithOracle) {
  for (const auto& f : fx::sft_fixtures()) {
    const auto& g = *f.spec.group;
    if (g.order() > 4) continue;
    auto y = enumerate_sft(f.spec);
    if (y.empty()) continue;
    for (std::uint64_t m = 0; m < (1ull << g.order()); ++m) {
      auto k = oracle::from_mask(m, g.order());
      EXPECT_EQ(strongly_irreducible(y, k), oracle::naive_si(g, y.configs(), k)) << f.name << " mask " << m;
    }
  }
}

TEST(StronglyIrreducible, MinimalWitnesses) {
  auto two = enumerate_sft(fx::two_spec(cyclic(4)));
  auto v = strongly_irreducible_witness(two, std::vector<Element>{0, 1, 2, 3}, true);
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(v.minimal_witnesses.size(), 1u);
  EXPECT_EQ(v.minimal_witnesses[0], (std::vector<Element>{0, 1, 2, 3}));

  auto full = enumerate_sft(fx::full_shift_spec(cyclic(3)));
  // The empty K admits overlapping shapes, so {e} is the only minimal witness.
  auto w = strongly_irreducible_witness(full, std::vector<Element>{0}, true);
  ASSERT_EQ(w.minimal_witnesses.size(), 1u);
  EXPECT_EQ(w.minimal_witnesses[0], (std::vector<Element>{0}));
}

TEST(EntropyMinimal, Examples) {
  for (const auto& f : fx::sft_fixtures()) {
    auto y = enumerate_sft(f.spec);
    if (y.empty()) continue;
    EXPECT_TRUE(is_entropy_minimal(y).minimal) << f.name;
  }
  EXPECT_TRUE(is_entropy_minimal(enumerate_sft(fx::zero_point_spec(cyclic(3)))).minimal);
}

TEST(EntropyMinimal, InjectedEqualEntropySubshiftIsReported) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(2)));
  // Test double: the full shift on Z/4 has entropy log(4)/2 = log(2)/1 as well.
  const auto equal_entropy = [](const ShiftSpace&) {
    return std::vector<ShiftSpace>{enumerate_sft(fx::full_shift_spec(cyclic(4)))};
  };
  auto v = is_entropy_minimal(full, {}, equal_entropy);
  EXPECT_FALSE(v.minimal);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_EQ(v.counterexample->size(), 16u);

  // The space itself is skipped rather than reported.
  const auto itself = [](const ShiftSpace& s) { return std::vector<ShiftSpace>{s}; };
  EXPECT_TRUE(is_entropy_minimal(full, {}, itself).minimal);
}

TEST(ZeroEntropy, Examples) {
  EXPECT_EQ(zero_entropy_classify(enumerate_sft(fx::zero_point_spec(cyclic(3)))),
            ZeroEntropyClass::kSingletonFixedPoint);
  EXPECT_EQ(zero_entropy_classify(enumerate_sft(fx::two_spec(cyclic(4)))), ZeroEntropyClass::kPositiveEntropy);
  EXPECT_EQ(zero_entropy_classify(enumerate_sft(fx::full_shift_spec(cyclic(2)))), ZeroEntropyClass::kPositiveEntropy);
  auto empty = enumerate_sft(make_sft(cyclic(2), Alphabet::binary(), {0}, {{0}, {1}}));
  EXPECT_THROW(zero_entropy_classify(empty), DomainError);
}

TEST(ZeroEntropy, TwoFixedPointsNeverHaveZeroEntropy) {
  // Two fixed points give |y| >= 2, hence h >= log(2)/|G| > 0 on any finite group.
  for (const auto& f : fx::sft_fixtures()) {
    auto y = enumerate_sft(f.spec);
    std::size_t fixed = 0;
    for (const auto& x : y.configs()) fixed += oracle::orbit(*y.group(), x).size() == 1;
    if (fixed >= 2) EXPECT_FALSE(entropy(y).is_zero()) << f.name;
  }
}

TEST(Automorphisms, Examples) {
  auto single = enumerate_sft(fx::zero_point_spec(cyclic(3)));
  EXPECT_EQ(automorphism_group(single).order(), 1u);
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(2)));
  auto aut = automorphism_group(full);
  EXPECT_EQ(aut.order(), 4u);
  EXPECT_EQ(oracle::naive_automorphism_count(*full.group(), full.configs()), 4u);
  EXPECT_EQ(automorphism_group(enumerate_sft(fx::two_spec(cyclic(4)))).order(), 2u);
}

TEST(Automorphisms, AgreeWithPermutationSearch) {
  for (const auto& f : fx::sft_fixtures()) {
    auto y = enumerate_sft(f.spec);
    if (y.size() > 8) continue;
    auto aut = automorphism_group(y);
    EXPECT_EQ(aut.order(), oracle::naive_automorphism_count(*y.group(), y.configs())) << f.name;
    for (const auto& p : aut.elements) EXPECT_TRUE(commutes_with_shifts(y, p)) << f.name;
  }
}

TEST(Automorphisms, CapIsEnforced) {
  auto y = enumerate_sft(fx::full_shift_spec(cyclic(4)));
  EXPECT_THROW(automorphism_group(y), ResourceError);
}

TEST(Measures, UniformExamples) {
  auto single = enumerate_sft(fx::zero_point_spec(cyclic(3)));
  auto m1 = mme(single);
  ASSERT_EQ(m1.weights.size(), 1u);
  EXPECT_EQ(m1.weights[0], 1);

  auto golden = enumerate_sft(golden_mean_spec(5));
  auto mu = mme(golden);
  for (const auto& w : mu.weights) EXPECT_EQ(w, Rational(1, 11));
  EXPECT_NEAR(measure_entropy(mu), std::log(11.0) / 5, kMeasureTolerance);
}

TEST(Measures, ValidationRejectsBadWeights) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(2)));
  // Configs are 00, 01, 10, 11; the middle two share an orbit.
  InvariantMeasure bad{full, {Rational(1, 2), Rational(1, 4), 0, Rational(1, 4)}};
  EXPECT_THROW(validate_measure(bad), ValidationError);
  bad.weights = {Rational(1, 2), Rational(1, 2), Rational(1, 2), 0};
  EXPECT_THROW(validate_measure(bad), ValidationError);
  bad.weights = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
  EXPECT_NO_THROW(validate_measure(bad));
}

TEST(PartitionEntropy, Examples) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(2)));
  auto mu = mme(full);
  EXPECT_NEAR(partition_entropy(mu, std::vector<Element>{0, 1}), std::log(4.0), 1e-12);
  EXPECT_NEAR(measure_entropy(mu), std::log(2.0), 1e-12);
  auto delta = dirac_measure(full, 0);
  EXPECT_EQ(partition_entropy(delta, std::vector<Element>{0}), 0.0);
  EXPECT_EQ(partition_entropy(delta, std::vector<Element>{0, 1}), 0.0);
}

TEST(PartitionEntropy, GoldenMeanSingleSite) {
  auto golden = enumerate_sft(golden_mean_spec(5));
  auto mu = mme(golden);
  auto masses = cylinder_masses(mu, std::vector<Element>{0});
  ASSERT_EQ(masses.size(), 2u);
  // Count configurations with a 1 at site 0 directly.
  std::size_t ones = 0;
  for (const auto& x : golden.configs()) ones += x[0] == 1;
  EXPECT_EQ(ones, 3u);
  EXPECT_EQ(masses[1].second, Rational(3, 11));
  EXPECT_EQ(masses[0].second, Rational(8, 11));
  const double p = 3.0 / 11, q = 8.0 / 11;
  EXPECT_NEAR(partition_entropy(mu, std::vector<Element>{0}), -(p * std::log(p) + q * std::log(q)), 1e-12);
}

TEST(Measures, PushforwardOfProductIsUniform) {
  auto ctx = ExtensionContext::from_tower(fx::z2_power_tower(2), 1, 2);
  for (const auto& spec : {fx::full_shift_spec(ctx.base()), fx::two_spec(ctx.base()),
                           fx::no_adjacent_ones_spec(ctx.base(), 1)}) {
    auto base = enumerate_sft(spec);
    auto push = pushforward_product(mme(base), ctx);
    auto ext = free_extension(base, ctx);
    EXPECT_EQ(push.space, ext);
    EXPECT_EQ(push.weights, mme(ext).weights);
  }
}

TEST(MmeUniqueCheck, SingleOrbit) {
  auto y = enumerate_sft(fx::zero_point_spec(cyclic(3)));
  auto r = mme_unique_check(y, 10);
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.grid_points, 1u);
}

TEST(MmeUniqueCheck, GoldenMeanUniqueAtUniform) {
  auto r = mme_unique_check(enumerate_sft(golden_mean_spec(5)), 200);
  EXPECT_TRUE(r.uniform_attains);
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.maximizers.size(), 1u);
  EXPECT_LT(r.best_non_uniform, r.entropy - kMeasureTolerance);
}

TEST(MmeUniqueCheck, TwoFixedPointsHaveUniqueMaximizer) {
  // h = log(2)/4 > 0 and each Dirac measure has h_mu = 0, so uniform is the
  // only maximizer on a finite group.
  auto y = enumerate_sft(fx::two_spec(cyclic(4)));
  auto r = mme_unique_check(y, 100);
  EXPECT_NEAR(r.entropy, std::log(2.0) / 4, 1e-12);
  EXPECT_TRUE(r.unique);
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_EQ(r.maximizers[0], (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_NEAR(measure_entropy(dirac_measure(y, 0)), 0.0, 1e-15);
}

TEST(MmeUniqueCheck, GridMeasuresStayBelowEntropy) {
  for (const auto& f : fx::sft_fixtures()) {
    auto y = enumerate_sft(f.spec);
    if (y.empty() || orbits(y).size() > 4) continue;
    auto r = mme_unique_check(y, 20);
    EXPECT_TRUE(r.uniform_attains) << f.name;
    EXPECT_LE(r.best_non_uniform, r.entropy + kMeasureTolerance) << f.name;
  }
}
