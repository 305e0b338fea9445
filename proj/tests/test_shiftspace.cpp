#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "freeshift/fixtures.hpp"
#include "freeshift/shiftspace.hpp"
#include "freeshift/zline.hpp"
#include "oracles.hpp"

using namespace freeshift;
namespace fx = freeshift::fixtures;

namespace {

std::multiset<std::size_t> orbit_sizes(const ShiftSpace& y) {
  std::multiset<std::size_t> out;
  for (const auto& o : orbits(y)) out.insert(o.size());
  return out;
}

BlockMap xor_map() {
  BlockMap m;
  m.window = {0, 1};
  m.table = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}};
  m.target = Alphabet::binary();
  return m;
}

}  // namespace

TEST(EnumerateSft, FullShiftOnZ2) {
  EXPECT_EQ(enumerate_sft(fx::full_shift_spec(cyclic(2))).size(), 4u);
}

TEST(EnumerateSft, TwoOnCyclicFourHasTwoPoints) {
  auto y = enumerate_sft(fx::two_spec(cyclic(4)));
  ASSERT_EQ(y.size(), 2u);
  EXPECT_EQ(y.configs()[0], (Config{0, 0, 0, 0}));
  EXPECT_EQ(y.configs()[1], (Config{1, 1, 1, 1}));
}

TEST(EnumerateSft, GoldenMeanOnCyclicFive) {
  const auto spec = golden_mean_spec(5);
  auto y = enumerate_sft(spec);
  EXPECT_EQ(y.size(), 11u);
  EXPECT_EQ(y.configs(), oracle::naive_sft(spec));
}

TEST(EnumerateSft, MatchesNaiveFilterOnFixtures) {
  for (const auto& f : fx::sft_fixtures()) {
    if (f.spec.group->order() > 12) continue;
    auto y = enumerate_sft(f.spec);
    EXPECT_EQ(y.configs(), oracle::naive_sft(f.spec)) << f.name;
    EXPECT_TRUE(oracle::invariant(*f.spec.group, y.configs())) << f.name;
  }
}

TEST(EnumerateSft, BudgetIsEnforced) {
  Limits tight;
  tight.candidate_budget = 100;
  try {
    enumerate_sft(fx::full_shift_spec(cyclic(8)), tight);
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos) << e.what();
  }
}

TEST(SftSpec, ValidateRejectsMalformedSpecs) {
  auto g = cyclic(4);
  SftSpec unsorted{g, Alphabet::binary(), {1, 0}, {}};
  EXPECT_THROW(unsorted.validate(), ValidationError);
  // make_sft sorts the shape and permutes rows to match.
  auto sorted = make_sft(g, Alphabet::binary(), {1, 0}, {{1, 0}});
  EXPECT_EQ(sorted.shape, (std::vector<Element>{0, 1}));
  EXPECT_EQ(sorted.forbidden, (std::vector<std::vector<Symbol>>{{0, 1}}));
  EXPECT_THROW(make_sft(g, Alphabet::binary(), {0, 9}, {}), ValidationError);
  EXPECT_THROW(make_sft(g, Alphabet::binary(), {0, 1}, {{0}}), ValidationError);
  EXPECT_THROW(make_sft(g, Alphabet::binary(), {0, 1}, {{0, 2}}), ValidationError);
}

TEST(ShiftSpace, RejectsNonInvariantSets) {
  EXPECT_THROW(ShiftSpace(cyclic(2), Alphabet::binary(), {{0, 1}}), ValidationError);
  EXPECT_NO_THROW(ShiftSpace(cyclic(2), Alphabet::binary(), {{0, 1}, {1, 0}}));
}

TEST(Language, Examples) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(2)));
  auto empty_lang = language(full, std::vector<Element>{});
  ASSERT_EQ(empty_lang.size(), 1u);
  EXPECT_TRUE(empty_lang[0].is_empty());
  EXPECT_EQ(language(full, std::vector<Element>{0}).size(), 2u);

  auto g = cyclic(4);
  auto two = enumerate_sft(fx::two_spec(g));
  auto l = language(two, std::vector<Element>{0, 2});
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], Pattern(g, {0, 2}, {0, 0}));
  EXPECT_EQ(l[1], Pattern(g, {0, 2}, {1, 1}));
}

TEST(Language, PartitionsWithForbidden) {
  for (const auto& f : fx::sft_fixtures()) {
    auto y = enumerate_sft(f.spec);
    const std::vector<Element> shape = {0, 1};
    if (f.spec.group->order() < 2) continue;
    auto lang = language(y, shape);
    auto forb = forbidden_patterns(y, shape);
    const auto total = static_cast<std::size_t>(std::pow(f.spec.alphabet.size(), 2));
    EXPECT_EQ(lang.size() + forb.size(), total) << f.name;
    for (const auto& w : forb) EXPECT_FALSE(std::binary_search(lang.begin(), lang.end(), w)) << f.name;
  }
}

TEST(SpecFromLanguage, RecoversSpaceOnWholeGroup) {
  for (const auto& f : fx::sft_fixtures()) {
    auto y = enumerate_sft(f.spec);
    std::vector<Element> all(f.spec.group->order());
    for (Element a = 0; a < all.size(); ++a) all[a] = a;
    EXPECT_EQ(enumerate_sft(spec_from_language(y, all)).configs(), y.configs()) << f.name;
  }
}

TEST(Orbits, Examples) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(2)));
  EXPECT_EQ(orbit_sizes(full), (std::multiset<std::size_t>{1, 1, 2}));
  EXPECT_EQ(orbit_sizes(enumerate_sft(fx::two_spec(cyclic(4)))), (std::multiset<std::size_t>{1, 1}));
  EXPECT_EQ(orbit_sizes(enumerate_sft(golden_mean_spec(5))), (std::multiset<std::size_t>{1, 5, 5}));
}

TEST(EnumerateSubshifts, Examples) {
  auto single = enumerate_sft(fx::zero_point_spec(cyclic(3)));
  auto s1 = enumerate_subshifts(single);
  ASSERT_EQ(s1.size(), 2u);
  EXPECT_TRUE(s1.front().empty());
  EXPECT_EQ(s1.back(), single);
  EXPECT_EQ(enumerate_subshifts(enumerate_sft(fx::two_spec(cyclic(4)))).size(), 4u);
  auto golden = enumerate_subshifts(enumerate_sft(golden_mean_spec(5)));
  EXPECT_EQ(golden.size(), 8u);
  for (const auto& s : golden) EXPECT_TRUE(oracle::invariant(*s.group(), s.configs()));
  EXPECT_THROW(enumerate_subshifts(enumerate_sft(golden_mean_spec(5)), 2), ResourceError);
}

TEST(Intersect, MatchesSetIntersection) {
  auto g = cyclic(4);
  auto golden = enumerate_sft(fx::no_adjacent_ones_spec(g, 1));
  auto two = enumerate_sft(fx::two_spec(g));
  auto both = intersect(golden, two);
  ASSERT_EQ(both.size(), 1u);
  EXPECT_EQ(both.configs()[0], (Config{0, 0, 0, 0}));
}

TEST(BlockCode, IdentityAndSwap) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(4)));
  BlockMap id;
  id.window = {0};
  id.table = {{{0}, 0}, {{1}, 1}};
  id.target = Alphabet::binary();
  EXPECT_EQ(apply_block_code(full, id), full);
  BlockMap swap = id;
  swap.table = {{{0}, 1}, {{1}, 0}};
  EXPECT_EQ(apply_block_code(full, swap), full);
}

TEST(BlockCode, XorImageIsEvenWeight) {
  auto g = cyclic(4);
  auto full = enumerate_sft(fx::full_shift_spec(g));
  auto image = apply_block_code(full, xor_map());
  ASSERT_EQ(image.size(), 8u);
  for (const auto& x : image.configs()) EXPECT_EQ(std::count(x.begin(), x.end(), 1) % 2, 0);
  // Pointwise formula beta((sigma^h x)|_F) = x(h) + x(1 h).
  for (const auto& x : full.configs()) {
    auto y = apply_block_code(*g, xor_map(), x);
    for (Element h = 0; h < 4; ++h) EXPECT_EQ(y[h], x[h] ^ x[g->mul(1, h)]);
  }
}

TEST(BlockCode, MissingWindowPatternIsRejected) {
  auto full = enumerate_sft(fx::full_shift_spec(cyclic(4)));
  BlockMap partial = xor_map();
  partial.table.erase({1, 1});
  EXPECT_THROW(apply_block_code(full, partial), ValidationError);
}

TEST(BlockCode, CompositionMatchesSequentialApplication) {
  auto g = cyclic(5);
  auto full = enumerate_sft(fx::full_shift_spec(g));
  auto composed = compose_block_maps(full, xor_map(), xor_map());
  auto once = apply_block_code(full, xor_map());
  EXPECT_EQ(apply_block_code(full, composed), apply_block_code(once, xor_map()));
  for (const auto& x : full.configs())
    EXPECT_EQ(apply_block_code(*g, composed, x), apply_block_code(*g, xor_map(), apply_block_code(*g, xor_map(), x)));
}
