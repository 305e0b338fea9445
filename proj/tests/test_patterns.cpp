#include <gtest/gtest.h>

#include <random>

#include "freeshift/error.hpp"
#include "freeshift/patterns.hpp"

using namespace freeshift;

namespace {

Pattern random_pattern(std::mt19937_64& rng, const GroupPtr& g, std::size_t symbols) {
  std::vector<Element> shape;
  std::vector<Symbol> data;
  for (Element a = 0; a < g->order(); ++a) {
    if (rng() % 2) {
      shape.push_back(a);
      data.push_back(static_cast<Symbol>(rng() % symbols));
    }
  }
  return Pattern(g, shape, data);
}

}  // namespace

TEST(ShiftPattern, IdentityLeavesPatternUnchanged) {
  auto g = cyclic(5);
  Pattern w(g, {1, 3}, {1, 0});
  EXPECT_EQ(shift_pattern(0, w), w);
}

TEST(ShiftPattern, MovesShapeByInverse) {
  auto g = cyclic(4);
  Pattern w(g, {1}, {1});
  EXPECT_EQ(shift_pattern(1, w), Pattern(g, {0}, {1}));
}

TEST(ShiftPattern, ActionLawOnCyclicSix) {
  auto g = cyclic(6);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = random_pattern(rng, g, 3);
    for (Element a = 0; a < 6; ++a)
      for (Element b = 0; b < 6; ++b) EXPECT_EQ(shift_pattern(a, shift_pattern(b, w)), shift_pattern(g->mul(a, b), w));
  }
}

TEST(Restrict, Examples) {
  auto g = cyclic(4);
  Pattern w(g, {0, 2, 3}, {1, 0, 1});
  EXPECT_EQ(restrict(w, w.shape()), w);
  EXPECT_TRUE(restrict(w, std::vector<Element>{}).is_empty());
  EXPECT_EQ(restrict(w, std::vector<Element>{2, 3}), Pattern(g, {2, 3}, {0, 1}));
  EXPECT_THROW(restrict(w, std::vector<Element>{1}), InputError);
}

TEST(Restrict, CommutesWithShift) {
  auto g = cyclic(4);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<Element> shape;
    for (Element a = 0; a < 4; ++a)
      if (mask >> a & 1) shape.push_back(a);
    if (shape.size() > 3) continue;
    for (std::uint32_t bits = 0; bits < (1u << shape.size()); ++bits) {
      std::vector<Symbol> data;
      for (std::size_t i = 0; i < shape.size(); ++i) data.push_back(bits >> i & 1);
      Pattern w(g, shape, data);
      for (std::uint32_t sub = 0; sub < (1u << shape.size()); ++sub) {
        std::vector<Element> e;
        for (std::size_t i = 0; i < shape.size(); ++i)
          if (sub >> i & 1) e.push_back(shape[i]);
        for (Element s = 0; s < 4; ++s) {
          // (sigma^s w)|_{E s^{-1}} = sigma^s (w|_E)
          std::vector<Element> moved;
          for (Element a : e) moved.push_back(g->mul(a, g->inv(s)));
          EXPECT_EQ(restrict(shift_pattern(s, w), sorted_set(moved)), shift_pattern(s, restrict(w, e)));
        }
      }
    }
  }
}

TEST(Extensions, Examples) {
  auto g = cyclic(4);
  const auto a = Alphabet::binary();
  Pattern w(g, {0, 1}, {1, 0});
  auto same = extensions(w, w.shape(), a);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], w);
  auto four = extensions(w, std::vector<Element>{0, 1, 2, 3}, a);
  EXPECT_EQ(four.size(), 4u);
  for (const auto& x : four) EXPECT_EQ(restrict(x, w.shape()), w);
  EXPECT_EQ(extensions(Pattern::empty(g), std::vector<Element>{0, 1, 2, 3}, Alphabet::numbered(3)).size(), 81u);
  EXPECT_THROW(extensions(w, std::vector<Element>{0}, a), InputError);
}

TEST(Join, Examples) {
  auto g = cyclic(5);
  Pattern w(g, {1, 4}, {0, 1});
  EXPECT_EQ(join(w, Pattern::empty(g)), w);
  EXPECT_THROW(join(w, Pattern(g, {4}, {0})), InputError);
  EXPECT_THROW(join(w, Pattern(cyclic(6), {0}, {0})), InputError);
}

TEST(Join, CommutesOnRandomDisjointPairs) {
  auto g = cyclic(8);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_pattern(rng, g, 2);
    auto v = random_pattern(rng, g, 2);
    std::vector<Element> keep;
    for (Element a : v.shape())
      if (!u.covers(a)) keep.push_back(a);
    v = restrict(v, keep);
    EXPECT_EQ(join(u, v), join(v, u));
  }
}

TEST(Join, ShiftDistributesOnCyclicFour) {
  auto g = cyclic(4);
  for (std::uint32_t su = 0; su < 16; ++su)
    for (std::uint32_t sv = 0; sv < 16; ++sv) {
      if (su & sv) continue;
      std::vector<Element> fu, fv;
      for (Element a = 0; a < 4; ++a) {
        if (su >> a & 1) fu.push_back(a);
        if (sv >> a & 1) fv.push_back(a);
      }
      Pattern u(g, fu, std::vector<Symbol>(fu.size(), 1));
      Pattern v(g, fv, std::vector<Symbol>(fv.size(), 0));
      for (Element s = 0; s < 4; ++s) EXPECT_EQ(shift_pattern(s, join(u, v)), join(shift_pattern(s, u), shift_pattern(s, v)));
    }
}

TEST(Alphabet, LookupAndErrors) {
  Alphabet a({"a", "b", "c"});
  EXPECT_EQ(a.index_of("c"), 2);
  EXPECT_THROW(a.index_of("z"), InputError);
  EXPECT_EQ(Alphabet::binary().symbols(), (std::vector<std::string>{"0", "1"}));
}

TEST(FormatPattern, TwoLineForm) {
  auto g = cyclic(4);
  EXPECT_EQ(format_pattern(Pattern(g, {0, 2}, {1, 0}), Alphabet::binary()), "shape 0 2\ndata 1 0");
}
