#include <gtest/gtest.h>

#include "freeshift/fixtures.hpp"
#include "freeshift/io.hpp"

using namespace freeshift;

namespace {

const std::filesystem::path kFixtures = FREESHIFT_FIXTURE_DIR;

template <typename F>
std::string parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST(ParseGroup, InlineForms) {
  EXPECT_EQ(parse_group("group cyclic 6\n")->order(), 6u);
  auto t = parse_group("# comment\ngroup table 2\n0 1\n1 0\n");
  EXPECT_EQ(*t, *cyclic(2));
}

TEST(ParseGroup, FilesAndProducts) {
  EXPECT_EQ(*load_group(kFixtures / "v4.grp"), *direct_product(cyclic(2), cyclic(2)));
  EXPECT_EQ(load_group(kFixtures / "v8.grp")->order(), 8u);
  EXPECT_EQ(*load_group(kFixtures / "s3.grp"), *fixtures::s3());
}

TEST(ParseGroup, ErrorsCarryLineNumbers) {
  const auto msg = parse_error([] { parse_group("group table 2\n0 1\n1 1\n", "bad.grp"); });
  EXPECT_NE(msg.find("bad.grp"), std::string::npos) << msg;
  EXPECT_EQ(msg.rfind("bad.grp:1:", 0), 0u) << msg;
  EXPECT_NE(parse_error([] { parse_group("group dihedral 4\n"); }), "<no error>");
  EXPECT_NE(parse_error([] { parse_group("group cyclic x\n"); }).find("1"), std::string::npos);
}

TEST(ParseTower, Fixtures) {
  auto t = load_tower(kFixtures / "z2_power.tower");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.level(3)->order(), 8u);
  auto z = load_tower(kFixtures / "z2_in_z4.tower");
  EXPECT_EQ(z.embedding(0), (std::vector<Element>{0, 2}));
}

TEST(ParseTower, RejectsNonHomomorphism) {
  const std::string text = "tower\nlevel group cyclic 2\nembed 0 pairs 0->0 1->1\nlevel group cyclic 4\n";
  EXPECT_NE(parse_error([&] { parse_tower(text); }), "<no error>");
}

TEST(ParseSft, GoldenFive) {
  auto spec = load_sft(kFixtures / "golden5.sft");
  EXPECT_EQ(spec.group->order(), 5u);
  EXPECT_EQ(spec.shape, (std::vector<Element>{0, 1}));
  ASSERT_EQ(spec.forbidden.size(), 1u);
  EXPECT_EQ(enumerate_sft(spec).size(), 11u);
}

TEST(ParseSft, MalformedLinesReportLineNumber) {
  const std::string text = "sft\ngroup cyclic 3\nalphabet 0 1\nshape 0 1\nforbid 1 2\n";
  const auto msg = parse_error([&] { parse_sft(text, "x.sft"); });
  EXPECT_EQ(msg.rfind("x.sft:5:", 0), 0u) << msg;
  EXPECT_NE(parse_error([] { parse_sft("sft\nalphabet 0 1\n"); }), "<no error>");
}

TEST(ParseSpace, RoundTripThroughFormatter) {
  auto y = enumerate_sft(load_sft(kFixtures / "golden5.sft"));
  const std::string text = "space\ngroup cyclic 5\n" + format_space_body(y);
  EXPECT_EQ(parse_space(text), y);
  EXPECT_NE(parse_error([] { parse_space("space\ngroup cyclic 2\nalphabet 0 1\nconfig 0 1\n"); }), "<no error>");
}

TEST(ParseBlockMap, XorFixture) {
  auto m = load_block_map(kFixtures / "xor.map", Alphabet::binary());
  EXPECT_EQ(m.window, (std::vector<Element>{0, 1}));
  EXPECT_EQ(m.table.size(), 4u);
  EXPECT_EQ(m.table.at({1, 1}), 0);
}

TEST(ParsePattern, ShapeAndData) {
  auto g = cyclic(4);
  auto w = parse_pattern("shape 0 2\ndata 1 0\n", g, Alphabet::binary());
  EXPECT_EQ(w, Pattern(g, {0, 2}, {1, 0}));
}

TEST(FormatProperty, IndentsWitnessLines) {
  PropertyReport r{"si", false, {"u\nshape 2\ndata 0"}};
  EXPECT_EQ(format_property(r), "PROPERTY si FAIL\n  u\n  shape 2\n  data 0\n");
}
