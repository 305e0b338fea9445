#include "freeshift/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "freeshift/error.hpp"

namespace freeshift::fixtures {

namespace {

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> m(n);
  std::iota(m.begin(), m.end(), Element{0});
  return m;
}

}  // namespace

GroupTower z2_power_tower(std::size_t m) {
  std::vector<GroupPtr> levels{cyclic(1)};
  std::vector<std::vector<Element>> embeddings;
  for (std::size_t k = 1; k <= m; ++k) {
    levels.push_back(direct_product(levels.back(), cyclic(2)));
    embeddings.push_back(identity_map(levels[k - 1]->order()));
  }
  return GroupTower::build(std::move(levels), std::move(embeddings));
}

GroupTower z4_tower() {
  GroupPtr a = cyclic(4);
  GroupPtr b = direct_product(a, cyclic(2));
  GroupPtr c = direct_product(b, cyclic(2));
  return GroupTower::build({a, b, c}, {identity_map(4), identity_map(8)});
}

GroupTower z2_in_z4_tower() { return GroupTower::build({cyclic(2), cyclic(4)}, {{0, 2}}); }

GroupPtr s3() {
  // Permutations of {0,1,2} as images; composition (p*q)(i) = q(p(i)).
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::vector<Element>> rows(6, std::vector<Element>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
      rows[a][b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(rows, {"()", "(012)", "(021)", "(01)", "(12)", "(02)"}));
}

std::vector<Element> greedy_generators(const GroupPtr& g) {
  std::vector<Element> gens;
  Subgroup h = trivial_subgroup(g);
  for (Element a = 0; a < g->order(); ++a) {
    if (h.contains(a)) continue;
    gens.push_back(a);
    h = generated_subgroup(g, gens);
  }
  return gens;
}

SftSpec full_shift_spec(const GroupPtr& g, std::size_t symbols) {
  return make_sft(g, Alphabet::numbered(symbols), {g->identity()}, {});
}

SftSpec two_spec(const GroupPtr& g, std::vector<Element> gens) {
  std::vector<Element> shape{g->identity()};
  shape.insert(shape.end(), gens.begin(), gens.end());
  shape = sorted_set(std::move(shape));
  std::vector<std::vector<Symbol>> rows;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << shape.size()); ++v) {
    std::vector<Symbol> row;
    for (std::size_t i = 0; i < shape.size(); ++i) row.push_back(static_cast<Symbol>((v >> i) & 1));
    if (std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) != row.end()) rows.push_back(std::move(row));
  }
  return make_sft(g, Alphabet::binary(), std::move(shape), std::move(rows));
}

SftSpec two_spec(const GroupPtr& g) { return two_spec(g, greedy_generators(g)); }

SftSpec no_adjacent_ones_spec(const GroupPtr& g, Element s) {
  if (s == g->identity()) return make_sft(g, Alphabet::binary(), {s}, {{1}});
  return make_sft(g, Alphabet::binary(), {g->identity(), s}, {{1, 1}});
}

SftSpec zero_point_spec(const GroupPtr& g) { return make_sft(g, Alphabet::binary(), {g->identity()}, {{1}}); }

std::vector<NamedSft> sft_fixtures() {
  const GroupPtr z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4), z5 = cyclic(5), z6 = cyclic(6);
  const GroupTower t = z2_power_tower(3);
  const GroupPtr v4 = t.level(2), v8 = t.level(3);
  const GroupPtr z4z2 = direct_product(z4, z2);
  const GroupPtr sym = s3();
  std::vector<NamedSft> out{
      {"full2_z2", full_shift_spec(z2)},
      {"full3_z2", full_shift_spec(z2, 3)},
      {"full2_z4", full_shift_spec(z4)},
      {"two_z2", two_spec(z2)},
      {"two_z4", two_spec(z4)},
      {"two_v4", two_spec(v4)},
      {"two_v8", two_spec(v8)},
      {"golden_z2", no_adjacent_ones_spec(z2, 1)},
      {"golden_z4", no_adjacent_ones_spec(z4, 1)},
      {"golden_z5", no_adjacent_ones_spec(z5, 1)},
      {"golden_z6", no_adjacent_ones_spec(z6, 1)},
      {"golden_v4", no_adjacent_ones_spec(v4, 1)},
      {"zero_z3", zero_point_spec(z3)},
      {"empty_z2", make_sft(z2, Alphabet::binary(), {0}, {{0}, {1}})},
      {"golden_z4z2", no_adjacent_ones_spec(z4z2, 1)},
      {"two_s3", two_spec(sym)},
      {"golden_s3", no_adjacent_ones_spec(sym, 1)},
      {"transposition_s3", no_adjacent_ones_spec(sym, 3)},
  };
  // Three symbols, no symbol followed by its successor mod 3.
  out.push_back({"tri_z4", make_sft(z4, Alphabet::numbered(3), {0, 1}, {{0, 1}, {1, 2}, {2, 0}})});
  return out;
}

std::vector<NamedExtension> extension_fixtures() {
  const GroupTower t = z2_power_tower(3);
  const GroupTower t4 = z4_tower();
  const GroupTower z24 = z2_in_z4_tower();
  const GroupPtr z2 = t.level(1), v4 = t.level(2);
  const GroupPtr sym = s3();

  std::vector<NamedExtension> out;
  auto step = [&](std::string name, SftSpec base, ExtensionContext ctx) {
    out.push_back({std::move(name), std::move(base), std::move(ctx)});
  };
  step("two_z2_to_v4", two_spec(z2), ExtensionContext::from_tower(t, 1, 2));
  step("golden_z2_to_v4", no_adjacent_ones_spec(z2, 1), ExtensionContext::from_tower(t, 1, 2));
  step("full_z2_to_v4", full_shift_spec(z2), ExtensionContext::from_tower(t, 1, 2));
  step("two_z2_to_v8", two_spec(z2), ExtensionContext::from_tower(t, 1, 3));
  step("two_v4_to_v8", two_spec(v4), ExtensionContext::from_tower(t, 2, 3));
  step("two_z2_to_z4", two_spec(z24.level(0)), ExtensionContext::from_tower(z24, 0, 1));
  step("golden_z2_to_z4", no_adjacent_ones_spec(z24.level(0), 1), ExtensionContext::from_tower(z24, 0, 1));
  step("two_z4_to_z4z2", two_spec(t4.level(0)), ExtensionContext::from_tower(t4, 0, 1));
  step("golden_z4_to_z4z2", no_adjacent_ones_spec(t4.level(0), 1), ExtensionContext::from_tower(t4, 0, 1));

  const ExtensionContext c3 = ExtensionContext::from_subgroup(Subgroup(sym, {0, 1, 2}));
  step("two_z3_to_s3", two_spec(c3.base()), c3);
  step("golden_z3_to_s3", no_adjacent_ones_spec(c3.base(), 1), c3);
  const ExtensionContext c2 = ExtensionContext::from_subgroup(Subgroup(sym, {0, 3}));
  step("golden_c2_to_s3", no_adjacent_ones_spec(c2.base(), 1), c2);
  return out;
}

SftSpec random_sft(std::mt19937_64& rng, const GroupPtr& g, std::size_t symbols, std::size_t max_shape,
                   std::size_t max_rows) {
  const Alphabet a = Alphabet::numbered(symbols);
  max_shape = std::clamp<std::size_t>(max_shape, 1, g->order());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Element> pool(g->order());
    std::iota(pool.begin(), pool.end(), Element{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_shape)(rng);
    std::vector<Element> shape(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, max_rows)(rng);
    std::vector<std::vector<Symbol>> forbidden;
    std::uniform_int_distribution<int> sym(0, static_cast<int>(symbols) - 1);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Symbol> row(k);
      for (auto& s : row) s = static_cast<Symbol>(sym(rng));
      forbidden.push_back(std::move(row));
    }
    SftSpec spec = make_sft(g, a, std::move(shape), std::move(forbidden));
    if (!enumerate_sft(spec).empty()) return spec;
  }
  throw InternalError("random_sft could not find a nonempty space");
}

std::vector<Element> random_choice(std::mt19937_64& rng, const CosetDecomposition& dec) {
  std::vector<Element> reps;
  for (const auto& coset : dec.cosets())
    reps.push_back(coset[std::uniform_int_distribution<std::size_t>(0, coset.size() - 1)(rng)]);
  return reps;
}

}  // namespace freeshift::fixtures
