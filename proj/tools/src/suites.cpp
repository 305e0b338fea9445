#include "freeshift_tools/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "freeshift/dynprops.hpp"
#include "freeshift/error.hpp"
#include "freeshift/fixtures.hpp"
#include "freeshift/freext.hpp"
#include "freeshift/io.hpp"
#include "freeshift/zline.hpp"

namespace freeshift::tools {

namespace {

using Outcome = CheckResult;

Outcome pass() { return {"", true, {}, 0.0}; }
Outcome fail(std::string why, std::vector<std::string> more = {}) {
  Outcome o{"", false, {std::move(why)}, 0.0};
  for (auto& m : more) o.witnesses.push_back(std::move(m));
  return o;
}

std::string dump(const ShiftSpace& y, const Config& x) {
  return format_pattern(Pattern::full(y.group(), x), y.alphabet());
}

// A configuration in exactly one of the two spaces, if any.
std::optional<std::string> difference(const ShiftSpace& a, const ShiftSpace& b) {
  for (const auto& x : a.configs())
    if (!b.contains(x)) return "only in first:\n" + dump(a, x);
  for (const auto& x : b.configs())
    if (!a.contains(x)) return "only in second:\n" + dump(b, x);
  if (!(a == b)) return std::string("spaces differ in group or alphabet");
  return std::nullopt;
}

class Runner {
 public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  void check(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    o.name = name;
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(o));
  }

  SuiteReport finish() {
    std::sort(report_.checks.begin(), report_.checks.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

std::vector<CosetFamily> all_families(const ExtensionContext& ctx, const Alphabet& a, const Limits& limits) {
  const ShiftSpace base = ShiftSpace::full(ctx.base(), a, limits);
  const ShiftSpace all = free_extension(base, ctx, limits);
  std::vector<CosetFamily> out;
  for (const auto& x : all.configs()) {
    CosetFamily fam;
    for (auto& w : kappa_inverse_config(ctx, x)) fam.members.push_back(Pattern::full(ctx.base(), std::move(w)));
    out.push_back(std::move(fam));
  }
  return out;
}

std::string family_text(const CosetFamily& fam, const Alphabet& a) {
  std::string s;
  for (std::size_t c = 0; c < fam.members.size(); ++c)
    s += "coset " + std::to_string(c) + "\n" + format_pattern(fam.members[c], a) + "\n";
  return s;
}

// --- shared checks ---------------------------------------------------------

Outcome extension_spec_matches(const Limits& limits) {
  for (const auto& f : fixtures::extension_fixtures()) {
    const ShiftSpace ext = free_extension(enumerate_sft(f.base, limits), f.context, limits);
    const ShiftSpace via = enumerate_sft(free_extension_spec(f.base, f.context), limits);
    if (auto d = difference(ext, via)) return fail("fixture " + f.name, {*d});
  }
  return pass();
}

Outcome cardinality_law(const Limits& limits) {
  for (const auto& f : fixtures::extension_fixtures()) {
    const ShiftSpace base = enumerate_sft(f.base, limits);
    const ShiftSpace ext = free_extension(base, f.context, limits);
    const BigInt expect = boost::multiprecision::pow(BigInt(base.size()), static_cast<unsigned>(f.context.index()));
    if (BigInt(ext.size()) != expect)
      return fail("fixture " + f.name + ": |ext| = " + std::to_string(ext.size()) + ", expected " + expect.str());
  }
  return pass();
}

Outcome entropy_preserved(std::uint64_t seed, const Limits& limits) {
  std::mt19937_64 rng(seed);
  const GroupTower z2 = fixtures::z2_power_tower(3);
  const GroupTower z4 = fixtures::z4_tower();
  for (int i = 0; i < 25; ++i) {
    const bool use_z2 = i % 2 == 0;
    const GroupTower& t = use_z2 ? z2 : z4;
    const std::size_t from = use_z2 ? 1 : 0;
    const SftSpec spec = fixtures::random_sft(rng, t.level(from));
    const ShiftSpace base = enumerate_sft(spec, limits);
    const EntropyValue h = entropy(base);
    for (std::size_t up = 1; up <= 2; ++up) {
      const ShiftSpace ext = tower_extend(base, t, from, from + up, limits);
      if (!(entropy(ext) == h))
        return fail("random base " + std::to_string(i) + " raised " + std::to_string(up) + " level(s): " +
                    entropy(ext).to_string() + " vs " + h.to_string());
    }
  }
  return pass();
}

Outcome factor_commutes(const Limits& limits) {
  for (const auto& f : fixtures::extension_fixtures()) {
    if (f.base.alphabet.size() != 2 || f.context.base()->order() < 2) continue;
    BlockMap beta;
    beta.window = {f.context.base()->identity(), 1};
    beta.target = Alphabet::binary();
    for (Symbol a = 0; a < 2; ++a)
      for (Symbol b = 0; b < 2; ++b) beta.table[{a, b}] = static_cast<Symbol>(a ^ b);
    const ShiftSpace base = enumerate_sft(f.base, limits);
    const ShiftSpace ext = free_extension(base, f.context, limits);
    const BlockMap lifted = lift_block_map(beta, f.context);
    const ShiftSpace lhs = apply_block_code(ext, lifted);
    const ShiftSpace rhs = free_extension(apply_block_code(base, beta), f.context, limits);
    if (auto d = difference(lhs, rhs)) return fail("fixture " + f.name + ": image of extension", {*d});
    for (const auto& x : ext.configs())
      if (factor_through_cosets(f.context, beta, x) != apply_block_code(*f.context.ambient(), lifted, x))
        return fail("fixture " + f.name + ": coset factorization differs at", {dump(ext, x)});
  }
  return pass();
}

// --- theorem-1 ---------------------------------------------------------------

SuiteReport theorem_1(const SuiteOptions& o) {
  Runner r("theorem-1");
  const Limits& L = o.limits;
  r.check("extension-of-sft-is-sft", [&] { return extension_spec_matches(L); });
  r.check("extension-cardinality-law", [&] { return cardinality_law(L); });
  r.check("factor-maps-commute-with-extension", [&] { return factor_commutes(L); });
  r.check("si-full-shift-cyclic4", [&] {
    const ShiftSpace y = enumerate_sft(fixtures::full_shift_spec(cyclic(4)), L);
    const std::vector<Element> k{0};
    return strongly_irreducible(y, k, L) ? pass() : fail("full shift on cyclic(4) is not SI with K = {e}");
  });
  r.check("si-two-cyclic4-needs-whole-group", [&] {
    const ShiftSpace y = enumerate_sft(fixtures::two_spec(cyclic(4)), L);
    for (std::uint32_t m = 0; m < 16; ++m) {
      std::vector<Element> k;
      for (Element e = 0; e < 4; ++e)
        if (m >> e & 1) k.push_back(e);
      if (strongly_irreducible(y, k, L) != (m == 15)) return fail("unexpected verdict for K mask " + std::to_string(m));
    }
    return pass();
  });
  r.check("si-transfers-across-extension", [&] {
    std::mt19937_64 rng(o.seed);
    const GroupTower t = fixtures::z2_power_tower(3);
    const GroupTower t4 = fixtures::z4_tower();
    for (int i = 0; i < 10; ++i) {
      const bool use_z2 = i % 2 == 0;
      const ExtensionContext ctx =
          use_z2 ? ExtensionContext::from_tower(t, 2, 3) : ExtensionContext::from_tower(t4, 0, 1);
      const ShiftSpace base = enumerate_sft(fixtures::random_sft(rng, ctx.base()), L);
      const ShiftSpace ext = free_extension(base, ctx, L);
      for (std::uint32_t m = 0; m < (1u << ctx.base()->order()); ++m) {
        std::vector<Element> k, k_up;
        for (Element e = 0; e < ctx.base()->order(); ++e)
          if (m >> e & 1) {
            k.push_back(e);
            k_up.push_back(ctx.to_ambient(e));
          }
        if (strongly_irreducible(base, k, L) != strongly_irreducible(ext, k_up, L))
          return fail("base " + std::to_string(i) + ", K mask " + std::to_string(m) + ": verdicts differ");
      }
    }
    return pass();
  });
  r.check("automorphisms-full2-cyclic2", [&] {
    const ShiftSpace y = enumerate_sft(fixtures::full_shift_spec(cyclic(2)), L);
    const auto aut = automorphism_group(y, L);
    return aut.order() == 4 ? pass() : fail("order " + std::to_string(aut.order()) + ", expected 4");
  });
  r.check("automorphisms-two-cyclic4", [&] {
    const ShiftSpace y = enumerate_sft(fixtures::two_spec(cyclic(4)), L);
    const auto aut = automorphism_group(y, L);
    return aut.order() == 2 ? pass() : fail("order " + std::to_string(aut.order()) + ", expected 2");
  });
  r.check("automorphisms-commute-and-contain-shifts", [&] {
    for (const auto& f : fixtures::sft_fixtures()) {
      const ShiftSpace y = enumerate_sft(f.spec, L);
      if (y.size() > L.automorphism_cap) continue;
      const auto aut = automorphism_group(y, L);
      for (const auto& p : aut.elements)
        if (!commutes_with_shifts(y, p)) return fail("fixture " + f.name + ": element does not commute");
      if (!y.group()->is_abelian()) continue;
      for (Element g = 0; g < y.group()->order(); ++g)
        if (!std::binary_search(aut.elements.begin(), aut.elements.end(), shift_permutation(y, g)))
          return fail("fixture " + f.name + ": shift by " + std::to_string(g) + " missing from Aut");
    }
    return pass();
  });
  return r.finish();
}

// --- theorem-2 ---------------------------------------------------------------

std::vector<EntropyValue> expected_power_set(std::size_t levels, std::uint64_t max_n) {
  std::vector<EntropyValue> out;
  for (std::size_t k = 0; k <= levels; ++k)
    for (std::uint64_t n = 1; n <= max_n; ++n) out.emplace_back(BigInt(n), std::uint64_t{1} << k);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string values_text(const std::vector<EntropyValue>& v) {
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : " ") + e.to_string();
  return s;
}

SuiteReport theorem_2(const SuiteOptions& o) {
  Runner r("theorem-2");
  const Limits& L = o.limits;
  r.check("entropy-set-z2-tower", [&] {
    const auto got = entropy_set(fixtures::z2_power_tower(3), 3, 4);
    const auto want = expected_power_set(3, 4);
    return got == want ? pass() : fail("got " + values_text(got), {"want " + values_text(want)});
  });
  r.check("entropy-set-trivial-tower", [&] {
    const auto got = entropy_set(GroupTower::build({cyclic(1)}, {}), 0, 5);
    const auto want = expected_power_set(0, 5);
    return got == want ? pass() : fail("got " + values_text(got), {"want " + values_text(want)});
  });
  r.check("zero-entropy-iff-singleton-fixed-point", [&] {
    for (const auto& f : fixtures::sft_fixtures()) {
      const ShiftSpace y = enumerate_sft(f.spec, L);
      if (y.empty()) continue;
      const auto c = zero_entropy_classify(y);
      if (c == ZeroEntropyClass::kZeroNotSingleton || (c == ZeroEntropyClass::kSingletonFixedPoint) != (y.size() == 1))
        return fail("fixture " + f.name + ": " + to_string(c));
    }
    return pass();
  });
  r.check("entropy-minimal", [&] {
    for (const auto& f : fixtures::sft_fixtures()) {
      const ShiftSpace y = enumerate_sft(f.spec, L);
      if (y.empty()) continue;
      const auto v = is_entropy_minimal(y, L);
      if (!v.minimal) return fail("fixture " + f.name + " has an equal-entropy proper subshift");
    }
    return pass();
  });
  r.check("mme-invariant-and-attains", [&] {
    for (const auto& f : fixtures::sft_fixtures()) {
      const ShiftSpace y = enumerate_sft(f.spec, L);
      if (y.empty()) continue;
      const InvariantMeasure mu = mme(y);
      validate_measure(mu);
      const double h = entropy(y).to_double();
      if (std::abs(measure_entropy(mu) - h) > kMeasureTolerance)
        return fail("fixture " + f.name + ": h_mu = " + std::to_string(measure_entropy(mu)) + ", h = " + std::to_string(h));
    }
    return pass();
  });
  r.check("mme-unique-golden-cyclic5", [&] {
    const ShiftSpace y = enumerate_sft(golden_mean_spec(5), L);
    const MmeReport rep = mme_unique_check(y, 200, L);
    return rep.unique ? pass()
                      : fail("uniform attains: " + std::string(rep.uniform_attains ? "yes" : "no") +
                             ", maximizers: " + std::to_string(rep.maximizers.size()));
  });
  r.check("mme-grid-below-entropy", [&] {
    for (const auto& f : fixtures::sft_fixtures()) {
      const ShiftSpace y = enumerate_sft(f.spec, L);
      if (y.empty() || orbits(y).size() > 4) continue;
      const MmeReport rep = mme_unique_check(y, 24, L);
      if (!rep.uniform_attains || rep.best_non_uniform > rep.entropy + kMeasureTolerance)
        return fail("fixture " + f.name + ": grid measure above h");
    }
    return pass();
  });
  r.check("mme-pushforward-of-product", [&] {
    for (const auto& f : fixtures::extension_fixtures()) {
      if (f.context.ambient()->order() > 8) continue;
      const ShiftSpace base = enumerate_sft(f.base, L);
      const InvariantMeasure pushed = pushforward_product(mme(base), f.context, L);
      const InvariantMeasure uniform = mme(pushed.space);
      if (pushed.weights != uniform.weights) return fail("fixture " + f.name + ": pushforward is not uniform");
    }
    return pass();
  });
  r.check("entropy-preserved-by-extension", [&] { return entropy_preserved(o.seed, L); });
  return r.finish();
}

// --- free-extension ----------------------------------------------------------

SuiteReport free_extension_suite(const SuiteOptions& o) {
  Runner r("free-extension");
  const Limits& L = o.limits;
  const GroupTower t = fixtures::z2_power_tower(3);
  const ExtensionContext v4 = ExtensionContext::from_tower(t, 1, 2);

  auto for_small_binary = [&](const std::function<Outcome(const fixtures::NamedExtension&)>& body) {
    for (const auto& f : fixtures::extension_fixtures()) {
      if (f.base.alphabet.size() != 2 || f.context.ambient()->order() > 8) continue;
      Outcome out = body(f);
      if (!out.pass) return out;
    }
    return pass();
  };

  r.check("conjugacy-identity", [&] {
    return for_small_binary([&](const fixtures::NamedExtension& f) {
      const auto& ctx = f.context;
      for (const auto& fam : all_families(ctx, f.base.alphabet, L)) {
        const Config x = kappa(ctx, fam).data();
        for (Element g = 0; g < ctx.ambient()->order(); ++g)
          if (kappa(ctx, rho_action(ctx, g, fam)).data() != shift_config(*ctx.ambient(), g, x))
            return fail("fixture " + f.name + ", g = " + std::to_string(g), {family_text(fam, f.base.alphabet)});
      }
      return pass();
    });
  });
  r.check("rho-action-law", [&] {
    for (const auto& fam : all_families(v4, Alphabet::binary(), L))
      for (Element g = 0; g < 4; ++g)
        for (Element h = 0; h < 4; ++h)
          if (!(rho_action(v4, g, rho_action(v4, h, fam)) == rho_action(v4, v4.ambient()->mul(g, h), fam)))
            return fail("g = " + std::to_string(g) + ", h = " + std::to_string(h), {family_text(fam, Alphabet::binary())});
    return pass();
  });
  r.check("kappa-round-trip", [&] {
    return for_small_binary([&](const fixtures::NamedExtension& f) {
      for (const auto& fam : all_families(f.context, f.base.alphabet, L))
        if (!(kappa_inverse(f.context, kappa(f.context, fam)) == fam))
          return fail("fixture " + f.name, {family_text(fam, f.base.alphabet)});
      return pass();
    });
  });
  r.check("kappa-bijective", [&] {
    return for_small_binary([&](const fixtures::NamedExtension& f) {
      std::set<Config> images;
      const auto fams = all_families(f.context, f.base.alphabet, L);
      for (const auto& fam : fams) images.insert(kappa(f.context, fam).data());
      const std::size_t want = std::size_t{1} << f.context.ambient()->order();
      return images.size() == want && fams.size() == want ? pass() : fail("fixture " + f.name + ": image count");
    });
  });
  r.check("trivial-extension", [&] {
    for (const auto& f : fixtures::sft_fixtures()) {
      const ShiftSpace y = enumerate_sft(f.spec, L);
      const ExtensionContext ctx = ExtensionContext::from_subgroup(whole_group(y.group()));
      const ShiftSpace back = free_extension(y, ctx, L);
      if (back.configs() != y.configs()) return fail("fixture " + f.name);
    }
    return pass();
  });
  r.check("two-z2-extends-to-4-coset-constant", [&] {
    const ShiftSpace ext = free_extension(enumerate_sft(fixtures::two_spec(v4.base()), L), v4, L);
    if (ext.size() != 4) return fail("size " + std::to_string(ext.size()));
    for (const auto& x : ext.configs())
      for (const auto& coset : v4.decomposition().cosets())
        for (Element e : coset)
          if (x[e] != x[coset.front()]) return fail("not constant on a coset", {dump(ext, x)});
    return pass();
  });
  r.check("golden-z2-extends-to-9", [&] {
    const SftSpec s = fixtures::no_adjacent_ones_spec(v4.base(), 1);
    const ShiftSpace a = free_extension(enumerate_sft(s, L), v4, L);
    const ShiftSpace b = enumerate_sft(free_extension_spec(s, v4), L);
    if (a.size() != 9 || b.size() != 9) return fail("sizes " + std::to_string(a.size()) + ", " + std::to_string(b.size()));
    return pass();
  });
  r.check("forbidden-patterns-extend", [&] { return extension_spec_matches(L); });
  r.check("base-extract-round-trip", [&] {
    for (const auto& f : fixtures::extension_fixtures()) {
      const ShiftSpace base = enumerate_sft(f.base, L);
      const ShiftSpace x = free_extension(base, f.context, L);
      std::vector<Element> shape;
      for (Element e : f.base.shape) shape.push_back(f.context.to_ambient(e));
      const SftSpec rec = base_extract(x, shape, f.context, L);
      if (auto d = difference(enumerate_sft(free_extension_spec(rec, f.context), L), x))
        return fail("fixture " + f.name + ": re-extension", {*d});
      if (auto d = difference(enumerate_sft(rec, L), base)) return fail("fixture " + f.name + ": recovered base", {*d});
    }
    return pass();
  });
  r.check("base-extract-full-shift", [&] {
    const ShiftSpace x = ShiftSpace::full(v4.ambient(), Alphabet::binary(), L);
    const std::vector<Element> shape{0};
    const SftSpec rec = base_extract(x, shape, v4, L);
    return rec.forbidden.empty() ? pass() : fail(std::to_string(rec.forbidden.size()) + " forbidden patterns");
  });
  r.check("base-extract-golden", [&] {
    const SftSpec s = fixtures::no_adjacent_ones_spec(v4.base(), 1);
    const ShiftSpace x = free_extension(enumerate_sft(s, L), v4, L);
    const std::vector<Element> shape{v4.to_ambient(0), v4.to_ambient(1)};
    const SftSpec rec = base_extract(x, shape, v4, L);
    const std::size_t n = enumerate_sft(rec, L).size();
    return n == 3 ? pass() : fail("recovered base has " + std::to_string(n) + " configurations");
  });
  r.check("choice-independence", [&] {
    std::mt19937_64 rng(o.seed);
    const GroupTower z24 = fixtures::z2_in_z4_tower();
    const ExtensionContext ctx = ExtensionContext::from_tower(z24, 0, 1);
    const GroupPtr z2 = ctx.base();
    const std::vector<SftSpec> bases{fixtures::full_shift_spec(z2), fixtures::two_spec(z2),
                                     fixtures::no_adjacent_ones_spec(z2, 1), fixtures::zero_point_spec(z2),
                                     make_sft(z2, Alphabet::numbered(3), {0, 1}, {{0, 1}, {1, 2}, {2, 0}})};
    std::vector<ShiftSpace> canonical;
    for (const auto& b : bases) canonical.push_back(free_extension(enumerate_sft(b, L), ctx, L));
    for (int i = 0; i < 50; ++i) {
      const ExtensionContext alt = ctx.with_choice(fixtures::random_choice(rng, ctx.decomposition()));
      for (std::size_t b = 0; b < bases.size(); ++b)
        if (auto d = difference(free_extension(enumerate_sft(bases[b], L), alt, L), canonical[b]))
          return fail("choice " + std::to_string(i) + ", base " + std::to_string(b), {*d});
    }
    return pass();
  });
  r.check("tower-stepwise-equals-direct", [&] {
    const ShiftSpace y = enumerate_sft(fixtures::two_spec(t.level(1)), L);
    const ShiftSpace step = tower_extend(y, t, 1, 3, L);
    const ShiftSpace direct = free_extension(y, ExtensionContext::from_tower(t, 1, 3), L);
    if (step.size() != 16) return fail("stepwise size " + std::to_string(step.size()));
    if (auto d = difference(step, direct)) return fail("stepwise and direct differ", {*d});
    return pass();
  });
  r.check("intersection-commutes", [&] {
    std::mt19937_64 rng(o.seed + 1);
    const GroupTower z24 = fixtures::z2_in_z4_tower();
    const GroupTower t4 = fixtures::z4_tower();
    for (const ExtensionContext& ctx :
         {v4, ExtensionContext::from_tower(z24, 0, 1), ExtensionContext::from_tower(t4, 0, 1)}) {
      std::vector<ShiftSpace> ys;
      for (int i = 0; i < 5; ++i) ys.push_back(enumerate_sft(fixtures::random_sft(rng, ctx.base()), L));
      for (const auto& a : ys)
        for (const auto& b : ys) {
          const ShiftSpace lhs = free_extension(intersect(a, b), ctx, L);
          const ShiftSpace rhs = intersect(free_extension(a, ctx, L), free_extension(b, ctx, L));
          if (auto d = difference(lhs, rhs)) return fail("intersection of extensions", {*d});
        }
    }
    return pass();
  });
  r.check("entropy-preserved", [&] { return entropy_preserved(o.seed, L); });
  r.check("factor-decomposition", [&] { return factor_commutes(L); });
  r.check("extension-cardinality-law", [&] { return cardinality_law(L); });
  return r.finish();
}

// --- zline -------------------------------------------------------------------

SuiteReport zline_suite(const SuiteOptions&) {
  Runner r("zline");
  r.check("golden-small-counts", [&] {
    const std::vector<std::pair<std::size_t, int>> want{{3, 4}, {4, 7}, {5, 11}};
    for (auto [n, c] : want)
      if (golden_mean_cyclic_count(n) != c) return fail("n = " + std::to_string(n) + ": " + golden_mean_cyclic_count(n).str());
    return pass();
  });
  r.check("golden-lucas-recurrence", [&] {
    for (std::size_t n = 4; n <= 30; ++n)
      if (golden_mean_cyclic_count(n) != golden_mean_cyclic_count(n - 1) + golden_mean_cyclic_count(n - 2))
        return fail("recurrence fails at n = " + std::to_string(n));
    return pass();
  });
  r.check("golden-transfer-matches-enumeration", [&] {
    for (std::size_t n = 3; n <= 16; ++n)
      if (BigInt(golden_mean_enumerated_count(n)) != golden_mean_transfer_count(n))
        return fail("n = " + std::to_string(n));
    return pass();
  });
  r.check("golden-n20-within-tolerance", [&] {
    const double err = std::abs(golden_mean_entropy_estimate(20) - log_phi());
    if (golden_mean_cyclic_count(20) != 15127) return fail("count(20) = " + golden_mean_cyclic_count(20).str());
    return err < 1e-3 ? pass() : fail("error " + std::to_string(err));
  });
  r.check("golden-error-decreasing", [&] {
    double prev = 1e9;
    for (std::size_t n : {10, 20, 30}) {
      const double err = std::abs(golden_mean_entropy_estimate(n) - log_phi());
      if (!(err < prev)) return fail("error does not decrease at n = " + std::to_string(n));
      prev = err;
    }
    return pass();
  });
  r.check("golden-outside-entropy-set", [&] {
    const auto set = entropy_set(fixtures::z2_power_tower(3), 3, 4);
    for (std::size_t n : {10, 20}) {
      const BigInt c = golden_mean_cyclic_count(n);
      for (const auto& v : set)
        if (compare_log_ratio(c, n, v.count(), v.denom()) == 0)
          return fail("log(" + c.str() + ")/" + std::to_string(n) + " equals " + v.to_string());
    }
    return pass();
  });
  r.check("even-word-examples", [&] {
    return even_shift_word_check(Word("0110")) && !even_shift_word_check(Word("010")) &&
                   even_shift_word_check(Word("111"))
               ? pass()
               : fail("word check disagrees with 0110 / 010 / 111");
  });
  r.check("even-cover-factor", [&] {
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto v = even_cover_factor_check(n);
      if (!v.agree) return fail("n = " + std::to_string(n), {"witness " + v.witness->to_string()});
    }
    return pass();
  });
  r.check("sft-gap-witness", [&] {
    for (std::size_t k = 2; k <= 10; ++k) {
      const Word w = sft_gap_witness(k);
      if (w.size() != 2 * k + 3) return fail("k = " + std::to_string(k) + ": length " + std::to_string(w.size()));
    }
    return pass();
  });
  return r.finish();
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-1", "theorem-2", "free-extension", "zline"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "theorem-1") return theorem_1(options);
  if (name == "theorem-2") return theorem_2(options);
  if (name == "free-extension") return free_extension_suite(options);
  if (name == "zline") return zline_suite(options);
  throw InputError("unknown suite '" + name + "'");
}

std::string format_suite(const SuiteReport& report, bool with_times) {
  std::ostringstream os;
  os << "SUITE " << report.suite << '\n';
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    PropertyReport p{c.name, c.pass, c.witnesses};
    if (with_times) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << "time " << c.seconds << "s";
      p.witnesses.push_back(t.str());
    }
    os << format_property(p);
    passed += c.pass;
  }
  os << "SUITE " << report.suite << ' ' << (report.pass() ? "PASS" : "FAIL") << " (" << passed << '/'
     << report.checks.size() << " checks)\n";
  return os.str();
}

}  // namespace freeshift::tools
