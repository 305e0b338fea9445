#include "freeshift/dynprops.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace freeshift {

// --- entropy ---------------------------------------------------------------

EntropyValue::EntropyValue(BigInt n, std::uint64_t m) {
  if (n < 1) throw DomainError("entropy value needs a positive count");
  if (m < 1) throw DomainError("entropy value needs a positive denominator");
  if (n == 1) {
    count_ = 1;
    denom_ = 1;
    return;
  }
  BigInt root = n;
  std::uint64_t k = 1;
  for (unsigned e = boost::multiprecision::msb(n); e >= 2; --e) {
    BigInt r = integer_root(n, e);
    if (boost::multiprecision::pow(r, e) == n) {
      root = r;
      k = e;
      break;
    }
  }
  const std::uint64_t d = std::gcd(k, m);
  count_ = boost::multiprecision::pow(root, static_cast<unsigned>(k / d));
  denom_ = m / d;
}

double EntropyValue::to_double() const { return log_big(count_) / static_cast<double>(denom_); }

std::string EntropyValue::to_string() const {
  std::ostringstream os;
  os << "log(" << count_ << ")/" << denom_;
  return os.str();
}

std::strong_ordering compare_log_ratio(const BigInt& n1, std::uint64_t m1, const BigInt& n2, std::uint64_t m2) {
  const BigInt lhs = boost::multiprecision::pow(n1, static_cast<unsigned>(m2));
  const BigInt rhs = boost::multiprecision::pow(n2, static_cast<unsigned>(m1));
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const EntropyValue& a, const EntropyValue& b) {
  return compare_log_ratio(a.count_, a.denom_, b.count_, b.denom_);
}

EntropyValue entropy(const ShiftSpace& y) {
  if (y.empty()) throw DomainError("entropy of the empty shift is undefined");
  return EntropyValue(BigInt(y.size()), y.group()->order());
}

std::vector<EntropyValue> entropy_set(const GroupTower& tower, std::size_t max_level, std::uint64_t max_n, bool fast,
                                      std::size_t closure_budget) {
  if (max_level >= tower.size()) throw InputError("max_level is beyond the tower");
  if (max_n < 1) throw InputError("max_n must be at least 1");
  std::set<std::size_t> orders{1};
  for (std::size_t i = 0; i <= max_level; ++i) {
    if (fast) {
      orders.insert(tower.level(i)->order());
      continue;
    }
    for (const auto& h : all_subgroups(tower.level(i), closure_budget)) orders.insert(h.order());
  }
  if (orders.size() * max_n > (std::uint64_t{1} << 24)) throw ResourceError("entropy set is too large");
  std::vector<EntropyValue> out;
  for (std::size_t m : orders)
    for (std::uint64_t n = 1; n <= max_n; ++n) out.emplace_back(BigInt(n), m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- strong irreducibility -------------------------------------------------

namespace {

using Mask = std::uint32_t;

std::string restrict_key(const Config& x, Mask m) {
  std::string key;
  for (Mask rest = m; rest; rest &= rest - 1) key.push_back(static_cast<char>(x[std::countr_zero(rest)]));
  return key;
}

std::vector<Element> mask_elements(Mask m) {
  std::vector<Element> out;
  for (Mask rest = m; rest; rest &= rest - 1) out.push_back(static_cast<Element>(std::countr_zero(rest)));
  return out;
}

struct SiTables {
  std::size_t n = 0;
  Mask full = 0;
  std::vector<Mask> k_times;  // k_times[mask] = K * mask
};

SiTables si_tables(const FiniteGroup& g, Mask k) {
  SiTables t;
  t.n = g.order();
  t.full = t.n == 32 ? ~Mask{0} : ((Mask{1} << t.n) - 1);
  std::vector<Mask> single(t.n, 0);
  for (Element f = 0; f < t.n; ++f)
    for (Mask rest = k; rest; rest &= rest - 1) single[f] |= Mask{1} << g.mul(static_cast<Element>(std::countr_zero(rest)), f);
  t.k_times.assign(std::size_t{1} << t.n, 0);
  for (std::size_t m = 1; m < t.k_times.size(); ++m)
    t.k_times[m] = t.k_times[m & (m - 1)] | single[std::countr_zero(static_cast<Mask>(m))];
  return t;
}

struct PairStats {
  std::vector<std::string> us, vs;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool complete() const { return pairs.size() == us.size() * vs.size(); }
};

PairStats pair_stats(const ShiftSpace& y, Mask u, Mask v) {
  PairStats s;
  for (const auto& x : y.configs()) {
    s.pairs.emplace_back(restrict_key(x, u), restrict_key(x, v));
    s.us.push_back(s.pairs.back().first);
    s.vs.push_back(s.pairs.back().second);
  }
  for (auto* vec : {&s.us, &s.vs}) {
    std::sort(vec->begin(), vec->end());
    vec->erase(std::unique(vec->begin(), vec->end()), vec->end());
  }
  std::sort(s.pairs.begin(), s.pairs.end());
  s.pairs.erase(std::unique(s.pairs.begin(), s.pairs.end()), s.pairs.end());
  return s;
}

// Only maximal pairs F_u = G \ K F_v need checking: a smaller F_u' is
// handled by extending u' to F_u first.
bool si_holds(const ShiftSpace& y, const SiTables& t) {
  for (std::size_t v = 1; v < t.k_times.size(); ++v) {
    const Mask u = t.full & ~t.k_times[v];
    if (u == 0) continue;
    if (!pair_stats(y, u, static_cast<Mask>(v)).complete()) return false;
  }
  return true;
}

SiCounterexample si_counterexample(const ShiftSpace& y, const SiTables& t) {
  const auto pattern = [&](Mask m, const std::string& key) {
    return Pattern(y.group(), mask_elements(m), std::vector<Symbol>(key.begin(), key.end()));
  };
  for (std::size_t total = 2; total <= t.n; ++total) {
    for (std::size_t v = 1; v < t.k_times.size(); ++v) {
      const auto pv = static_cast<std::size_t>(std::popcount(static_cast<Mask>(v)));
      if (pv >= total) continue;
      const Mask allowed = t.full & ~t.k_times[v];
      std::vector<Mask> us;
      for (Mask s = allowed;; s = (s - 1) & allowed) {
        if (static_cast<std::size_t>(std::popcount(s)) == total - pv) us.push_back(s);
        if (s == 0) break;
      }
      std::sort(us.begin(), us.end());
      for (Mask u : us) {
        const PairStats s = pair_stats(y, u, static_cast<Mask>(v));
        if (s.complete()) continue;
        for (const auto& a : s.us)
          for (const auto& b : s.vs)
            if (!std::binary_search(s.pairs.begin(), s.pairs.end(), std::make_pair(a, b)))
              return {pattern(u, a), pattern(static_cast<Mask>(v), b)};
      }
    }
  }
  throw InternalError("strong irreducibility failed but no counterexample was found");
}

Mask to_mask(const FiniteGroup& g, std::span<const Element> k) {
  Mask m = 0;
  for (Element e : k) {
    g.require(e, "K element");
    m |= Mask{1} << e;
  }
  return m;
}

void si_budget(const ShiftSpace& y, const Limits& limits, std::size_t factor) {
  const std::size_t n = y.group()->order();
  if (n > 24) throw ResourceError("strong irreducibility search supports groups of order at most 24");
  const double work = std::ldexp(static_cast<double>(std::max<std::size_t>(y.size(), 1)), static_cast<int>(n)) *
                      static_cast<double>(factor);
  if (work > static_cast<double>(limits.candidate_budget))
    throw ResourceError("strong irreducibility search exceeds the candidate budget");
}

}  // namespace

SiVerdict strongly_irreducible_witness(const ShiftSpace& y, std::span<const Element> k, bool search_minimal,
                                       const Limits& limits) {
  si_budget(y, limits, 1);
  const FiniteGroup& g = *y.group();
  SiVerdict out;
  const SiTables t = si_tables(g, to_mask(g, k));
  out.holds = si_holds(y, t);
  if (!out.holds) out.counterexample = si_counterexample(y, t);
  if (search_minimal) {
    si_budget(y, limits, std::size_t{1} << g.order());
    std::vector<Mask> ks(std::size_t{1} << g.order());
    std::iota(ks.begin(), ks.end(), Mask{0});
    std::stable_sort(ks.begin(), ks.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<Mask> minimal;
    for (Mask cand : ks) {
      if (std::any_of(minimal.begin(), minimal.end(), [&](Mask m) { return (m & cand) == m; })) continue;
      if (si_holds(y, si_tables(g, cand))) minimal.push_back(cand);
    }
    std::sort(minimal.begin(), minimal.end(), [](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    for (Mask m : minimal) out.minimal_witnesses.push_back(mask_elements(m));
  }
  return out;
}

bool strongly_irreducible(const ShiftSpace& y, std::span<const Element> k, const Limits& limits) {
  si_budget(y, limits, 1);
  const FiniteGroup& g = *y.group();
  return si_holds(y, si_tables(g, to_mask(g, k)));
}

// --- entropy minimality ----------------------------------------------------

EntropyMinimalVerdict is_entropy_minimal(const ShiftSpace& y, const Limits& limits, const SubshiftSource& source) {
  if (y.empty()) throw DomainError("entropy minimality of the empty shift is undefined");
  const std::vector<ShiftSpace> subs = source ? source(y) : enumerate_subshifts(y, limits.orbit_cap);
  const EntropyValue h = entropy(y);
  EntropyMinimalVerdict out;
  for (const auto& z : subs) {
    if (z.empty() || z == y) continue;
    const bool smaller = entropy(z) < h;
    if (same_group(z.group(), y.group()) && smaller != (z.size() < y.size()))
      throw InternalError("entropy comparison disagrees with cardinality comparison");
    if (!smaller) {
      out.minimal = false;
      out.counterexample = z;
      return out;
    }
  }
  return out;
}

// --- zero entropy ----------------------------------------------------------

std::string to_string(ZeroEntropyClass c) {
  switch (c) {
    case ZeroEntropyClass::kSingletonFixedPoint:
      return "zero-and-singleton-fixed-point";
    case ZeroEntropyClass::kPositiveEntropy:
      return "positive-entropy";
    case ZeroEntropyClass::kZeroNotSingleton:
      return "zero-but-not-singleton";
  }
  return "unknown";
}

ZeroEntropyClass zero_entropy_classify(const ShiftSpace& y) {
  const EntropyValue h = entropy(y);
  if (!h.is_zero()) return ZeroEntropyClass::kPositiveEntropy;
  if (y.size() != 1) return ZeroEntropyClass::kZeroNotSingleton;
  const Config& x = y.configs().front();
  for (Element g = 0; g < y.group()->order(); ++g)
    if (shift_config(*y.group(), g, x) != x) throw InternalError("singleton shift space is not a fixed point");
  return ZeroEntropyClass::kSingletonFixedPoint;
}

// --- automorphisms ---------------------------------------------------------

std::vector<std::size_t> shift_permutation(const ShiftSpace& y, Element g) {
  std::vector<std::size_t> perm(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    perm[i] = y.index_of(shift_config(*y.group(), g, y.configs()[i]));
    if (perm[i] == y.size()) throw InternalError("shift space is not shift invariant");
  }
  return perm;
}

bool commutes_with_shifts(const ShiftSpace& y, std::span<const std::size_t> perm) {
  if (perm.size() != y.size()) return false;
  for (Element g = 0; g < y.group()->order(); ++g) {
    const auto s = shift_permutation(y, g);
    for (std::size_t i = 0; i < y.size(); ++i)
      if (perm[s[i]] != s[perm[i]]) return false;
  }
  return true;
}

AutomorphismGroup automorphism_group(const ShiftSpace& y, const Limits& limits) {
  if (y.size() > limits.automorphism_cap)
    throw ResourceError("automorphism search is capped at " + std::to_string(limits.automorphism_cap) +
                        " configurations");
  const std::size_t n = y.size();
  const std::size_t order = y.group()->order();
  std::vector<std::vector<std::size_t>> shifts;
  for (Element g = 0; g < order; ++g) shifts.push_back(shift_permutation(y, g));

  const auto orbs = orbits(y);
  auto stabilizer = [&](std::size_t i) {
    std::vector<Element> s;
    for (Element g = 0; g < order; ++g)
      if (shifts[g][i] == i) s.push_back(g);
    return s;
  };
  std::vector<std::vector<Element>> stab(n);
  for (std::size_t i = 0; i < n; ++i) stab[i] = stabilizer(i);

  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  // Orbit o's representative goes to some y with stab(rep) inside stab(y);
  // the rest of the orbit follows by equivariance.
  std::function<void(std::size_t)> place = [&](std::size_t o) {
    if (o == orbs.size()) {
      found.push_back(image);
      return;
    }
    const std::size_t rep = orbs[o].front();
    for (std::size_t target = 0; target < n; ++target) {
      if (used[target]) continue;
      if (!std::includes(stab[target].begin(), stab[target].end(), stab[rep].begin(), stab[rep].end())) continue;
      std::vector<std::size_t> assigned;
      bool ok = true;
      for (Element g = 0; g < order && ok; ++g) {
        const std::size_t from = shifts[g][rep];
        const std::size_t to = shifts[g][target];
        if (image[from] == n) {
          if (used[to]) {
            ok = false;
            break;
          }
          image[from] = to;
          used[to] = true;
          assigned.push_back(from);
        } else if (image[from] != to) {
          ok = false;
        }
      }
      if (ok) place(o + 1);
      for (std::size_t from : assigned) {
        used[image[from]] = false;
        image[from] = n;
      }
    }
  };
  place(0);

  std::sort(found.begin(), found.end());
  AutomorphismGroup out;
  out.elements = std::move(found);
  for (const auto& p : out.elements)
    if (!commutes_with_shifts(y, p)) throw InternalError("automorphism candidate does not commute with the shift");
  const std::size_t m = out.elements.size();
  out.table.assign(m, std::vector<std::size_t>(m));
  auto locate = [&](const std::vector<std::size_t>& p) {
    auto it = std::lower_bound(out.elements.begin(), out.elements.end(), p);
    if (it == out.elements.end() || *it != p) throw InternalError("automorphisms are not closed under composition");
    return static_cast<std::size_t>(it - out.elements.begin());
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; ++k) inverse[out.elements[i][k]] = k;
    locate(inverse);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = out.elements[i][out.elements[j][k]];
      out.table[i][j] = locate(c);
    }
  }
  return out;
}

// --- measures --------------------------------------------------------------

void validate_measure(const InvariantMeasure& mu) {
  if (mu.weights.size() != mu.space.size()) throw ValidationError("measure needs one weight per configuration");
  Rational total = 0;
  for (const auto& w : mu.weights) {
    if (w < 0) throw ValidationError("measure weights must be non-negative");
    total += w;
  }
  if (total != 1) throw ValidationError("measure weights must sum to 1");
  for (const auto& orbit : orbits(mu.space))
    for (std::size_t i : orbit)
      if (mu.weights[i] != mu.weights[orbit.front()]) throw ValidationError("measure is not shift invariant");
}

InvariantMeasure mme(const ShiftSpace& y) {
  if (y.empty()) throw DomainError("the empty shift carries no probability measure");
  return InvariantMeasure{y, std::vector<Rational>(y.size(), Rational(1, static_cast<long long>(y.size())))};
}

InvariantMeasure dirac_measure(const ShiftSpace& y, std::size_t index) {
  if (index >= y.size()) throw InputError("configuration index out of range");
  InvariantMeasure mu{y, std::vector<Rational>(y.size(), Rational(0))};
  mu.weights[index] = 1;
  validate_measure(mu);
  return mu;
}

std::vector<std::pair<Pattern, Rational>> cylinder_masses(const InvariantMeasure& mu, std::span<const Element> f) {
  const std::vector<Element> shape = sorted_set({f.begin(), f.end()});
  for (Element e : shape) mu.space.group()->require(e, "cylinder shape element");
  std::map<std::vector<Symbol>, Rational> mass;
  for (std::size_t i = 0; i < mu.space.size(); ++i) {
    std::vector<Symbol> key;
    for (Element e : shape) key.push_back(mu.space.configs()[i][e]);
    mass[key] += mu.weights[i];
  }
  std::vector<std::pair<Pattern, Rational>> out;
  for (auto& [key, m] : mass) out.emplace_back(Pattern(mu.space.group(), shape, key), m);
  return out;
}

double partition_entropy(const InvariantMeasure& mu, std::span<const Element> f) {
  double h = 0.0;
  for (const auto& [w, m] : cylinder_masses(mu, f)) {
    if (m == 0) continue;
    const double p = to_double(m);
    h -= p * std::log(p);
  }
  return h;
}

double measure_entropy(const InvariantMeasure& mu) {
  std::vector<Element> all(mu.space.group()->order());
  std::iota(all.begin(), all.end(), Element{0});
  return partition_entropy(mu, all) / static_cast<double>(all.size());
}

InvariantMeasure pushforward_product(const InvariantMeasure& base, const ExtensionContext& ctx, const Limits& limits) {
  validate_measure(base);
  ShiftSpace ext = free_extension(base.space, ctx, limits);
  std::vector<Rational> weights;
  weights.reserve(ext.size());
  for (const auto& x : ext.configs()) {
    Rational w = 1;
    for (const auto& member : kappa_inverse_config(ctx, x)) w *= base.weights[base.space.index_of(member)];
    weights.push_back(w);
  }
  InvariantMeasure out{std::move(ext), std::move(weights)};
  validate_measure(out);
  return out;
}

MmeReport mme_unique_check(const ShiftSpace& y, std::uint64_t grid, const Limits& limits) {
  if (y.empty()) throw DomainError("the empty shift carries no probability measure");
  if (grid < 1) throw InputError("grid resolution must be at least 1");
  MmeReport report;
  report.entropy = entropy(y).to_double();
  report.uniform_attains = std::abs(measure_entropy(mme(y)) - report.entropy) <= kMeasureTolerance;

  const auto orbs = orbits(y);
  const std::size_t r = orbs.size();
  // C(grid + r - 1, r - 1), stopping once past the budget.
  double points = 1.0;
  for (std::size_t i = 1; i < r; ++i) points = points * static_cast<double>(grid + i) / static_cast<double>(i);
  if (points > static_cast<double>(limits.candidate_budget)) throw ResourceError("measure grid exceeds the candidate budget");

  const double order = static_cast<double>(y.group()->order());
  std::vector<std::uint64_t> a(r, 0);
  bool uniform_on_grid = false;
  std::function<void(std::size_t, std::uint64_t)> sweep = [&](std::size_t o, std::uint64_t left) {
    if (o + 1 == r) {
      a[o] = left;
      ++report.grid_points;
      double h = 0.0;
      bool uniform = true;
      for (std::size_t i = 0; i < r; ++i) {
        const auto size = static_cast<long long>(orbs[i].size());
        if (Rational(static_cast<long long>(a[i]), static_cast<long long>(grid)) !=
            Rational(size, static_cast<long long>(y.size())))
          uniform = false;
        if (a[i] == 0) continue;
        const Rational mass = Rational(static_cast<long long>(a[i]), static_cast<long long>(grid) * size);
        h -= static_cast<double>(size) * to_double(mass) * std::log(to_double(mass));
      }
      h /= order;
      if (h >= report.entropy - kMeasureTolerance) {
        std::vector<Rational> masses;
        for (auto v : a) masses.emplace_back(static_cast<long long>(v), static_cast<long long>(grid));
        report.maximizers.push_back(std::move(masses));
        if (uniform) uniform_on_grid = true;
      }
      if (!uniform) report.best_non_uniform = std::max(report.best_non_uniform, h);
      if (!uniform && h >= report.entropy - kMeasureTolerance) report.unique = false;
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      a[o] = v;
      sweep(o + 1, left - v);
    }
  };
  report.unique = true;
  sweep(0, grid);
  if (report.uniform_attains && !uniform_on_grid) {
    std::vector<Rational> masses;
    for (const auto& orbit : orbs)
      masses.emplace_back(static_cast<long long>(orbit.size()), static_cast<long long>(y.size()));
    report.maximizers.push_back(std::move(masses));
  }
  report.unique = report.unique && report.uniform_attains;
  return report;
}

}  // namespace freeshift
