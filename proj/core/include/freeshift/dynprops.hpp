#pragma once

// Dynamical properties of shift spaces on finite groups: exact entropy,
// entropy sets over towers, strong irreducibility, entropy minimality,
// zero-entropy classification, automorphisms and invariant measures.

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freeshift/freext.hpp"
#include "freeshift/groups.hpp"
#include "freeshift/numeric.hpp"
#include "freeshift/shiftspace.hpp"

namespace freeshift {

// log(n)/m, stored canonically: with n = r^k and r not a perfect power,
// (n, m) becomes (r^(k/d), m/d) for d = gcd(k, m). Zero is (1, 1).
class EntropyValue {
 public:
  // Throws DomainError unless n >= 1 and m >= 1.
  EntropyValue(BigInt n, std::uint64_t m);

  const BigInt& count() const { return count_; }
  std::uint64_t denom() const { return denom_; }
  bool is_zero() const { return count_ == 1; }

  double to_double() const;
  // "log(n)/m"
  std::string to_string() const;

  // Cross-power comparison n1^m2 vs n2^m1.
  friend std::strong_ordering operator<=>(const EntropyValue& a, const EntropyValue& b);
  friend bool operator==(const EntropyValue& a, const EntropyValue& b) {
    return a.count_ == b.count_ && a.denom_ == b.denom_;
  }

 private:
  BigInt count_;
  std::uint64_t denom_;
};

// Exact comparison of log(n1)/m1 and log(n2)/m2 on raw, unreduced values.
std::strong_ordering compare_log_ratio(const BigInt& n1, std::uint64_t m1, const BigInt& n2, std::uint64_t m2);

// h(y) = log|y| / |G|. Throws DomainError on the empty space.
EntropyValue entropy(const ShiftSpace& y);

// {log(n)/|H| : H a subgroup of some level <= max_level, 1 <= n <= max_n},
// sorted ascending and deduplicated. Fast mode takes only the tower levels
// and the trivial group instead of every subgroup.
std::vector<EntropyValue> entropy_set(const GroupTower& tower, std::size_t max_level, std::uint64_t max_n,
                                      bool fast = false, std::size_t closure_budget = 1u << 16);

// --- strong irreducibility -------------------------------------------------

struct SiCounterexample {
  Pattern u;
  Pattern v;
};

struct SiVerdict {
  bool holds = false;
  std::optional<SiCounterexample> counterexample;
  // Inclusion-minimal K (sorted element lists), filled when requested.
  std::vector<std::vector<Element>> minimal_witnesses;
};

// Whether every u in L_{F_u}(y), v in L_{F_v}(y) with F_u n K F_v = {} have a
// common extension in y. Exhaustive over all shape pairs. On failure the
// counterexample is the least by (|F_u| + |F_v|, F_v, F_u, u, v), shapes
// compared as bitmasks. With search_minimal, every K is examined and the
// minimal ones returned. Throws ResourceError past the candidate budget.
SiVerdict strongly_irreducible_witness(const ShiftSpace& y, std::span<const Element> k, bool search_minimal = false,
                                       const Limits& limits = {});

bool strongly_irreducible(const ShiftSpace& y, std::span<const Element> k, const Limits& limits = {});

// --- entropy minimality ----------------------------------------------------

struct EntropyMinimalVerdict {
  bool minimal = true;
  std::optional<ShiftSpace> counterexample;
};

using SubshiftSource = std::function<std::vector<ShiftSpace>(const ShiftSpace&)>;

// Every proper subshift must have strictly smaller entropy. Subshifts come
// from enumerate_subshifts unless a source is supplied. Cross-checks that
// the entropy comparison agrees with the cardinality comparison.
EntropyMinimalVerdict is_entropy_minimal(const ShiftSpace& y, const Limits& limits = {},
                                         const SubshiftSource& source = {});

// --- zero entropy ----------------------------------------------------------

enum class ZeroEntropyClass { kSingletonFixedPoint, kPositiveEntropy, kZeroNotSingleton };

std::string to_string(ZeroEntropyClass c);

// Throws DomainError on the empty space.
ZeroEntropyClass zero_entropy_classify(const ShiftSpace& y);

// --- automorphisms ---------------------------------------------------------

struct AutomorphismGroup {
  // Permutations of configuration indices, sorted; elements[0] is identity.
  std::vector<std::vector<std::size_t>> elements;
  // table[i][j] = index of elements[i] o elements[j] (apply j first).
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return elements.size(); }
};

// perm[i] = index of sigma^g(configs[i]).
std::vector<std::size_t> shift_permutation(const ShiftSpace& y, Element g);

bool commutes_with_shifts(const ShiftSpace& y, std::span<const std::size_t> perm);

// Shift-commuting bijections of y, found by choosing orbit images with
// compatible stabilizers. Throws ResourceError when |y| exceeds
// limits.automorphism_cap.
AutomorphismGroup automorphism_group(const ShiftSpace& y, const Limits& limits = {});

// --- measures --------------------------------------------------------------

struct InvariantMeasure {
  ShiftSpace space;
  // One weight per configuration of `space`.
  std::vector<Rational> weights;
};

// Throws ValidationError unless weights are non-negative, sum to 1 and are
// constant on orbits.
void validate_measure(const InvariantMeasure& mu);

// Uniform measure. Throws DomainError on the empty space.
InvariantMeasure mme(const ShiftSpace& y);

InvariantMeasure dirac_measure(const ShiftSpace& y, std::size_t index);

// Cylinder masses mu[w] for w in L_F(y), in language order.
std::vector<std::pair<Pattern, Rational>> cylinder_masses(const InvariantMeasure& mu, std::span<const Element> f);

// H_mu(F) = -sum mu[w] log mu[w].
double partition_entropy(const InvariantMeasure& mu, std::span<const Element> f);

// h_mu = H_mu(G) / |G|.
double measure_entropy(const InvariantMeasure& mu);

// Pushforward through kappa of the product of `base` over all cosets.
InvariantMeasure pushforward_product(const InvariantMeasure& base, const ExtensionContext& ctx,
                                     const Limits& limits = {});

struct MmeReport {
  double entropy = 0.0;
  bool uniform_attains = false;
  std::size_t grid_points = 0;
  // Orbit masses of every measure found within tolerance of h: grid points
  // in sweep order, then the uniform measure if it attains h off the grid.
  std::vector<std::vector<Rational>> maximizers;
  // Largest h_mu over grid points that are not the uniform measure.
  double best_non_uniform = 0.0;
  bool unique = false;
};

inline constexpr double kMeasureTolerance = 1e-9;

// Sweeps invariant measures whose orbit masses lie on the simplex grid of
// the given resolution. The uniform measure is checked separately since it
// need not sit on the grid. Unique iff uniform attains h and no other grid
// point comes within tolerance.
MmeReport mme_unique_check(const ShiftSpace& y, std::uint64_t grid, const Limits& limits = {});

}  // namespace freeshift
