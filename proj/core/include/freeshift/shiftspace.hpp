#pragma once

// Shifts of finite type given by forbidden patterns, fully enumerated shift
// spaces on finite groups, languages, orbits, subshifts and block codes.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "freeshift/groups.hpp"
#include "freeshift/patterns.hpp"

namespace freeshift {

// Dense configuration: element g carries symbol x[g].
using Config = std::vector<Symbol>;

// (sigma^g x)(h) = x(h g).
Config shift_config(const FiniteGroup& group, Element g, const Config& x);

// Tunable resource bounds. Defaults are desk-scale.
struct Limits {
  // Bound on |A|^|G| candidates for SFT enumeration and on the number of
  // configurations any operation may materialize.
  std::uint64_t candidate_budget = std::uint64_t{1} << 24;
  // Bound on orbits for subshift enumeration (2^orbits subshifts).
  std::size_t orbit_cap = 20;
  // Bound on configurations for automorphism search.
  std::size_t automorphism_cap = 10;
};

class ShiftSpace {
 public:
  // Sorts and deduplicates; throws ValidationError if a configuration has the
  // wrong length or symbol range, or the set is not shift invariant.
  ShiftSpace(GroupPtr group, Alphabet alphabet, std::vector<Config> configs);

  // For producers whose output is sorted, unique and invariant by
  // construction. Skips the invariance scan.
  static ShiftSpace trusted(GroupPtr group, Alphabet alphabet, std::vector<Config> sorted_configs);

  static ShiftSpace full(GroupPtr group, Alphabet alphabet, const Limits& limits = {});

  const GroupPtr& group() const { return group_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Config>& configs() const { return configs_; }
  std::size_t size() const { return configs_.size(); }
  bool empty() const { return configs_.empty(); }

  bool contains(const Config& x) const;
  // Position of x in configs(), or size() if absent.
  std::size_t index_of(const Config& x) const;
  Pattern pattern(std::size_t i) const { return Pattern::full(group_, configs_.at(i)); }

  bool operator==(const ShiftSpace& other) const {
    return configs_ == other.configs_ && alphabet_ == other.alphabet_ && same_group(group_, other.group_);
  }

 private:
  ShiftSpace() = default;

  GroupPtr group_;
  Alphabet alphabet_{std::vector<std::string>{"0"}};
  std::vector<Config> configs_;
};

// Checks closure of a sorted configuration list under every sigma^g.
bool is_shift_invariant(const FiniteGroup& group, const std::vector<Config>& sorted_configs);

struct SftSpec {
  GroupPtr group;
  Alphabet alphabet;
  // Sorted, duplicate-free forbidden shape F.
  std::vector<Element> shape;
  // Each forbidden pattern lists one symbol per element of `shape`, in order.
  std::vector<std::vector<Symbol>> forbidden;

  // Throws ValidationError on an unsorted shape, an out-of-range element or a
  // forbidden row of the wrong length or symbol range.
  void validate() const;
};

// Builds a spec from a shape in any order: sorts the shape, permutes each
// forbidden row to match, and deduplicates rows.
SftSpec make_sft(GroupPtr group, Alphabet alphabet, std::vector<Element> shape,
                 std::vector<std::vector<Symbol>> forbidden);

// X[F]: configurations x with (sigma^g x)|_F not forbidden for every g.
// Depth-first over element indices with pruning on completed translates of
// F. Throws ResourceError when |A|^|G| exceeds limits.candidate_budget.
ShiftSpace enumerate_sft(const SftSpec& spec, const Limits& limits = {});

// L_F(Y), sorted.
std::vector<Pattern> language(const ShiftSpace& y, std::span<const Element> f);

// F_F(Y) = A^F \ L_F(Y), sorted.
std::vector<Pattern> forbidden_patterns(const ShiftSpace& y, std::span<const Element> f);

// The spec X[F_F(Y)] for a chosen shape F.
SftSpec spec_from_language(const ShiftSpace& y, std::span<const Element> f);

// Orbit partition as index lists into y.configs(); blocks are sorted and
// ordered by their least index.
std::vector<std::vector<std::size_t>> orbits(const ShiftSpace& y);

// All unions of orbits, indexed by orbit bitmask (bit i selects orbit i), so
// the empty shift comes first and y itself last. Throws ResourceError when
// the orbit count exceeds `orbit_cap`.
std::vector<ShiftSpace> enumerate_subshifts(const ShiftSpace& y, std::size_t orbit_cap = 20);

ShiftSpace intersect(const ShiftSpace& a, const ShiftSpace& b);

// A sliding block map beta: L_F(X) -> B. Keys list one symbol per window
// element, in window order.
struct BlockMap {
  std::vector<Element> window;
  std::map<std::vector<Symbol>, Symbol> table;
  Alphabet target{std::vector<std::string>{"0"}};
};

// (phi(x))(g) = beta((sigma^g x)|_F). Throws ValidationError when a window
// pattern met along the way is missing from the table.
Config apply_block_code(const FiniteGroup& group, const BlockMap& map, const Config& x);
ShiftSpace apply_block_code(const ShiftSpace& x, const BlockMap& map);

// Block map of phi_second o phi_first on x, with window F_first * F_second.
BlockMap compose_block_maps(const ShiftSpace& x, const BlockMap& first, const BlockMap& second);

}  // namespace freeshift
