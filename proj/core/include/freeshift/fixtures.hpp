#pragma once

// Built-in groups, towers and SFT specs used by the verification suites,
// tests and benchmarks.

#include <random>
#include <string>
#include <vector>

#include "freeshift/freext.hpp"
#include "freeshift/groups.hpp"
#include "freeshift/shiftspace.hpp"

namespace freeshift::fixtures {

// Level 0 is the trivial group; level k is (Z/2)^k with level k-1 sitting on
// the first k-1 coordinates (index i maps to i).
GroupTower z2_power_tower(std::size_t m);

// Z/4 -> Z/4 x Z/2 -> Z/4 x Z/2 x Z/2.
GroupTower z4_tower();

// Z/2 -> Z/4 with 1 -> 2.
GroupTower z2_in_z4_tower();

// Symmetric group on three points; 0 is the identity, 1 and 2 the 3-cycles,
// 3..5 the transpositions.
GroupPtr s3();

// Greedy generating set: repeatedly adds the least element outside the
// subgroup generated so far.
std::vector<Element> greedy_generators(const GroupPtr& g);

SftSpec full_shift_spec(const GroupPtr& g, std::size_t symbols = 2);

// Binary configurations constant along every generator: forbids each
// non-constant pattern on {e} + gens. Two fixed points when gens generate g.
SftSpec two_spec(const GroupPtr& g, std::vector<Element> gens);
SftSpec two_spec(const GroupPtr& g);

// Forbids 11 on {e, s}.
SftSpec no_adjacent_ones_spec(const GroupPtr& g, Element s);

// The single configuration 0^G.
SftSpec zero_point_spec(const GroupPtr& g);

struct NamedSft {
  std::string name;
  SftSpec spec;
};

// Small SFTs on cyclic groups, (Z/2)^k, Z/4 x Z/2 and S3, including a
// singleton and an empty space.
std::vector<NamedSft> sft_fixtures();

struct NamedExtension {
  std::string name;
  SftSpec base;
  ExtensionContext context;
};

// Base specs paired with subgroup inclusions (tower steps, Z/2 in Z/4, and
// normal and non-normal subgroups of S3).
std::vector<NamedExtension> extension_fixtures();

// A random nonempty SFT: shape of 1..max_shape elements, up to max_rows
// distinct forbidden rows. Resamples until the space is nonempty.
SftSpec random_sft(std::mt19937_64& rng, const GroupPtr& g, std::size_t symbols = 2, std::size_t max_shape = 3,
                   std::size_t max_rows = 3);

// Random choice function for a decomposition: one uniform element per coset.
std::vector<Element> random_choice(std::mt19937_64& rng, const CosetDecomposition& dec);

}  // namespace freeshift::fixtures
