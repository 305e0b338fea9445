#pragma once

// Finite windows of Z: the golden mean shift on cyclic groups and the even
// shift as a factor of a two-state labelled graph.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeshift/numeric.hpp"
#include "freeshift/shiftspace.hpp"

namespace freeshift {

// Forbids 11 on {0, 1} of cyclic(n). On cyclic(1) the shape collapses to
// {0} and the single forbidden pattern is 1.
SftSpec golden_mean_spec(std::size_t n);

// trace([[1,1],[1,0]]^n).
BigInt golden_mean_transfer_count(std::size_t n);

// |X| for golden_mean_spec(n) by enumeration.
std::uint64_t golden_mean_enumerated_count(std::size_t n, const Limits& limits = {});

// Enumerates for n <= 16 and checks against the transfer count (an
// InternalError on disagreement); transfer count alone above that.
BigInt golden_mean_cyclic_count(std::size_t n);

// log(count(n)) / n, for n >= 3.
double golden_mean_entropy_estimate(std::size_t n);

// log((1 + sqrt 5) / 2)
double log_phi();

// Finite binary word.
class Word {
 public:
  Word() = default;
  // Throws InputError on a symbol other than 0 or 1.
  explicit Word(std::vector<std::uint8_t> symbols);
  explicit Word(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  std::string to_string() const;
  Word slice(std::size_t pos, std::size_t len) const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

// Every maximal 1-block touching neither end has even length.
bool even_shift_word_check(const Word& w);

// Label sequences of length-n paths in the cover A->A:0, A->B:1, B->A:1.
// Every state has in- and out-edges, so all paths are bi-extendable.
std::vector<Word> even_cover_language(std::size_t n);

// Whether 0 l w r 0 has only even 1-blocks for some l, r of length <= pad.
bool even_padded_oracle(const Word& w, std::size_t pad);

struct EvenCoverVerdict {
  bool agree = false;
  std::size_t language_size = 0;
  // A word in exactly one of the two sets.
  std::optional<Word> witness;
};

// Compares the cover language of length n with the padded oracle (pad 2n)
// over all 2^n words. Throws InputError for n > 16.
EvenCoverVerdict even_cover_factor_check(std::size_t n);

// 0 1^(2k+1) 0: each length-k subword is in the even shift language but the
// word is not. Both facts are checked before returning; InternalError if
// either fails. Throws InputError for k < 2.
Word sft_gap_witness(std::size_t k);

}  // namespace freeshift
