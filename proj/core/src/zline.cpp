#include "freeshift/zline.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "freeshift/error.hpp"

namespace freeshift {

SftSpec golden_mean_spec(std::size_t n) {
  if (n < 1) throw InputError("golden mean needs n >= 1");
  GroupPtr g = cyclic(n);
  if (n == 1) return make_sft(g, Alphabet::binary(), {0}, {{1}});
  return make_sft(g, Alphabet::binary(), {0, 1}, {{1, 1}});
}

BigInt golden_mean_transfer_count(std::size_t n) {
  using M = std::array<BigInt, 4>;  // row major 2x2
  auto mul = [](const M& a, const M& b) {
    return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
             a[2] * b[1] + a[3] * b[3]};
  };
  M result{1, 0, 0, 1};
  M base{1, 1, 1, 0};
  for (std::size_t e = n; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result[0] + result[3];
}

std::uint64_t golden_mean_enumerated_count(std::size_t n, const Limits& limits) {
  return enumerate_sft(golden_mean_spec(n), limits).size();
}

BigInt golden_mean_cyclic_count(std::size_t n) {
  if (n < 1) throw InputError("golden mean needs n >= 1");
  BigInt t = golden_mean_transfer_count(n);
  if (n <= 16 && BigInt(golden_mean_enumerated_count(n)) != t)
    throw InternalError("golden mean enumeration disagrees with the transfer matrix at n = " + std::to_string(n));
  return t;
}

double golden_mean_entropy_estimate(std::size_t n) {
  if (n < 3) throw InputError("golden mean estimate needs n >= 3");
  return log_big(golden_mean_cyclic_count(n)) / static_cast<double>(n);
}

double log_phi() { return std::log((1.0 + std::sqrt(5.0)) / 2.0); }

Word::Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto s : symbols_)
    if (s > 1) throw InputError("words are binary");
}

Word::Word(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError(std::string("not a binary symbol: '") + c + "'");
    symbols_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
}

std::string Word::to_string() const {
  std::string s;
  for (auto b : symbols_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw InputError("slice out of range");
  return Word(std::vector<std::uint8_t>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

bool even_shift_word_check(const Word& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j] == 1) ++j;
    if (i > 0 && j < w.size() && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

std::vector<Word> even_cover_language(std::size_t n) {
  if (n > 24) throw InputError("cover language is limited to n <= 24");
  enum State { A, B };
  std::vector<Word> out;
  std::vector<std::uint8_t> labels;
  auto walk = [&](auto&& self, State s) -> void {
    if (labels.size() == n) {
      out.emplace_back(labels);
      return;
    }
    if (s == A) {
      labels.push_back(0);
      self(self, A);
      labels.back() = 1;
      self(self, B);
    } else {
      labels.push_back(1);
      self(self, A);
    }
    labels.pop_back();
  };
  walk(walk, A);
  walk(walk, B);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// All 1-blocks of a word framed by zeros have even length.
bool framed_even(const std::vector<std::uint8_t>& s) {
  std::size_t run = 0;
  for (auto b : s) {
    if (b == 1) {
      ++run;
    } else {
      if (run % 2) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

std::vector<std::uint8_t> bits_of(std::uint64_t v, std::size_t len) {
  std::vector<std::uint8_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1);
  return out;
}

// Some padding p of length <= pad makes frame(p, core) framed_even; pads are
// tried shortest first.
template <typename Frame>
bool some_pad(std::size_t pad, Frame frame) {
  for (std::size_t len = 0; len <= pad; ++len) {
    if (len >= 63) throw InputError("padding too long");
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
      if (framed_even(frame(bits_of(v, len)))) return true;
  }
  return false;
}

}  // namespace

bool even_padded_oracle(const Word& w, std::size_t pad) {
  const auto& s = w.symbols();
  const auto first_zero = std::find(s.begin(), s.end(), 0);
  if (first_zero == s.end()) {
    // No zero in w: both pads touch the same block.
    for (std::size_t len = 0; len <= pad; ++len)
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        const auto l = bits_of(v, len);
        const bool found = some_pad(pad, [&](const std::vector<std::uint8_t>& r) {
          std::vector<std::uint8_t> full{0};
          full.insert(full.end(), l.begin(), l.end());
          full.insert(full.end(), s.begin(), s.end());
          full.insert(full.end(), r.begin(), r.end());
          full.push_back(0);
          return full;
        });
        if (found) return true;
      }
    return false;
  }
  // A zero separates the left pad, the middle and the right pad.
  const auto last_zero = std::find(s.rbegin(), s.rend(), 0).base() - 1;
  if (!framed_even({first_zero, last_zero + 1})) return false;
  const bool left = some_pad(pad, [&](const std::vector<std::uint8_t>& l) {
    std::vector<std::uint8_t> full{0};
    full.insert(full.end(), l.begin(), l.end());
    full.insert(full.end(), s.begin(), first_zero + 1);
    return full;
  });
  if (!left) return false;
  return some_pad(pad, [&](const std::vector<std::uint8_t>& r) {
    std::vector<std::uint8_t> full(last_zero, s.end());
    full.insert(full.end(), r.begin(), r.end());
    full.push_back(0);
    return full;
  });
}

EvenCoverVerdict even_cover_factor_check(std::size_t n) {
  if (n > 16) throw InputError("even cover check is limited to n <= 16");
  const std::vector<Word> cover = even_cover_language(n);
  std::vector<Word> oracle;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    Word w(bits_of(v, n));
    if (even_padded_oracle(w, 2 * n)) oracle.push_back(std::move(w));
  }
  EvenCoverVerdict out;
  out.language_size = cover.size();
  out.agree = cover == oracle;
  if (!out.agree) {
    std::vector<Word> diff;
    std::set_symmetric_difference(cover.begin(), cover.end(), oracle.begin(), oracle.end(), std::back_inserter(diff));
    out.witness = diff.front();
  }
  return out;
}

Word sft_gap_witness(std::size_t k) {
  if (k < 2) throw InputError("gap witness needs k >= 2");
  std::vector<std::uint8_t> s{0};
  s.insert(s.end(), 2 * k + 1, 1);
  s.push_back(0);
  const Word w(std::move(s));

  std::vector<Word> language;
  if (k <= 16) language = even_cover_language(k);
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    const Word sub = w.slice(i, k);
    const bool ok = k <= 16 ? std::binary_search(language.begin(), language.end(), sub) : even_shift_word_check(sub);
    if (!ok) throw InternalError("gap witness has a subword outside the language: " + sub.to_string());
  }
  if (even_shift_word_check(w)) throw InternalError("gap witness passes the global check");
  return w;
}

}  // namespace freeshift
