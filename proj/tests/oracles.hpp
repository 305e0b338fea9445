#pragma once

// Brute-force reference implementations. Everything here works from the raw
// group table and plain vectors so that it shares no code paths with the
// library beyond FiniteGroup::mul / inv.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freeshift/freext.hpp"
#include "freeshift/groups.hpp"
#include "freeshift/shiftspace.hpp"

namespace oracle {

using freeshift::Config;
using freeshift::Element;
using freeshift::FiniteGroup;
using freeshift::Symbol;
using BigInt = boost::multiprecision::cpp_int;

// (sigma^g x)(h) = x(h g)
inline Config shift(const FiniteGroup& g, Element s, const Config& x) {
  Config out(x.size());
  for (Element h = 0; h < g.order(); ++h) out[h] = x[g.mul(h, s)];
  return out;
}

// Every configuration of A^G avoiding each forbidden row at every translate.
inline std::vector<Config> naive_sft(const freeshift::SftSpec& spec) {
  const FiniteGroup& g = *spec.group;
  const std::size_t n = g.order(), a = spec.alphabet.size();
  std::vector<Config> out;
  Config x(n, 0);
  for (;;) {
    bool ok = true;
    for (Element t = 0; t < n && ok; ++t) {
      for (const auto& row : spec.forbidden) {
        bool hit = true;
        for (std::size_t i = 0; i < spec.shape.size() && hit; ++i) hit = x[g.mul(spec.shape[i], t)] == row[i];
        if (hit) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < n && ++x[i] == a) x[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool invariant(const FiniteGroup& g, const std::vector<Config>& configs) {
  std::set<Config> s(configs.begin(), configs.end());
  for (const auto& x : configs)
    for (Element t = 0; t < g.order(); ++t)
      if (!s.count(shift(g, t, x))) return false;
  return true;
}

inline std::vector<Symbol> restrict(const Config& x, const std::vector<Element>& f) {
  std::vector<Symbol> out;
  for (Element e : f) out.push_back(x[e]);
  return out;
}

inline std::vector<Element> from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<Element> out;
  for (Element i = 0; i < n; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

// kappa written out from its defining property: on the coset H c the
// configuration is sigma^{c^{-1}} of w_c placed on H. The coset of k is
// found by testing k c^{-1} against the embedded subgroup directly.
inline Config naive_kappa(const freeshift::ExtensionContext& ctx, const std::vector<Config>& fam) {
  const FiniteGroup& k = *ctx.ambient();
  const auto& emb = ctx.embedding();
  const auto& reps = ctx.decomposition().reps();
  Config x(k.order(), 0);
  for (Element a = 0; a < k.order(); ++a) {
    int hits = 0;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const Element probe = k.mul(a, k.inv(reps[c]));
      for (Element h = 0; h < emb.size(); ++h) {
        if (emb[h] == probe) {
          x[a] = fam[c][h];
          ++hits;
        }
      }
    }
    if (hits != 1) throw std::logic_error("naive_kappa: cosets do not partition");
  }
  return x;
}

// All shape pairs, all language pairs, direct search for a joint point.
inline bool naive_si(const FiniteGroup& g, const std::vector<Config>& y, const std::vector<Element>& kset) {
  const std::size_t n = g.order();
  auto lang = [&](const std::vector<Element>& f) {
    std::set<std::vector<Symbol>> s;
    for (const auto& x : y) s.insert(restrict(x, f));
    return s;
  };
  for (std::uint64_t mv = 1; mv < (1ull << n); ++mv) {
    const auto fv = from_mask(mv, n);
    std::uint64_t kf = 0;
    for (Element k : kset)
      for (Element f : fv) kf |= 1ull << g.mul(k, f);
    for (std::uint64_t mu = 1; mu < (1ull << n); ++mu) {
      if (mu & kf) continue;
      const auto fu = from_mask(mu, n);
      for (const auto& u : lang(fu))
        for (const auto& v : lang(fv)) {
          const bool joint = std::any_of(y.begin(), y.end(), [&](const Config& x) {
            return restrict(x, fu) == u && restrict(x, fv) == v;
          });
          if (!joint) return false;
        }
    }
  }
  return true;
}

// Permutations of y (as index maps) commuting with every shift.
inline std::size_t naive_automorphism_count(const FiniteGroup& g, const std::vector<Config>& y) {
  std::vector<std::size_t> perm(y.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  auto idx = [&](const Config& x) {
    return static_cast<std::size_t>(std::lower_bound(y.begin(), y.end(), x) - y.begin());
  };
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Element t = 0; t < g.order() && ok; ++t)
      for (std::size_t i = 0; i < y.size() && ok; ++i)
        ok = y[perm[idx(shift(g, t, y[i]))]] == shift(g, t, y[perm[i]]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Binary words of length n with no two cyclically adjacent ones.
inline std::uint64_t golden_brute(std::size_t n) {
  std::uint64_t count = 0;
  const std::uint64_t full = (1ull << n) - 1;
  for (std::uint64_t m = 0; m <= full; ++m) {
    const std::uint64_t rot = ((m << 1) | (m >> (n - 1))) & full;
    count += (m & rot) == 0;
  }
  return count;
}

// L(1) = 1, L(2) = 3, L(n) = L(n-1) + L(n-2).
inline BigInt lucas(std::size_t n) {
  BigInt a = 1, b = 3;
  if (n == 1) return a;
  for (std::size_t i = 2; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline double log_phi() { return std::log((1.0 + std::sqrt(5.0)) / 2.0); }

// Splits on '0'; blocks with a zero on both sides must be even.
inline bool even_word(const std::string& w) {
  const auto first = w.find('0'), last = w.rfind('0');
  if (first == std::string::npos) return true;
  std::size_t run = 0;
  for (std::size_t i = first + 1; i <= last; ++i) {
    if (w[i] == '1') {
      ++run;
    } else {
      if (run % 2) return false;
      run = 0;
    }
  }
  return true;
}

inline std::string binary_word(std::uint64_t m, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) s[i] = '1';
  return s;
}

// log(n1)/m1 == log(n2)/m2 by cross powers.
inline bool same_entropy(const BigInt& n1, std::uint64_t m1, const BigInt& n2, std::uint64_t m2) {
  return boost::multiprecision::pow(n1, static_cast<unsigned>(m2)) ==
         boost::multiprecision::pow(n2, static_cast<unsigned>(m1));
}

// Orbit of x under all shifts.
inline std::set<Config> orbit(const FiniteGroup& g, const Config& x) {
  std::set<Config> out;
  for (Element t = 0; t < g.order(); ++t) out.insert(shift(g, t, x));
  return out;
}

}  // namespace oracle
