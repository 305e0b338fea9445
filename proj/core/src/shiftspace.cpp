#include "freeshift/shiftspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "freeshift/error.hpp"

namespace freeshift {

namespace {

// Saturating |A|^k.
std::uint64_t power_capped(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Membership test for window contents, keyed by mixed radix when the key
// space is small and by the raw bytes otherwise.
class WindowSet {
 public:
  WindowSet(std::size_t alphabet, std::size_t width) : alphabet_(alphabet), width_(width) {
    const std::uint64_t space = power_capped(alphabet, width, kDenseLimit);
    dense_ = space <= kDenseLimit;
    if (dense_) bits_.assign(static_cast<std::size_t>(space), false);
  }

  template <class Get>
  void insert(Get&& get) {
    if (dense_)
      bits_[key(get)] = true;
    else
      sparse_.insert(bytes(get));
  }

  template <class Get>
  bool contains(Get&& get) const {
    return dense_ ? bits_[key(get)] : sparse_.count(bytes(get)) != 0;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

  template <class Get>
  std::size_t key(Get&& get) const {
    std::size_t k = 0;
    for (std::size_t i = width_; i-- > 0;) k = k * alphabet_ + get(i);
    return k;
  }
  template <class Get>
  std::string bytes(Get&& get) const {
    std::string s(width_, '\0');
    for (std::size_t i = 0; i < width_; ++i) s[i] = static_cast<char>(get(i));
    return s;
  }

  std::size_t alphabet_;
  std::size_t width_;
  bool dense_ = true;
  std::vector<bool> bits_;
  std::unordered_set<std::string> sparse_;
};

void check_config(const FiniteGroup& group, const Alphabet& alphabet, const Config& x) {
  if (x.size() != group.order())
    throw ValidationError("configuration has " + std::to_string(x.size()) + " symbols, group order is " +
                          std::to_string(group.order()));
  for (Symbol s : x)
    if (s >= alphabet.size()) throw ValidationError("configuration symbol " + std::to_string(s) + " is out of range");
}

std::vector<Config> all_configs(std::size_t n, std::size_t a) {
  std::vector<Config> out;
  Config x(n, 0);
  while (true) {
    out.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      if (static_cast<std::size_t>(x[k - 1]) + 1 < a) {
        ++x[k - 1];
        break;
      }
      x[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

std::vector<Pattern> collect_restrictions(const ShiftSpace& y, const std::vector<Element>& f) {
  std::set<std::vector<Symbol>> seen;
  for (const auto& x : y.configs()) {
    std::vector<Symbol> w;
    w.reserve(f.size());
    for (Element e : f) w.push_back(x[e]);
    seen.insert(std::move(w));
  }
  std::vector<Pattern> out;
  for (const auto& w : seen) out.emplace_back(y.group(), f, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> checked_shape(const ShiftSpace& y, std::span<const Element> f) {
  for (Element e : f) y.group()->require(e, "shape element");
  return sorted_set({f.begin(), f.end()});
}

}  // namespace

Config shift_config(const FiniteGroup& group, Element g, const Config& x) {
  Config out(x.size());
  for (Element h = 0; h < group.order(); ++h) out[h] = x[group.mul(h, g)];
  return out;
}

bool is_shift_invariant(const FiniteGroup& group, const std::vector<Config>& sorted_configs) {
  for (const auto& x : sorted_configs)
    for (Element g = 0; g < group.order(); ++g)
      if (!std::binary_search(sorted_configs.begin(), sorted_configs.end(), shift_config(group, g, x))) return false;
  return true;
}

ShiftSpace::ShiftSpace(GroupPtr group, Alphabet alphabet, std::vector<Config> configs)
    : group_(std::move(group)), alphabet_(std::move(alphabet)) {
  if (!group_) throw ValidationError("shift space has no group");
  for (const auto& x : configs) check_config(*group_, alphabet_, x);
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  if (!is_shift_invariant(*group_, configs)) throw ValidationError("configuration set is not shift invariant");
  configs_ = std::move(configs);
}

ShiftSpace ShiftSpace::trusted(GroupPtr group, Alphabet alphabet, std::vector<Config> sorted_configs) {
  ShiftSpace s;
  s.group_ = std::move(group);
  s.alphabet_ = std::move(alphabet);
  s.configs_ = std::move(sorted_configs);
  return s;
}

ShiftSpace ShiftSpace::full(GroupPtr group, Alphabet alphabet, const Limits& limits) {
  const std::uint64_t count = power_capped(alphabet.size(), group->order(), limits.candidate_budget);
  if (count > limits.candidate_budget)
    throw ResourceError("full shift exceeds the candidate budget of " + std::to_string(limits.candidate_budget));
  auto configs = all_configs(group->order(), alphabet.size());
  return trusted(std::move(group), std::move(alphabet), std::move(configs));
}

bool ShiftSpace::contains(const Config& x) const { return std::binary_search(configs_.begin(), configs_.end(), x); }

std::size_t ShiftSpace::index_of(const Config& x) const {
  auto it = std::lower_bound(configs_.begin(), configs_.end(), x);
  if (it == configs_.end() || *it != x) return configs_.size();
  return static_cast<std::size_t>(it - configs_.begin());
}

void SftSpec::validate() const {
  if (!group) throw ValidationError("SFT spec has no group");
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (!group->valid(shape[i])) throw ValidationError("forbidden shape element " + std::to_string(shape[i]) + " is out of range");
    if (i > 0 && shape[i - 1] >= shape[i]) throw ValidationError("forbidden shape must be sorted and duplicate-free");
  }
  for (const auto& row : forbidden) {
    if (row.size() != shape.size()) throw ValidationError("forbidden pattern does not match the forbidden shape");
    for (Symbol s : row)
      if (s >= alphabet.size()) throw ValidationError("forbidden pattern symbol is out of range");
  }
}

SftSpec make_sft(GroupPtr group, Alphabet alphabet, std::vector<Element> shape,
                 std::vector<std::vector<Symbol>> forbidden) {
  std::vector<std::size_t> order(shape.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shape[a] < shape[b]; });
  SftSpec spec{std::move(group), std::move(alphabet), {}, {}};
  for (std::size_t i : order) spec.shape.push_back(shape[i]);
  std::set<std::vector<Symbol>> rows;
  for (const auto& row : forbidden) {
    if (row.size() != shape.size()) throw ValidationError("forbidden pattern does not match the forbidden shape");
    std::vector<Symbol> permuted;
    for (std::size_t i : order) permuted.push_back(row[i]);
    rows.insert(std::move(permuted));
  }
  spec.forbidden.assign(rows.begin(), rows.end());
  spec.validate();
  return spec;
}

ShiftSpace enumerate_sft(const SftSpec& spec, const Limits& limits) {
  spec.validate();
  const FiniteGroup& G = *spec.group;
  const std::size_t n = G.order();
  const std::size_t a = spec.alphabet.size();
  const std::uint64_t candidates = power_capped(a, n, limits.candidate_budget);
  if (candidates > limits.candidate_budget)
    throw ResourceError("SFT enumeration needs " + std::to_string(a) + "^" + std::to_string(n) +
                        " candidates, above the budget of " + std::to_string(limits.candidate_budget));

  if (spec.shape.empty()) {
    if (!spec.forbidden.empty()) return ShiftSpace::trusted(spec.group, spec.alphabet, {});
    return ShiftSpace::full(spec.group, spec.alphabet, limits);
  }

  const std::size_t width = spec.shape.size();
  WindowSet forbidden(a, width);
  for (const auto& row : spec.forbidden) forbidden.insert([&](std::size_t i) { return row[i]; });

  // Translate g covers positions f*g; it can be tested once its largest
  // position has been assigned.
  std::vector<std::vector<std::vector<Element>>> completing(n);
  for (Element g = 0; g < n; ++g) {
    std::vector<Element> pos;
    for (Element f : spec.shape) pos.push_back(G.mul(f, g));
    const Element last = *std::max_element(pos.begin(), pos.end());
    completing[last].push_back(std::move(pos));
  }

  std::vector<Config> out;
  Config x(n, 0);
  auto ok_at = [&](std::size_t depth) {
    for (const auto& pos : completing[depth])
      if (forbidden.contains([&](std::size_t i) { return x[pos[i]]; })) return false;
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      out.push_back(x);
      return;
    }
    for (std::size_t s = 0; s < a; ++s) {
      x[depth] = static_cast<Symbol>(s);
      if (ok_at(depth)) self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  // Depth-first with element 0 most significant yields lexicographic order.
  return ShiftSpace::trusted(spec.group, spec.alphabet, std::move(out));
}

std::vector<Pattern> language(const ShiftSpace& y, std::span<const Element> f) {
  return collect_restrictions(y, checked_shape(y, f));
}

std::vector<Pattern> forbidden_patterns(const ShiftSpace& y, std::span<const Element> f) {
  const auto shape = checked_shape(y, f);
  const auto allowed = collect_restrictions(y, shape);
  std::vector<Pattern> out;
  for (auto& w : extensions(Pattern::empty(y.group()), shape, y.alphabet()))
    if (!std::binary_search(allowed.begin(), allowed.end(), w)) out.push_back(std::move(w));
  return out;
}

SftSpec spec_from_language(const ShiftSpace& y, std::span<const Element> f) {
  SftSpec spec{y.group(), y.alphabet(), checked_shape(y, f), {}};
  for (const auto& w : forbidden_patterns(y, spec.shape)) spec.forbidden.push_back(w.data());
  return spec;
}

std::vector<std::vector<std::size_t>> orbits(const ShiftSpace& y) {
  const FiniteGroup& G = *y.group();
  std::vector<bool> seen(y.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> block;
    for (Element g = 0; g < G.order(); ++g) {
      const std::size_t j = y.index_of(shift_config(G, g, y.configs()[i]));
      if (j == y.size()) throw InternalError("shift space is not closed under the shift action");
      if (!seen[j]) {
        seen[j] = true;
        block.push_back(j);
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<ShiftSpace> enumerate_subshifts(const ShiftSpace& y, std::size_t orbit_cap) {
  const auto blocks = orbits(y);
  if (blocks.size() > orbit_cap)
    throw ResourceError("shift space has " + std::to_string(blocks.size()) + " orbits, above the cap of " +
                        std::to_string(orbit_cap));
  std::vector<ShiftSpace> out;
  const std::size_t count = std::size_t{1} << blocks.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask >> b & 1U) idx.insert(idx.end(), blocks[b].begin(), blocks[b].end());
    std::sort(idx.begin(), idx.end());
    std::vector<Config> configs;
    configs.reserve(idx.size());
    for (std::size_t i : idx) configs.push_back(y.configs()[i]);
    out.push_back(ShiftSpace::trusted(y.group(), y.alphabet(), std::move(configs)));
  }
  return out;
}

ShiftSpace intersect(const ShiftSpace& a, const ShiftSpace& b) {
  if (!same_group(a.group(), b.group()) || !(a.alphabet() == b.alphabet()))
    throw InputError("cannot intersect shift spaces over different groups or alphabets");
  std::vector<Config> out;
  std::set_intersection(a.configs().begin(), a.configs().end(), b.configs().begin(), b.configs().end(),
                        std::back_inserter(out));
  return ShiftSpace::trusted(a.group(), a.alphabet(), std::move(out));
}

Config apply_block_code(const FiniteGroup& group, const BlockMap& map, const Config& x) {
  Config out(group.order());
  std::vector<Symbol> key(map.window.size());
  for (Element g = 0; g < group.order(); ++g) {
    for (std::size_t i = 0; i < map.window.size(); ++i) key[i] = x[group.mul(map.window[i], g)];
    auto it = map.table.find(key);
    if (it == map.table.end()) {
      std::string shown;
      for (Symbol s : key) shown += std::to_string(s) + " ";
      throw ValidationError("block map has no entry for window pattern [ " + shown + "]");
    }
    out[g] = it->second;
  }
  return out;
}

ShiftSpace apply_block_code(const ShiftSpace& x, const BlockMap& map) {
  for (Element e : map.window) x.group()->require(e, "window element");
  if (sorted_set(map.window).size() != map.window.size()) throw ValidationError("block map window repeats an element");
  for (const auto& [key, value] : map.table) {
    if (key.size() != map.window.size()) throw ValidationError("block map key does not match the window");
    if (value >= map.target.size()) throw ValidationError("block map value is outside the target alphabet");
  }
  std::vector<Config> image;
  image.reserve(x.size());
  for (const auto& c : x.configs()) image.push_back(apply_block_code(*x.group(), map, c));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  // Images of an invariant set under a shift-commuting map are invariant.
  return ShiftSpace::trusted(x.group(), map.target, std::move(image));
}

BlockMap compose_block_maps(const ShiftSpace& x, const BlockMap& first, const BlockMap& second) {
  const FiniteGroup& G = *x.group();
  // Window W = {a f : a in F_first, f in F_second}; (sigma^g x)(a f) feeds
  // the first map at offset f.
  std::vector<Element> window;
  for (Element f : second.window)
    for (Element a : first.window) window.push_back(G.mul(a, f));
  window = sorted_set(std::move(window));
  auto pos = [&](Element e) {
    return static_cast<std::size_t>(std::lower_bound(window.begin(), window.end(), e) - window.begin());
  };

  BlockMap out{window, {}, second.target};
  for (const auto& w : language(x, window)) {
    std::vector<Symbol> inner(second.window.size());
    for (std::size_t j = 0; j < second.window.size(); ++j) {
      std::vector<Symbol> key(first.window.size());
      for (std::size_t i = 0; i < first.window.size(); ++i)
        key[i] = w.data()[pos(G.mul(first.window[i], second.window[j]))];
      auto it = first.table.find(key);
      if (it == first.table.end()) throw ValidationError("first block map is not total on the language");
      inner[j] = it->second;
    }
    auto it = second.table.find(inner);
    if (it == second.table.end()) throw ValidationError("second block map is not total on the image language");
    out.table[w.data()] = it->second;
  }
  return out;
}

}  // namespace freeshift
