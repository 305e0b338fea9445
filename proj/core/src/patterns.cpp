#include "freeshift/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "freeshift/error.hpp"

namespace freeshift {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ValidationError("alphabet must have at least one symbol");
  if (symbols_.size() > 256) throw ValidationError("alphabet is limited to 256 symbols");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw ValidationError("alphabet symbols must be non-empty");
    if (!seen.insert(s).second) throw ValidationError("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::numbered(std::size_t n) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(std::to_string(i));
  return Alphabet(std::move(s));
}

Symbol Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  throw InputError("unknown symbol '" + std::string(name) + "'");
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

Pattern::Pattern(GroupPtr group, std::vector<Element> shape, std::vector<Symbol> data) : group_(std::move(group)) {
  if (!group_) throw InputError("pattern has no group");
  if (shape.size() != data.size()) throw InputError("pattern shape and data lengths differ");
  std::vector<std::size_t> order(shape.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shape[a] < shape[b]; });
  shape_.reserve(shape.size());
  data_.reserve(shape.size());
  for (std::size_t i : order) {
    group_->require(shape[i], "pattern element");
    if (!shape_.empty() && shape_.back() == shape[i])
      throw InputError("pattern shape lists element " + std::to_string(shape[i]) + " twice");
    shape_.push_back(shape[i]);
    data_.push_back(data[i]);
  }
}

Pattern Pattern::empty(GroupPtr group) { return Pattern(std::move(group), {}, {}); }

Pattern Pattern::full(GroupPtr group, std::vector<Symbol> data) {
  std::vector<Element> shape(group->order());
  std::iota(shape.begin(), shape.end(), Element{0});
  return Pattern(std::move(group), std::move(shape), std::move(data));
}

bool Pattern::covers(Element g) const { return std::binary_search(shape_.begin(), shape_.end(), g); }

std::optional<Symbol> Pattern::at(Element g) const {
  auto it = std::lower_bound(shape_.begin(), shape_.end(), g);
  if (it == shape_.end() || *it != g) return std::nullopt;
  return data_[static_cast<std::size_t>(it - shape_.begin())];
}

Symbol Pattern::operator[](Element g) const {
  if (auto s = at(g)) return *s;
  throw InputError("element " + std::to_string(g) + " is outside the pattern shape");
}

Pattern shift_pattern(Element g, const Pattern& w) {
  const FiniteGroup& G = *w.group();
  G.require(g, "shift element");
  const Element g_inv = G.inv(g);
  std::vector<Element> shape;
  shape.reserve(w.size());
  // f in F becomes f g^{-1}; its value is w((f g^{-1}) g) = w(f).
  for (Element f : w.shape()) shape.push_back(G.mul(f, g_inv));
  return Pattern(w.group(), std::move(shape), w.data());
}

Pattern restrict(const Pattern& w, std::span<const Element> subshape) {
  std::vector<Element> shape;
  std::vector<Symbol> data;
  for (Element e : subshape) {
    auto s = w.at(e);
    if (!s) throw InputError("restriction set is not contained in the pattern shape (element " + std::to_string(e) + ")");
    shape.push_back(e);
    data.push_back(*s);
  }
  return Pattern(w.group(), std::move(shape), std::move(data));
}

std::vector<Pattern> extensions(const Pattern& w, std::span<const Element> superset, const Alphabet& alphabet) {
  const std::vector<Element> f = sorted_set({superset.begin(), superset.end()});
  std::vector<Element> free;
  for (Element e : w.shape())
    if (!std::binary_search(f.begin(), f.end(), e))
      throw InputError("pattern shape is not contained in the extension shape");
  for (Element e : f)
    if (!w.covers(e)) free.push_back(e);

  std::vector<Symbol> data(f.size(), 0);
  std::vector<std::size_t> free_pos;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (auto s = w.at(f[i]))
      data[i] = *s;
    else
      free_pos.push_back(i);
  }
  std::vector<Pattern> out;
  const std::size_t a = alphabet.size();
  while (true) {
    out.emplace_back(w.group(), f, data);
    std::size_t k = free_pos.size();
    while (k > 0) {
      auto& slot = data[free_pos[k - 1]];
      if (static_cast<std::size_t>(slot) + 1 < a) {
        ++slot;
        break;
      }
      slot = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

Pattern join(const Pattern& u, const Pattern& v) {
  if (!same_group(u.group(), v.group())) throw InputError("cannot join patterns over different groups");
  std::vector<Element> shape = u.shape();
  std::vector<Symbol> data = u.data();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (u.covers(v.shape()[i]))
      throw InputError("cannot join overlapping patterns (element " + std::to_string(v.shape()[i]) + ")");
    shape.push_back(v.shape()[i]);
    data.push_back(v.data()[i]);
  }
  return Pattern(u.group(), std::move(shape), std::move(data));
}

std::string format_pattern(const Pattern& w, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "shape";
  for (Element e : w.shape()) os << ' ' << e;
  os << "\ndata";
  for (Symbol s : w.data()) os << ' ' << alphabet.name(s);
  return os.str();
}

std::vector<Element> sorted_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

}  // namespace freeshift
