#pragma once

// Patterns (partial configurations) on a finite group and the operations on
// them: the shift action, restriction, extension sets and join.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeshift/groups.hpp"

namespace freeshift {

using Symbol = std::uint8_t;

class Alphabet {
 public:
  // Throws ValidationError on an empty list, duplicates, or more than 256
  // symbols.
  explicit Alphabet(std::vector<std::string> symbols);

  // Symbols named "0", "1", ..., "n-1".
  static Alphabet numbered(std::size_t n);
  static Alphabet binary() { return numbered(2); }

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  Symbol index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

// Same group value; two separately loaded copies of a table compare equal.
bool same_group(const GroupPtr& a, const GroupPtr& b);

class Pattern {
 public:
  // `shape` and `data` are positional; the constructor sorts them together by
  // element index. Throws InputError on duplicates, out-of-range elements or
  // a length mismatch.
  Pattern(GroupPtr group, std::vector<Element> shape, std::vector<Symbol> data);

  static Pattern empty(GroupPtr group);
  // A configuration: shape is the whole group, data[g] is the symbol at g.
  static Pattern full(GroupPtr group, std::vector<Symbol> data);

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& shape() const { return shape_; }
  const std::vector<Symbol>& data() const { return data_; }
  std::size_t size() const { return shape_.size(); }
  bool is_empty() const { return shape_.empty(); }
  bool is_full() const { return shape_.size() == group_->order(); }
  bool covers(Element g) const;

  std::optional<Symbol> at(Element g) const;
  // Throws InputError if g is outside the shape.
  Symbol operator[](Element g) const;

  bool operator==(const Pattern& other) const {
    return shape_ == other.shape_ && data_ == other.data_ && same_group(group_, other.group_);
  }
  std::strong_ordering operator<=>(const Pattern& other) const {
    if (auto c = shape_ <=> other.shape_; c != 0) return c;
    return data_ <=> other.data_;
  }

 private:
  GroupPtr group_;
  std::vector<Element> shape_;
  std::vector<Symbol> data_;
};

// sigma^g: result has shape F g^{-1} and (sigma^g w)(h) = w(h g).
Pattern shift_pattern(Element g, const Pattern& w);

// w|_E. Throws InputError unless E is a subset of w's shape.
Pattern restrict(const Pattern& w, std::span<const Element> subshape);

// [w]_F: all patterns on F restricting to w, in lexicographic data order.
// Throws InputError unless w's shape is a subset of F.
std::vector<Pattern> extensions(const Pattern& w, std::span<const Element> superset, const Alphabet& alphabet);

// u v v on disjoint shapes. Throws InputError on overlap or group mismatch.
Pattern join(const Pattern& u, const Pattern& v);

// Independent patterns on the subgroup, one per right coset. Member i is a
// full pattern on the base group and belongs to coset i of a decomposition.
struct CosetFamily {
  std::vector<Pattern> members;

  bool operator==(const CosetFamily&) const = default;
};

// Two-line text form: "shape i1 i2 ..." then "data s1 s2 ...".
std::string format_pattern(const Pattern& w, const Alphabet& alphabet);

std::vector<Element> sorted_set(std::vector<Element> elements);

}  // namespace freeshift
