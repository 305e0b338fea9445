#pragma once

// Finite groups given by multiplication tables, subgroups, right-coset
// decompositions with choice functions, and towers of finite groups.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace freeshift {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  // Builds a group from an explicit Cayley table (rows[a][b] = a*b) and
  // validates closure, identity, inverses and associativity, in that order.
  // Associativity is checked on all triples for order <= 64 and on 10^5
  // seeded random triples above that.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& rows,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool valid(Element a) const { return a < order_; }
  // Throws InputError naming `what` if `a` is not an element index.
  void require(Element a, const char* what = "element") const;

  bool is_abelian() const;
  std::size_t element_order(Element a) const;
  std::size_t exponent() const;

  // Same table; labels are cosmetic and ignored.
  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic(std::size_t n);

// Mixed-radix encoding: (i, j) has index i + |a| * j, multiplied componentwise.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

struct GroupDescription;

struct CyclicDescription {
  std::size_t n = 1;
};

struct ProductDescription {
  std::shared_ptr<const GroupDescription> left;
  std::shared_ptr<const GroupDescription> right;
};

struct TableDescription {
  std::vector<std::vector<Element>> rows;
  std::vector<std::string> labels;
};

struct GroupDescription {
  std::variant<CyclicDescription, ProductDescription, TableDescription> value;
};

GroupDescription cyclic_description(std::size_t n);
GroupDescription product_description(GroupDescription left, GroupDescription right);

GroupPtr make_group(const GroupDescription& description);

class Subgroup {
 public:
  // Throws InputError unless `members` is a subgroup of `parent`.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element g) const { return g < mask_.size() && mask_[g]; }

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

// Smallest subgroup containing `gens`, by worklist closure.
Subgroup generated_subgroup(const GroupPtr& g, std::span<const Element> gens);

// Every subgroup of `g`, found by closing (subgroup + one element) starting
// from the trivial subgroup. Throws ResourceError once more than
// `closure_budget` closures would be needed.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t closure_budget = 1u << 16);

// Right cosets Hc of a subgroup. Cosets are ordered by their least element;
// the choice function (reps) defaults to that least element.
class CosetDecomposition {
 public:
  const GroupPtr& parent() const { return subgroup_.parent(); }
  const Subgroup& subgroup() const { return subgroup_; }
  std::size_t size() const { return cosets_.size(); }
  const std::vector<std::vector<Element>>& cosets() const { return cosets_; }
  const std::vector<Element>& reps() const { return reps_; }
  Element rep(std::size_t coset) const { return reps_[coset]; }
  std::size_t coset_of(Element g) const { return coset_of_[g]; }

  // Same partition, different choice function. reps[i] must lie in coset i.
  CosetDecomposition with_choice(std::vector<Element> reps) const;

 private:
  friend CosetDecomposition right_cosets(const Subgroup& h);
  explicit CosetDecomposition(Subgroup h) : subgroup_(std::move(h)) {}

  Subgroup subgroup_;
  std::vector<std::vector<Element>> cosets_;
  std::vector<Element> reps_;
  std::vector<std::size_t> coset_of_;
};

CosetDecomposition right_cosets(const Subgroup& h);

// Action of g on coset indices: perm[c] is the coset of rep(c)*g, and
// correction[c] = rep(c) * g * rep(perm[c])^{-1}, which lies in H.
struct CosetAction {
  std::vector<std::size_t> perm;
  std::vector<Element> correction;
};

CosetAction coset_action(const CosetDecomposition& dec, Element g);

// Returns the first pair (a, b) with map[a*b] != map[a]*map[b], if any.
std::optional<std::pair<Element, Element>> homomorphism_violation(
    const FiniteGroup& source, const FiniteGroup& target, std::span<const Element> map);

class GroupTower {
 public:
  // Validates sizes, totality, injectivity and the homomorphism law of each
  // consecutive embedding (level i -> level i+1).
  static GroupTower build(std::vector<GroupPtr> levels, std::vector<std::vector<Element>> embeddings);

  std::size_t size() const { return levels_.size(); }
  const GroupPtr& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<GroupPtr>& levels() const { return levels_; }
  const std::vector<Element>& embedding(std::size_t i) const { return embeddings_.at(i); }

  // Composite embedding level i -> level j (j >= i).
  std::vector<Element> embed_up(std::size_t i, std::size_t j) const;

 private:
  std::vector<GroupPtr> levels_;
  std::vector<std::vector<Element>> embeddings_;
};

GroupTower build_tower(const std::vector<GroupDescription>& levels,
                       std::vector<std::vector<Element>> embeddings);

}  // namespace freeshift
