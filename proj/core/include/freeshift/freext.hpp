#pragma once

// Free extensions along a subgroup inclusion H <= K: the coset-family action
// rho, the construction function kappa and its inverse, extension of shift
// spaces and of forbidden-pattern specs, and recovery of the base SFT.

#include <span>
#include <vector>

#include "freeshift/error.hpp"
#include "freeshift/groups.hpp"
#include "freeshift/patterns.hpp"
#include "freeshift/shiftspace.hpp"

namespace freeshift {

// An embedding of a base group H into an ambient group K together with the
// right-coset decomposition of its image and a choice function.
class ExtensionContext {
 public:
  // `embedding[h]` is the ambient element for base element h; it must be an
  // injective homomorphism. Uses the least element of each coset as its
  // representative.
  ExtensionContext(GroupPtr ambient, GroupPtr base, std::vector<Element> embedding);

  // Base group is the subgroup itself, relabelled by position in members().
  static ExtensionContext from_subgroup(const Subgroup& h);
  // Extension from tower level i to level j >= i.
  static ExtensionContext from_tower(const GroupTower& tower, std::size_t i, std::size_t j);

  // Same inclusion, different choice function.
  ExtensionContext with_choice(std::vector<Element> reps) const;

  const GroupPtr& ambient() const { return ambient_; }
  const GroupPtr& base() const { return base_; }
  const std::vector<Element>& embedding() const { return embedding_; }
  const CosetDecomposition& decomposition() const { return decomposition_; }
  const Subgroup& subgroup() const { return decomposition_.subgroup(); }
  std::size_t index() const { return decomposition_.size(); }

  Element to_ambient(Element h) const { return embedding_.at(h); }
  bool in_base(Element a) const { return a < to_base_.size() && to_base_[a] != kNone; }
  // Throws InputError if `a` is outside the embedded subgroup.
  Element to_base(Element a) const;

  // Ambient position of base element h on coset c: h * rep(c).
  Element position(std::size_t coset, Element h) const { return positions_[coset * base_->order() + h]; }

 private:
  static constexpr Element kNone = static_cast<Element>(-1);
  void index_positions();

  GroupPtr ambient_;
  GroupPtr base_;
  std::vector<Element> embedding_;
  std::vector<Element> to_base_;
  CosetDecomposition decomposition_;
  std::vector<Element> positions_;
};

// rho^g({w_c}) = { sigma^{c g xi^g(c)^{-1}} w_{xi^g(c)} }.
CosetFamily rho_action(const ExtensionContext& ctx, Element g, const CosetFamily& family);

// kappa({w_c}) = join over c of sigma^{c^{-1}} w_c; a full pattern on K.
Pattern kappa(const ExtensionContext& ctx, const CosetFamily& family);

// kappa^{-1}(x) = { (sigma^c x)|_H }_c.
CosetFamily kappa_inverse(const ExtensionContext& ctx, const Pattern& x);

// Config-level kappa for callers that already hold dense configurations;
// members[c] is the configuration on coset c.
Config kappa_config(const ExtensionContext& ctx, std::span<const Config* const> members);
std::vector<Config> kappa_inverse_config(const ExtensionContext& ctx, const Config& x);

// kappa(Y^{cosets}), enumerated as a product over cosets.
// Throws InputError if y is not over ctx.base(), ResourceError if
// |Y|^[K:H] exceeds limits.candidate_budget.
ShiftSpace free_extension(const ShiftSpace& y, const ExtensionContext& ctx, const Limits& limits = {});

// The same forbidden patterns read over the ambient group.
SftSpec free_extension_spec(const SftSpec& spec, const ExtensionContext& ctx);

// Raised by base_extract when re-extending the recovered spec does not
// reproduce the input; `witness` lies in exactly one of the two spaces.
class ExtractionError : public Error {
 public:
  ExtractionError(const std::string& msg, Config witness, bool witness_in_input)
      : Error(msg), witness_(std::move(witness)), in_input_(witness_in_input) {}

  const Config& witness() const { return witness_; }
  bool witness_in_input() const { return in_input_; }

 private:
  Config witness_;
  bool in_input_;
};

// Recovers an SFT Y on the base group with Y^{up K} = x from a forbidden
// shape F of x. With F_c = F n Hc over the cosets C0 meeting F:
// E = U F_c c^{-1}, F^ = U_{c in C0} E c, and w in A^E is forbidden iff every
// F^-extension of every sigma^{c^{-1}} w is forbidden in x. An empty F is
// replaced by {e}. The result is re-extended and compared with x; a mismatch
// raises ExtractionError.
SftSpec base_extract(const ShiftSpace& x, std::span<const Element> forbidden_shape, const ExtensionContext& ctx,
                     const Limits& limits = {});

// Extends level by level from tower level i to level j.
ShiftSpace tower_extend(const ShiftSpace& y, const GroupTower& tower, std::size_t i, std::size_t j,
                        const Limits& limits = {});

// A block map on the base group read over the ambient group (window mapped
// through the embedding).
BlockMap lift_block_map(const BlockMap& map, const ExtensionContext& ctx);

// kappa_B o (phi^H)^{cosets} o kappa_A^{-1} applied to one configuration.
Config factor_through_cosets(const ExtensionContext& ctx, const BlockMap& base_map, const Config& x);

}  // namespace freeshift
