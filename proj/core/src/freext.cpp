#include "freeshift/freext.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace freeshift {

namespace {

Subgroup image_subgroup(const GroupPtr& ambient, const std::vector<Element>& embedding) {
  return Subgroup(ambient, embedding);
}

void check_family(const ExtensionContext& ctx, const CosetFamily& family) {
  if (family.members.size() != ctx.index())
    throw InputError("coset family has " + std::to_string(family.members.size()) + " members, expected " +
                     std::to_string(ctx.index()));
  for (const auto& w : family.members)
    if (!w.is_full() || !same_group(w.group(), ctx.base()))
      throw InputError("coset family members must be full patterns on the base group");
}

}  // namespace

ExtensionContext::ExtensionContext(GroupPtr ambient, GroupPtr base, std::vector<Element> embedding)
    : ambient_(std::move(ambient)),
      base_(std::move(base)),
      embedding_(std::move(embedding)),
      decomposition_(right_cosets([&] {
        if (!ambient_ || !base_) throw InputError("extension context needs both groups");
        if (embedding_.size() != base_->order()) throw InputError("embedding must be total on the base group");
        for (Element a : embedding_) ambient_->require(a, "embedding image");
        if (sorted_set(embedding_).size() != embedding_.size()) throw InputError("embedding is not injective");
        if (auto bad = homomorphism_violation(*base_, *ambient_, embedding_))
          throw InputError("embedding is not a homomorphism at (" + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second) + ")");
        return image_subgroup(ambient_, embedding_);
      }())) {
  to_base_.assign(ambient_->order(), kNone);
  for (Element h = 0; h < embedding_.size(); ++h) to_base_[embedding_[h]] = h;
  index_positions();
}

void ExtensionContext::index_positions() {
  const std::size_t n = base_->order();
  positions_.assign(decomposition_.size() * n, 0);
  for (std::size_t c = 0; c < decomposition_.size(); ++c)
    for (Element h = 0; h < n; ++h) positions_[c * n + h] = ambient_->mul(embedding_[h], decomposition_.rep(c));
}

ExtensionContext ExtensionContext::from_subgroup(const Subgroup& h) {
  const GroupPtr& parent = h.parent();
  const auto& members = h.members();
  auto pos = [&](Element g) {
    return static_cast<Element>(std::lower_bound(members.begin(), members.end(), g) - members.begin());
  };
  std::vector<std::vector<Element>> rows(members.size(), std::vector<Element>(members.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(parent->label(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) rows[i][j] = pos(parent->mul(members[i], members[j]));
  }
  auto base = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows, std::move(labels)));
  return ExtensionContext(parent, std::move(base), members);
}

ExtensionContext ExtensionContext::from_tower(const GroupTower& tower, std::size_t i, std::size_t j) {
  return ExtensionContext(tower.level(j), tower.level(i), tower.embed_up(i, j));
}

ExtensionContext ExtensionContext::with_choice(std::vector<Element> reps) const {
  ExtensionContext out = *this;
  out.decomposition_ = decomposition_.with_choice(std::move(reps));
  out.index_positions();
  return out;
}

Element ExtensionContext::to_base(Element a) const {
  if (!in_base(a)) throw InputError("element " + std::to_string(a) + " is not in the embedded subgroup");
  return to_base_[a];
}

CosetFamily rho_action(const ExtensionContext& ctx, Element g, const CosetFamily& family) {
  check_family(ctx, family);
  const CosetAction act = coset_action(ctx.decomposition(), g);
  CosetFamily out;
  out.members.reserve(ctx.index());
  for (std::size_t c = 0; c < ctx.index(); ++c)
    out.members.push_back(shift_pattern(ctx.to_base(act.correction[c]), family.members[act.perm[c]]));
  return out;
}

Config kappa_config(const ExtensionContext& ctx, std::span<const Config* const> members) {
  const std::size_t n = ctx.base()->order();
  Config x(ctx.ambient()->order());
  for (std::size_t c = 0; c < ctx.index(); ++c)
    for (Element h = 0; h < n; ++h) x[ctx.position(c, h)] = (*members[c])[h];
  return x;
}

std::vector<Config> kappa_inverse_config(const ExtensionContext& ctx, const Config& x) {
  const std::size_t n = ctx.base()->order();
  std::vector<Config> out(ctx.index(), Config(n));
  for (std::size_t c = 0; c < ctx.index(); ++c)
    for (Element h = 0; h < n; ++h) out[c][h] = x[ctx.position(c, h)];
  return out;
}

Pattern kappa(const ExtensionContext& ctx, const CosetFamily& family) {
  check_family(ctx, family);
  std::vector<const Config*> members;
  for (const auto& w : family.members) members.push_back(&w.data());
  return Pattern::full(ctx.ambient(), kappa_config(ctx, members));
}

CosetFamily kappa_inverse(const ExtensionContext& ctx, const Pattern& x) {
  if (!x.is_full() || !same_group(x.group(), ctx.ambient()))
    throw InputError("kappa inverse needs a full pattern on the ambient group");
  CosetFamily out;
  for (auto& w : kappa_inverse_config(ctx, x.data())) out.members.push_back(Pattern::full(ctx.base(), std::move(w)));
  return out;
}

ShiftSpace free_extension(const ShiftSpace& y, const ExtensionContext& ctx, const Limits& limits) {
  if (!same_group(y.group(), ctx.base())) throw InputError("shift space is not over the extension's base group");
  const std::size_t k = ctx.index();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (y.size() != 0 && total > limits.candidate_budget / y.size())
      throw ResourceError("free extension would have more than " + std::to_string(limits.candidate_budget) +
                          " configurations");
    total *= y.size();
  }
  if (total > limits.candidate_budget)
    throw ResourceError("free extension would have more than " + std::to_string(limits.candidate_budget) +
                        " configurations");

  std::vector<Config> out;
  if (y.empty()) return ShiftSpace::trusted(ctx.ambient(), y.alphabet(), {});
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> pick(k, 0);
  std::vector<const Config*> members(k, &y.configs().front());
  while (true) {
    out.push_back(kappa_config(ctx, members));
    std::size_t i = k;
    while (i > 0) {
      if (++pick[i - 1] < y.size()) {
        members[i - 1] = &y.configs()[pick[i - 1]];
        break;
      }
      pick[i - 1] = 0;
      members[i - 1] = &y.configs().front();
      --i;
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return ShiftSpace::trusted(ctx.ambient(), y.alphabet(), std::move(out));
}

SftSpec free_extension_spec(const SftSpec& spec, const ExtensionContext& ctx) {
  spec.validate();
  if (!same_group(spec.group, ctx.base())) throw InputError("SFT spec is not over the extension's base group");
  std::vector<Element> shape;
  for (Element f : spec.shape) shape.push_back(ctx.to_ambient(f));
  return make_sft(ctx.ambient(), spec.alphabet, std::move(shape), spec.forbidden);
}

SftSpec base_extract(const ShiftSpace& x, std::span<const Element> forbidden_shape, const ExtensionContext& ctx,
                     const Limits& limits) {
  if (!same_group(x.group(), ctx.ambient())) throw InputError("shift space is not over the extension's ambient group");
  const FiniteGroup& K = *ctx.ambient();
  const CosetDecomposition& dec = ctx.decomposition();
  for (Element f : forbidden_shape) K.require(f, "forbidden shape element");

  std::vector<Element> shape = sorted_set({forbidden_shape.begin(), forbidden_shape.end()});
  if (shape.empty()) shape.push_back(K.identity());

  // Cosets met by F, and E = union of F_c c^{-1} inside H.
  std::vector<std::size_t> met;
  std::vector<Element> e_ambient;
  for (Element f : shape) {
    const std::size_t c = dec.coset_of(f);
    met.push_back(c);
    e_ambient.push_back(K.mul(f, K.inv(dec.rep(c))));
  }
  std::sort(met.begin(), met.end());
  met.erase(std::unique(met.begin(), met.end()), met.end());
  e_ambient = sorted_set(std::move(e_ambient));

  std::vector<Element> f_hat;
  for (std::size_t c : met)
    for (Element e : e_ambient) f_hat.push_back(K.mul(e, dec.rep(c)));
  f_hat = sorted_set(std::move(f_hat));
  auto hat_pos = [&](Element g) {
    return static_cast<std::size_t>(std::lower_bound(f_hat.begin(), f_hat.end(), g) - f_hat.begin());
  };

  // w on E survives iff some allowed F^-pattern z has z(e c) = w(e) for some
  // c in C0, i.e. P(w) is not entirely forbidden.
  std::set<std::vector<Symbol>> survivors;
  for (const auto& z : language(x, f_hat)) {
    for (std::size_t c : met) {
      std::vector<Symbol> w;
      w.reserve(e_ambient.size());
      for (Element e : e_ambient) w.push_back(z.data()[hat_pos(K.mul(e, dec.rep(c)))]);
      survivors.insert(std::move(w));
    }
  }

  std::vector<Element> e_base;
  for (Element e : e_ambient) e_base.push_back(ctx.to_base(e));
  std::vector<std::vector<Symbol>> forbidden;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < e_base.size(); ++i) {
    count *= x.alphabet().size();
    if (count > limits.candidate_budget) throw ResourceError("base extraction has too many candidate patterns");
  }
  const auto candidates = extensions(Pattern::empty(ctx.base()), e_base, x.alphabet());
  // `extensions` orders data by sorted base index; re-key to e_ambient order.
  std::vector<std::size_t> order(e_base.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e_base[a] < e_base[b]; });
  for (const auto& w : candidates) {
    std::vector<Symbol> in_ambient_order(e_base.size());
    for (std::size_t i = 0; i < order.size(); ++i) in_ambient_order[order[i]] = w.data()[i];
    if (!survivors.count(in_ambient_order)) forbidden.push_back(std::move(in_ambient_order));
  }
  SftSpec result = make_sft(ctx.base(), x.alphabet(), e_base, std::move(forbidden));

  const ShiftSpace again = enumerate_sft(free_extension_spec(result, ctx), limits);
  if (!(again.configs() == x.configs())) {
    std::vector<Config> only_input, only_again;
    std::set_difference(x.configs().begin(), x.configs().end(), again.configs().begin(), again.configs().end(),
                        std::back_inserter(only_input));
    std::set_difference(again.configs().begin(), again.configs().end(), x.configs().begin(), x.configs().end(),
                        std::back_inserter(only_again));
    const bool in_input = !only_input.empty();
    throw ExtractionError("space is not the free extension of an SFT over this subgroup with that forbidden shape",
                          in_input ? only_input.front() : only_again.front(), in_input);
  }
  return result;
}

ShiftSpace tower_extend(const ShiftSpace& y, const GroupTower& tower, std::size_t i, std::size_t j,
                        const Limits& limits) {
  if (i > j || j >= tower.size()) throw InputError("tower_extend needs levels i <= j < tower size");
  if (!same_group(y.group(), tower.level(i))) throw InputError("shift space is not over tower level " + std::to_string(i));
  ShiftSpace current = y;
  for (std::size_t k = i; k < j; ++k) current = free_extension(current, ExtensionContext::from_tower(tower, k, k + 1), limits);
  return current;
}

BlockMap lift_block_map(const BlockMap& map, const ExtensionContext& ctx) {
  BlockMap out = map;
  for (auto& e : out.window) e = ctx.to_ambient(e);
  return out;
}

Config factor_through_cosets(const ExtensionContext& ctx, const BlockMap& base_map, const Config& x) {
  auto members = kappa_inverse_config(ctx, x);
  for (auto& w : members) w = apply_block_code(*ctx.base(), base_map, w);
  std::vector<const Config*> ptrs;
  for (const auto& w : members) ptrs.push_back(&w);
  return kappa_config(ctx, ptrs);
}

}  // namespace freeshift
