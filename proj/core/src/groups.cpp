#include "freeshift/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "freeshift/error.hpp"

namespace freeshift {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 64;
constexpr std::size_t kSampledAssociativityTriples = 100000;

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& rows,
                                    std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) throw ValidationError("group table is empty");

  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw ValidationError("closure: row " + std::to_string(a) + " has " +
                            std::to_string(rows[a].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) {
        throw ValidationError("closure: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                              std::to_string(rows[a][b]) + " is not an element");
      }
      g.table_.push_back(rows[a][b]);
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("identity: no two-sided identity element");
  g.identity_ = *identity;

  g.inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw ValidationError("inverse: element " + std::to_string(a) + " has no inverse");
  }

  if (n <= kExhaustiveAssociativityLimit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw ValidationError("associativity: fails at " + triple(a, b, c));
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < kSampledAssociativityTriples; ++i) {
      Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        throw ValidationError("associativity: fails at " + triple(a, b, c));
    }
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (labels.size() != n) {
    throw ValidationError("labels: expected " + std::to_string(n) + " labels");
  }
  g.labels_ = std::move(labels);
  return g;
}

void FiniteGroup::require(Element a, const char* what) const {
  if (!valid(a))
    throw InputError(std::string(what) + " " + std::to_string(a) + " is out of range for a group of order " +
                     std::to_string(order_));
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
  require(a);
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Element a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be at least 1");
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<Element>((a + b) % n);
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order();
  const std::size_t n = na * nb;
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Element>(x % na), xj = static_cast<Element>(x / na);
    labels[x] = "(" + a->label(xi) + "," + b->label(xj) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto yi = static_cast<Element>(y % na), yj = static_cast<Element>(y / na);
      rows[x][y] = static_cast<Element>(a->mul(xi, yi) + na * b->mul(xj, yj));
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows, std::move(labels)));
}

GroupDescription cyclic_description(std::size_t n) { return GroupDescription{CyclicDescription{n}}; }

GroupDescription product_description(GroupDescription left, GroupDescription right) {
  return GroupDescription{ProductDescription{std::make_shared<const GroupDescription>(std::move(left)),
                                             std::make_shared<const GroupDescription>(std::move(right))}};
}

GroupPtr make_group(const GroupDescription& description) {
  struct Visitor {
    GroupPtr operator()(const CyclicDescription& c) const { return cyclic(c.n); }
    GroupPtr operator()(const ProductDescription& p) const {
      if (!p.left || !p.right) throw InputError("product description is missing a factor");
      return direct_product(make_group(*p.left), make_group(*p.right));
    }
    GroupPtr operator()(const TableDescription& t) const {
      return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(t.rows, t.labels));
    }
  };
  return std::visit(Visitor{}, description.value);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members) : parent_(std::move(parent)) {
  if (!parent_) throw InputError("subgroup has no parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Element m : members) parent_->require(m, "subgroup member");
  mask_.assign(parent_->order(), false);
  for (Element m : members) mask_[m] = true;
  members_ = std::move(members);

  if (!contains(parent_->identity())) throw InputError("subset does not contain the identity");
  for (Element a : members_) {
    if (!contains(parent_->inv(a))) throw InputError("subset is not closed under inverses at " + std::to_string(a));
    for (Element b : members_)
      if (!contains(parent_->mul(a, b)))
        throw InputError("subset is not closed under multiplication at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
  }
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g, std::move(all));
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Element> gens) {
  for (Element x : gens) g->require(x, "generator");
  std::vector<bool> seen(g->order(), false);
  std::vector<Element> members{g->identity()};
  seen[g->identity()] = true;
  std::deque<Element> work{g->identity()};
  // In a finite group closing under right multiplication by generators also
  // yields inverses, since every element has finite order.
  while (!work.empty()) {
    const Element a = work.front();
    work.pop_front();
    for (Element s : gens) {
      const Element b = g->mul(a, s);
      if (!seen[b]) {
        seen[b] = true;
        members.push_back(b);
        work.push_back(b);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t closure_budget) {
  std::set<std::vector<Element>> found;
  std::deque<std::vector<Element>> work;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (found.insert(s.members()).second) {
      work.push_back(s.members());
      out.push_back(std::move(s));
    }
  };
  add(trivial_subgroup(g));
  std::size_t closures = 0;
  while (!work.empty()) {
    std::vector<Element> base = std::move(work.front());
    work.pop_front();
    std::vector<bool> in(g->order(), false);
    for (Element m : base) in[m] = true;
    for (Element x = 0; x < g->order(); ++x) {
      if (in[x]) continue;
      if (++closures > closure_budget)
        throw ResourceError("subgroup enumeration exceeded the closure budget of " + std::to_string(closure_budget));
      std::vector<Element> gens = base;
      gens.push_back(x);
      add(generated_subgroup(g, gens));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

CosetDecomposition right_cosets(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  CosetDecomposition dec(h);
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  dec.coset_of_.assign(g->order(), unassigned);
  for (Element c = 0; c < g->order(); ++c) {
    if (dec.coset_of_[c] != unassigned) continue;
    const std::size_t index = dec.cosets_.size();
    std::vector<Element> coset;
    coset.reserve(h.order());
    for (Element m : h.members()) {
      const Element x = g->mul(m, c);
      coset.push_back(x);
      dec.coset_of_[x] = index;
    }
    std::sort(coset.begin(), coset.end());
    dec.reps_.push_back(coset.front());
    dec.cosets_.push_back(std::move(coset));
  }
  return dec;
}

CosetDecomposition CosetDecomposition::with_choice(std::vector<Element> reps) const {
  if (reps.size() != cosets_.size())
    throw InputError("choice function needs one representative per coset");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    parent()->require(reps[i], "coset representative");
    if (coset_of_[reps[i]] != i)
      throw InputError("representative " + std::to_string(reps[i]) + " is not in coset " + std::to_string(i));
  }
  CosetDecomposition out = *this;
  out.reps_ = std::move(reps);
  return out;
}

CosetAction coset_action(const CosetDecomposition& dec, Element g) {
  const FiniteGroup& G = *dec.parent();
  G.require(g);
  CosetAction act;
  act.perm.resize(dec.size());
  act.correction.resize(dec.size());
  for (std::size_t c = 0; c < dec.size(); ++c) {
    const Element cg = G.mul(dec.rep(c), g);
    const std::size_t target = dec.coset_of(cg);
    act.perm[c] = target;
    act.correction[c] = G.mul(cg, G.inv(dec.rep(target)));
  }
  return act;
}

std::optional<std::pair<Element, Element>> homomorphism_violation(
    const FiniteGroup& source, const FiniteGroup& target, std::span<const Element> map) {
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return std::pair{a, b};
  return std::nullopt;
}

GroupTower GroupTower::build(std::vector<GroupPtr> levels, std::vector<std::vector<Element>> embeddings) {
  if (levels.empty()) throw ValidationError("tower needs at least one level");
  if (embeddings.size() + 1 != levels.size())
    throw ValidationError("tower with " + std::to_string(levels.size()) + " levels needs " +
                          std::to_string(levels.size() - 1) + " embeddings");
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const FiniteGroup& lo = *levels[i];
    const FiniteGroup& hi = *levels[i + 1];
    const auto& map = embeddings[i];
    const std::string where = "embedding " + std::to_string(i) + "->" + std::to_string(i + 1) + ": ";
    if (hi.order() % lo.order() != 0)
      throw ValidationError(where + "order " + std::to_string(lo.order()) + " does not divide " +
                            std::to_string(hi.order()));
    if (map.size() != lo.order()) throw ValidationError(where + "map is not total on the smaller group");
    std::vector<std::optional<Element>> preimage(hi.order());
    for (Element a = 0; a < lo.order(); ++a) {
      if (!hi.valid(map[a])) throw ValidationError(where + "image of " + std::to_string(a) + " is out of range");
      if (preimage[map[a]])
        throw ValidationError(where + "not injective: " + std::to_string(*preimage[map[a]]) + " and " +
                              std::to_string(a) + " both map to " + std::to_string(map[a]));
      preimage[map[a]] = a;
    }
    if (auto bad = homomorphism_violation(lo, hi, map))
      throw ValidationError(where + "not a homomorphism at (" + std::to_string(bad->first) + ", " +
                            std::to_string(bad->second) + ")");
  }
  GroupTower t;
  t.levels_ = std::move(levels);
  t.embeddings_ = std::move(embeddings);
  return t;
}

std::vector<Element> GroupTower::embed_up(std::size_t i, std::size_t j) const {
  if (i > j || j >= levels_.size())
    throw InputError("embed_up needs level indices i <= j < " + std::to_string(levels_.size()));
  std::vector<Element> map(levels_[i]->order());
  std::iota(map.begin(), map.end(), Element{0});
  for (std::size_t k = i; k < j; ++k)
    for (auto& x : map) x = embeddings_[k][x];
  return map;
}

GroupTower build_tower(const std::vector<GroupDescription>& levels, std::vector<std::vector<Element>> embeddings) {
  std::vector<GroupPtr> groups;
  groups.reserve(levels.size());
  for (const auto& d : levels) groups.push_back(make_group(d));
  return GroupTower::build(std::move(groups), std::move(embeddings));
}

}  // namespace freeshift
