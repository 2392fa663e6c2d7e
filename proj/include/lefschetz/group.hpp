#ifndef LEFSCHETZ_GROUP_HPP
#define LEFSCHETZ_GROUP_HPP

#include <lefschetz/error.hpp>
#include <lefschetz/permutation.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lefschetz {

using ElemId = std::uint32_t;

inline constexpr std::size_t default_element_bound = 100000;

/// A permutation group with every element enumerated.
///
/// Handle type: copies share the same immutable element table. Element 0 is
/// always the identity. Products are looked up in a Cayley table when the
/// group is small enough, otherwise composed and hashed.
class FiniteGroup {
  static constexpr std::size_t table_limit = 2048;

  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<ElemId> generator_ids;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, ElemId, PermutationHash> index;
    std::vector<ElemId> inverses;
    std::vector<std::uint32_t> orders;
    std::vector<ElemId> table; // row-major, empty when order > table_limit
  };

public:
  FiniteGroup() = default;

  /// Closure of `gens` under composition.
  static FiniteGroup from_generators(std::size_t degree, std::vector<Permutation> gens,
                                     std::size_t bound = default_element_bound) {
    for (const auto& g : gens)
      if (g.degree() != degree)
        throw InputError("invalid permutation: generator degree " +
                         std::to_string(g.degree()) + " differs from group degree " +
                         std::to_string(degree));
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->generators = std::move(gens);
    d->elements.push_back(Permutation::identity(degree));
    d->index.emplace(d->elements.front(), 0);
    for (std::size_t head = 0; head < d->elements.size(); ++head) {
      for (const auto& g : d->generators) {
        Permutation next = d->elements[head] * g;
        if (d->index.contains(next))
          continue;
        if (d->elements.size() >= bound)
          throw ResourceError("group too large: more than " + std::to_string(bound) +
                              " elements");
        d->index.emplace(next, static_cast<ElemId>(d->elements.size()));
        d->elements.push_back(std::move(next));
      }
    }
    finish(*d);
    FiniteGroup out;
    out.d_ = std::move(d);
    return out;
  }

  std::size_t degree() const { return d_->degree; }
  std::size_t order() const { return d_->elements.size(); }
  const std::vector<Permutation>& generators() const { return d_->generators; }
  const std::vector<ElemId>& generator_ids() const { return d_->generator_ids; }
  const Permutation& element(ElemId id) const { return d_->elements[id]; }
  static constexpr ElemId identity() { return 0; }

  std::optional<ElemId> find(const Permutation& p) const {
    auto it = d_->index.find(p);
    if (it == d_->index.end())
      return std::nullopt;
    return it->second;
  }

  ElemId id_of(const Permutation& p) const {
    if (auto id = find(p))
      return *id;
    throw InputError("permutation " + p.to_cycles() + " is not in the group");
  }

  ElemId mul(ElemId a, ElemId b) const {
    if (!d_->table.empty())
      return d_->table[static_cast<std::size_t>(a) * order() + b];
    return d_->index.at(d_->elements[a] * d_->elements[b]);
  }

  ElemId inv(ElemId a) const { return d_->inverses[a]; }

  /// g x g^-1
  ElemId conj(ElemId g, ElemId x) const { return mul(mul(g, x), inv(g)); }

  ElemId pow(ElemId x, long long e) const {
    if (e < 0) {
      x = inv(x);
      e = -e;
    }
    ElemId result = identity();
    while (e) {
      if (e & 1)
        result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  std::uint32_t element_order(ElemId x) const { return d_->orders[x]; }

  bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }

private:
  static void finish(Data& d) {
    const std::size_t n = d.elements.size();
    for (const auto& g : d.generators)
      d.generator_ids.push_back(d.index.at(g));
    d.inverses.resize(n);
    d.orders.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.inverses[i] = d.index.at(d.elements[i].inverse());
      d.orders[i] = static_cast<std::uint32_t>(d.elements[i].order());
    }
    if (n <= table_limit) {
      d.table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          d.table[a * n + b] = d.index.at(d.elements[a] * d.elements[b]);
    }
  }

  std::shared_ptr<const Data> d_;
};

inline FiniteGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                         std::size_t bound = default_element_bound) {
  return FiniteGroup::from_generators(degree, std::move(gens), bound);
}

/// A subgroup of a FiniteGroup, stored as a sorted element list plus a
/// membership mask over the parent's element ids.
class Subgroup {
public:
  Subgroup() = default;

  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ElemId>& elements() const { return elements_; }
  const std::vector<ElemId>& generators() const { return gens_; }
  bool contains(ElemId x) const { return mask_.test(x); }
  bool is_trivial() const { return elements_.size() == 1; }

  bool is_subgroup_of(const Subgroup& other) const {
    return order() <= other.order() && mask_.is_subset_of(other.mask_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

  /// Trusted constructor: `elements` must be a subgroup of `g`.
  static Subgroup from_closed_set(const FiniteGroup& g, std::vector<ElemId> elements,
                                  std::vector<ElemId> gens) {
    Subgroup h;
    h.group_ = g;
    std::sort(elements.begin(), elements.end());
    h.elements_ = std::move(elements);
    h.gens_ = std::move(gens);
    h.mask_.resize(g.order());
    for (ElemId x : h.elements_)
      h.mask_.set(x);
    return h;
  }

private:
  FiniteGroup group_;
  std::vector<ElemId> elements_;
  std::vector<ElemId> gens_;
  boost::dynamic_bitset<> mask_;
};

/// The subgroup generated by `gens`.
inline Subgroup generate(const FiniteGroup& g, std::span<const ElemId> gens) {
  std::vector<ElemId> elems{FiniteGroup::identity()};
  boost::dynamic_bitset<> seen(g.order());
  seen.set(FiniteGroup::identity());
  std::vector<ElemId> kept;
  for (ElemId x : gens)
    if (x != FiniteGroup::identity())
      kept.push_back(x);
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (ElemId s : kept) {
      ElemId next = g.mul(elems[head], s);
      if (!seen.test(next)) {
        seen.set(next);
        elems.push_back(next);
      }
    }
  return Subgroup::from_closed_set(g, std::move(elems), std::move(kept));
}

inline Subgroup generate(const FiniteGroup& g, std::initializer_list<ElemId> gens) {
  return generate(g, std::span<const ElemId>(gens.begin(), gens.size()));
}

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<ElemId> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<ElemId>(i);
  return Subgroup::from_closed_set(g, std::move(all), g.generator_ids());
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup::from_closed_set(g, {FiniteGroup::identity()}, {});
}

/// Validating constructor from an explicit element set: checks closure and
/// Lagrange's divisibility.
inline Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<ElemId> elements) {
  boost::dynamic_bitset<> mask(g.order());
  for (ElemId x : elements) {
    if (x >= g.order())
      throw InputError("element id out of range");
    mask.set(x);
  }
  if (!mask.test(FiniteGroup::identity()))
    throw InputError("subset does not contain the identity");
  for (ElemId a : elements)
    for (ElemId b : elements)
      if (!mask.test(g.mul(a, b)))
        throw InputError("subset is not closed under multiplication");
  std::vector<ElemId> unique;
  for (std::size_t i = mask.find_first(); i != mask.npos; i = mask.find_next(i))
    unique.push_back(static_cast<ElemId>(i));
  if (g.order() % unique.size() != 0)
    throw AlgorithmError("subgroup order does not divide group order");
  std::vector<ElemId> gens = unique;
  return Subgroup::from_closed_set(g, std::move(unique), std::move(gens));
}

/// g H g^-1
inline Subgroup conjugate(const Subgroup& h, ElemId g) {
  const FiniteGroup& grp = h.group();
  std::vector<ElemId> elems;
  elems.reserve(h.order());
  for (ElemId x : h.elements())
    elems.push_back(grp.conj(g, x));
  std::vector<ElemId> gens;
  for (ElemId x : h.generators())
    gens.push_back(grp.conj(g, x));
  return Subgroup::from_closed_set(grp, std::move(elems), std::move(gens));
}

/// True when g normalizes H, tested on H's generators.
inline bool normalizes(ElemId g, const Subgroup& h) {
  for (ElemId x : h.generators())
    if (!h.contains(h.group().conj(g, x)))
      return false;
  return true;
}

inline bool centralizes(ElemId g, const Subgroup& h) {
  const FiniteGroup& grp = h.group();
  for (ElemId x : h.generators())
    if (grp.mul(g, x) != grp.mul(x, g))
      return false;
  return true;
}

inline bool is_normal_in(const Subgroup& k, const Subgroup& n) {
  if (!k.is_subgroup_of(n))
    return false;
  for (ElemId g : n.generators())
    if (!normalizes(g, k))
      return false;
  return true;
}

/// A cyclic subgroup is detected by an element of full order.
inline bool is_cyclic(const Subgroup& h) {
  for (ElemId x : h.elements())
    if (h.group().element_order(x) == h.order())
      return true;
  return false;
}

} // namespace lefschetz

#endif // LEFSCHETZ_GROUP_HPP
