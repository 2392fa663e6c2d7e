#ifndef LEFSCHETZ_CLASSES_HPP
#define LEFSCHETZ_CLASSES_HPP

// The subgroup lattice of a Sylow subgroup and its partition into classes
// under an acting group (S itself, N_G(S) or G).

#include <lefschetz/structure.hpp>

#include <map>
#include <memory>
#include <set>

namespace lefschetz {

inline constexpr std::size_t default_lattice_bound = 20000;

/// Every subgroup of a p-group S, ordered by order (trivial subgroup first).
class SubgroupLattice {
public:
  SubgroupLattice(Subgroup s, std::uint64_t p, std::size_t bound = default_lattice_bound)
      : s_(std::move(s)), p_(p) {
    if (!is_power_of(s_.order(), p))
      throw InputError("subgroup lattice: S is not a p-group");
    const FiniteGroup& g = s_.group();
    add(trivial_subgroup(g), bound);
    std::size_t layer_begin = 0;
    while (layer_begin < subs_.size()) {
      const std::size_t layer_end = subs_.size();
      for (std::size_t h = layer_begin; h < layer_end; ++h) {
        // Each subgroup of order p|H| over H is H<x> for a p-element x
        // normalizing H with x^p in H.
        const Subgroup base = subs_[h];
        for (ElemId x : s_.elements()) {
          if (base.contains(x) || !base.contains(g.pow(x, static_cast<long long>(p))) ||
              !normalizes(x, base))
            continue;
          auto gens = base.generators();
          gens.push_back(x);
          add(generate(g, gens), bound);
        }
      }
      layer_begin = layer_end;
    }
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      cyclic_.push_back(lefschetz::is_cyclic(subs_[i]));
      maximal_.emplace_back();
      for (std::size_t j = 0; j < i; ++j)
        if (subs_[j].order() * p == subs_[i].order() && subs_[j].is_subgroup_of(subs_[i]))
          maximal_[i].push_back(j);
    }
  }

  const Subgroup& sylow() const { return s_; }
  std::uint64_t prime() const { return p_; }
  std::size_t size() const { return subs_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  bool is_cyclic(std::size_t i) const { return cyclic_[i]; }
  /// Indices of the subgroups of index p in subgroup i.
  const std::vector<std::size_t>& maximal_subgroups(std::size_t i) const { return maximal_[i]; }

  std::optional<std::size_t> find(const Subgroup& h) const {
    auto it = index_.find(h.elements());
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const Subgroup& h) const {
    if (auto i = find(h))
      return *i;
    throw AlgorithmError("subgroup is not in the Sylow lattice");
  }

private:
  void add(Subgroup h, std::size_t bound) {
    if (index_.contains(h.elements()))
      return;
    if (subs_.size() >= bound)
      throw ResourceError("lattice too large: more than " + std::to_string(bound) +
                          " subgroups");
    index_.emplace(h.elements(), subs_.size());
    subs_.push_back(std::move(h));
  }

  Subgroup s_;
  std::uint64_t p_;
  std::vector<Subgroup> subs_;
  std::map<std::vector<ElemId>, std::size_t> index_;
  std::vector<bool> cyclic_;
  std::vector<std::vector<std::size_t>> maximal_;
};

enum class ClassScope { sylow, normalizer, group };

inline std::string scope_name(ClassScope s) {
  switch (s) {
  case ClassScope::sylow: return "sylow";
  case ClassScope::normalizer: return "normalizer";
  default: return "group";
  }
}

/// Classes of subgroups of S under conjugation by an acting group. Classes
/// are ordered by subgroup order, class 0 being the trivial subgroup.
class ClassTable {
public:
  ClassTable(std::shared_ptr<const SubgroupLattice> lattice, Subgroup acting, ClassScope scope)
      : lattice_(std::move(lattice)), acting_(std::move(acting)), scope_(scope) {
    const SubgroupLattice& lat = *lattice_;
    const FiniteGroup& g = acting_.group();
    constexpr std::size_t unset = SIZE_MAX;
    class_of_.assign(lat.size(), unset);
    to_rep_.assign(lat.size(), FiniteGroup::identity());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (class_of_[i] != unset)
        continue;
      const std::size_t c = reps_.size();
      reps_.push_back(i);
      members_.emplace_back();
      const Subgroup& rep = lat[i];
      for (ElemId x : acting_.elements()) {
        bool inside = true;
        for (ElemId y : rep.generators())
          if (!lat.sylow().contains(g.conj(x, y))) {
            inside = false;
            break;
          }
        if (!inside)
          continue;
        std::size_t j = lat.index_of(conjugate(rep, x));
        if (class_of_[j] != unset)
          continue;
        class_of_[j] = c;
        to_rep_[j] = g.inv(x);
        members_[c].push_back(j);
      }
    }
  }

  const SubgroupLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lattice_; }
  const Subgroup& sylow() const { return lattice_->sylow(); }
  const FiniteGroup& group() const { return acting_.group(); }
  const Subgroup& acting() const { return acting_; }
  ClassScope scope() const { return scope_; }
  std::uint64_t prime() const { return lattice_->prime(); }

  std::size_t size() const { return reps_.size(); }
  const Subgroup& rep(std::size_t c) const { return (*lattice_)[reps_[c]]; }
  std::size_t rep_index(std::size_t c) const { return reps_[c]; }
  /// Lattice indices of the subgroups of S in class c.
  const std::vector<std::size_t>& members(std::size_t c) const { return members_[c]; }
  bool is_cyclic(std::size_t c) const { return lattice_->is_cyclic(reps_[c]); }
  std::size_t order_of(std::size_t c) const { return rep(c).order(); }

  std::size_t class_of(std::size_t lattice_index) const { return class_of_[lattice_index]; }
  std::size_t class_of(const Subgroup& h) const { return class_of_[lattice_->index_of(h)]; }
  /// g in the acting group with g H g^-1 = rep(class_of(H)).
  ElemId to_rep(std::size_t lattice_index) const { return to_rep_[lattice_index]; }

  std::size_t cyclic_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < size(); ++c)
      n += is_cyclic(c);
    return n;
  }

  std::vector<std::size_t> cyclic_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < size(); ++c)
      if (is_cyclic(c))
        out.push_back(c);
    return out;
  }

private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  Subgroup acting_;
  ClassScope scope_;
  std::vector<std::size_t> reps_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> class_of_;
  std::vector<ElemId> to_rep_;
};

/// The Sylow lattice of G at p together with its class tables in all three
/// scopes, plus normalizers and centralizers (in G) of the G-class
/// representatives.
class SubgroupClassTable {
public:
  SubgroupClassTable(FiniteGroup g, std::uint64_t p, std::size_t bound = default_lattice_bound)
      : g_(std::move(g)), p_(p) {
    if (!is_prime(p))
      throw InputError(std::to_string(p) + " is not prime");
    Subgroup s = with_small_generators(sylow_subgroup(g_, p));
    auto lattice = std::make_shared<const SubgroupLattice>(s, p, bound);
    Subgroup n = normalizer(g_, s);
    sylow_scope_ = std::make_shared<ClassTable>(lattice, s, ClassScope::sylow);
    normalizer_scope_ = std::make_shared<ClassTable>(lattice, n, ClassScope::normalizer);
    group_scope_ = std::make_shared<ClassTable>(lattice, whole_group(g_), ClassScope::group);
    for (std::size_t c = 0; c < group_scope_->size(); ++c) {
      normalizers_.push_back(normalizer(g_, group_scope_->rep(c)));
      centralizers_.push_back(centralizer(g_, group_scope_->rep(c)));
    }
  }

  const FiniteGroup& group() const { return g_; }
  std::uint64_t prime() const { return p_; }
  const Subgroup& sylow() const { return group_scope_->sylow(); }
  const SubgroupLattice& lattice() const { return group_scope_->lattice(); }

  const ClassTable& scope(ClassScope s) const {
    switch (s) {
    case ClassScope::sylow: return *sylow_scope_;
    case ClassScope::normalizer: return *normalizer_scope_;
    default: return *group_scope_;
    }
  }
  const ClassTable& classes() const { return *group_scope_; }

  std::shared_ptr<const ClassTable> table_ptr(ClassScope s) const {
    switch (s) {
    case ClassScope::sylow: return sylow_scope_;
    case ClassScope::normalizer: return normalizer_scope_;
    default: return group_scope_;
    }
  }

  std::size_t size() const { return group_scope_->size(); }
  const Subgroup& rep(std::size_t c) const { return group_scope_->rep(c); }
  bool is_cyclic(std::size_t c) const { return group_scope_->is_cyclic(c); }
  /// c(G): G-classes of cyclic p-subgroups, the trivial subgroup included.
  std::size_t cyclic_class_count() const { return group_scope_->cyclic_count(); }
  const Subgroup& normalizer_of(std::size_t c) const { return normalizers_[c]; }
  const Subgroup& centralizer_of(std::size_t c) const { return centralizers_[c]; }

  /// For a p-subgroup Q of G: its G-class and g with g Q g^-1 = rep(class).
  std::pair<std::size_t, ElemId> locate(const Subgroup& q) const {
    const Subgroup& s = sylow();
    for (ElemId x = 0; x < g_.order(); ++x) {
      bool inside = true;
      for (ElemId y : q.generators())
        if (!s.contains(g_.conj(x, y))) {
          inside = false;
          break;
        }
      if (!inside)
        continue;
      std::size_t j = lattice().index_of(conjugate(q, x));
      return {group_scope_->class_of(j), g_.mul(group_scope_->to_rep(j), x)};
    }
    throw AlgorithmError("p-subgroup is not conjugate into the Sylow subgroup");
  }

private:
  FiniteGroup g_;
  std::uint64_t p_;
  std::shared_ptr<ClassTable> sylow_scope_;
  std::shared_ptr<ClassTable> normalizer_scope_;
  std::shared_ptr<ClassTable> group_scope_;
  std::vector<Subgroup> normalizers_;
  std::vector<Subgroup> centralizers_;
};

inline SubgroupClassTable p_subgroup_classes(const FiniteGroup& g, std::uint64_t p,
                                             std::size_t bound = default_lattice_bound) {
  return SubgroupClassTable(g, p, bound);
}

/// Frobenius: G is p-nilpotent iff every N_G(P)/C_G(P) is a p-group.
inline bool is_p_nilpotent(const SubgroupClassTable& t) {
  for (std::size_t c = 0; c < t.size(); ++c) {
    std::size_t quotient = t.normalizer_of(c).order() / t.centralizer_of(c).order();
    if (!is_power_of(quotient, t.prime()))
      return false;
  }
  return true;
}

inline bool is_p_nilpotent(const FiniteGroup& g, std::uint64_t p) {
  return is_p_nilpotent(p_subgroup_classes(g, p));
}

namespace detail {

// The conjugation maps P -> S induced by elements of `by`, each recorded as
// the images of P's generators.
inline std::set<std::vector<ElemId>> induced_maps(const Subgroup& by, const Subgroup& p,
                                                  const Subgroup& s) {
  const FiniteGroup& g = s.group();
  std::set<std::vector<ElemId>> out;
  std::vector<ElemId> images(p.generators().size());
  for (ElemId x : by.elements()) {
    bool inside = true;
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = g.conj(x, p.generators()[i]);
      if (!s.contains(images[i])) {
        inside = false;
        break;
      }
    }
    if (inside)
      out.insert(images);
  }
  return out;
}

inline void check_fusion_arguments(const FiniteGroup& g, const Subgroup& h, const Subgroup& s) {
  if (!s.is_subgroup_of(h))
    throw InputError("controls_fusion: S is not contained in H");
  std::size_t order = s.order();
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; q <= order; ++q)
    if (order % q == 0) {
      p = q;
      break;
    }
  if (order == 1 || !is_power_of(order, p) || p_part_of(g.order(), p) != order)
    throw InputError("controls_fusion: S is not a Sylow subgroup");
}

} // namespace detail

/// H controls fusion in S: every conjugation map P -> S induced by G, for
/// P <= S, is also induced by an element of H.
inline bool controls_fusion(const FiniteGroup& g, const Subgroup& h, const Subgroup& s) {
  detail::check_fusion_arguments(g, h, s);
  std::uint64_t p = 2;
  while (s.order() % p != 0)
    ++p;
  SubgroupLattice lattice(s, p);
  Subgroup all = whole_group(g);
  for (const Subgroup& sub : lattice.subgroups()) {
    auto from_h = detail::induced_maps(h, sub, s);
    for (const auto& m : detail::induced_maps(all, sub, s))
      if (!from_h.contains(m))
        return false;
  }
  return true;
}

/// The weaker condition: any two G-conjugate subgroups of S are already
/// conjugate under H.
inline bool subgroup_fusion_controlled(const FiniteGroup& g, const Subgroup& h,
                                       const Subgroup& s) {
  detail::check_fusion_arguments(g, h, s);
  std::uint64_t p = 2;
  while (s.order() % p != 0)
    ++p;
  auto lattice = std::make_shared<const SubgroupLattice>(s, p);
  ClassTable by_h(lattice, h, ClassScope::normalizer);
  ClassTable by_g(lattice, whole_group(g), ClassScope::group);
  return by_h.size() == by_g.size();
}

} // namespace lefschetz

#endif // LEFSCHETZ_CLASSES_HPP
