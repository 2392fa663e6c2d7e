#ifndef LEFSCHETZ_STRUCTURE_HPP
#define LEFSCHETZ_STRUCTURE_HPP

// Structural subgroup computations by exhaustive iteration over enumerated
// groups: normalizers, conjugacy, Sylow subgroups, p-parts, automizers and
// small-group shapes.

#include <lefschetz/arith.hpp>
#include <lefschetz/group.hpp>
#include <lefschetz/table_group.hpp>

#include <map>
#include <optional>
#include <string>

namespace lefschetz {

/// Replaces a subgroup's generating list by a short one (greedy).
inline Subgroup with_small_generators(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<ElemId> gens;
  Subgroup current = trivial_subgroup(g);
  for (ElemId x : h.elements()) {
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = generate(g, gens);
    if (current.order() == h.order())
      break;
  }
  return Subgroup::from_closed_set(g, h.elements(), std::move(gens));
}

inline Subgroup normalizer(const Subgroup& within, const Subgroup& h) {
  std::vector<ElemId> out;
  for (ElemId g : within.elements())
    if (normalizes(g, h))
      out.push_back(g);
  return with_small_generators(
      Subgroup::from_closed_set(within.group(), std::move(out), {}));
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  return normalizer(whole_group(g), h);
}

inline Subgroup centralizer(const Subgroup& within, const Subgroup& h) {
  std::vector<ElemId> out;
  for (ElemId g : within.elements())
    if (centralizes(g, h))
      out.push_back(g);
  return with_small_generators(
      Subgroup::from_closed_set(within.group(), std::move(out), {}));
}

inline Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  return centralizer(whole_group(g), h);
}

struct ConjugacyWitness {
  bool conjugate = false;
  ElemId witness = FiniteGroup::identity(); ///< g with g A g^-1 = B when conjugate
};

/// Searches `within` for g with g A g^-1 = B. Candidates are taken one per
/// left coset of N_within(A), since g and gn give the same conjugate.
inline ConjugacyWitness conjugating_element(const Subgroup& within, const Subgroup& a,
                                            const Subgroup& b) {
  if (a.order() != b.order())
    return {};
  const FiniteGroup& g = within.group();
  Subgroup norm = normalizer(within, a);
  boost::dynamic_bitset<> covered(g.order());
  for (ElemId x : within.elements()) {
    if (covered.test(x))
      continue;
    for (ElemId n : norm.elements())
      covered.set(g.mul(x, n));
    bool ok = true;
    for (ElemId y : a.generators())
      if (!b.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok)
      return {true, x};
  }
  return {};
}

inline ConjugacyWitness are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& a,
                                                const Subgroup& b) {
  return conjugating_element(whole_group(g), a, b);
}

/// A Sylow p-subgroup of `within`, grown from the trivial subgroup by
/// adjoining p-elements of the current normalizer.
inline Subgroup sylow_subgroup(const Subgroup& within, std::uint64_t p) {
  if (!is_prime(p))
    throw InputError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const FiniteGroup& g = within.group();
  const std::uint64_t target = p_part_of(within.order(), p);
  Subgroup current = trivial_subgroup(g);
  while (current.order() < target) {
    bool grew = false;
    for (ElemId x : within.elements()) {
      if (current.contains(x) || !is_power_of(g.element_order(x), p))
        continue;
      if (!normalizes(x, current))
        continue;
      auto gens = current.generators();
      gens.push_back(x);
      current = generate(g, gens);
      grew = true;
      break;
    }
    if (!grew)
      throw AlgorithmError("sylow_subgroup: no p-element in the normalizer");
  }
  return current;
}

inline Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  return sylow_subgroup(whole_group(g), p);
}

struct ElementDecomposition {
  Permutation x;
  Permutation p_part;       ///< order a power of p
  Permutation p_prime_part; ///< order coprime to p
};

/// Splits x = x_p x_p' into commuting p- and p'-parts. With |x| = p^e q,
/// x_p = x^(q * (q^-1 mod p^e)).
inline ElementDecomposition p_part(const Permutation& x, std::uint64_t p) {
  std::uint64_t order = x.order();
  std::uint64_t pe = p_part_of(order, p);
  std::uint64_t q = order / pe;
  auto k = static_cast<long long>(q) *
           inverse_mod(static_cast<std::int64_t>(q % pe), static_cast<std::int64_t>(pe));
  Permutation xp = x.pow(k);
  return {x, xp, x * xp.inverse()};
}

inline ElemId p_part_id(const FiniteGroup& g, ElemId x, std::uint64_t p) {
  std::uint64_t order = g.element_order(x);
  std::uint64_t pe = p_part_of(order, p);
  std::uint64_t q = order / pe;
  auto k = static_cast<long long>(q) *
           inverse_mod(static_cast<std::int64_t>(q % pe), static_cast<std::int64_t>(pe));
  return g.pow(x, k);
}

/// The set product A B, which must be a subgroup.
inline Subgroup product_subgroup(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.group();
  boost::dynamic_bitset<> mask(g.order());
  for (ElemId x : a.elements())
    for (ElemId y : b.elements())
      mask.set(g.mul(x, y));
  std::vector<ElemId> elems;
  for (auto i = mask.find_first(); i != mask.npos; i = mask.find_next(i))
    elems.push_back(static_cast<ElemId>(i));
  for (ElemId x : elems)
    for (ElemId y : elems)
      if (!mask.test(g.mul(x, y)))
        throw AlgorithmError("product set is not a subgroup");
  std::vector<ElemId> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::from_closed_set(g, std::move(elems), std::move(gens));
}

inline QuotientGroup quotient(const Subgroup& n, const Subgroup& k) {
  return QuotientGroup(n, k);
}

enum class AutomizerKind {
  full,            ///< N(P) / C(P), the automizer Aut(P)
  modulo_subgroup, ///< N(P) / P C(P)
};

/// The automizer of P computed inside `within`.
inline QuotientGroup automizer(const Subgroup& within, const Subgroup& p,
                               AutomizerKind kind = AutomizerKind::full) {
  Subgroup n = normalizer(within, p);
  Subgroup c = centralizer(within, p);
  if (kind == AutomizerKind::full)
    return QuotientGroup(std::move(n), std::move(c));
  return QuotientGroup(std::move(n), with_small_generators(product_subgroup(p, c)));
}

inline QuotientGroup automizer(const FiniteGroup& g, const Subgroup& p,
                               AutomizerKind kind = AutomizerKind::full) {
  return automizer(whole_group(g), p, kind);
}

struct GroupShape {
  enum class Kind { cyclic, klein_four, dihedral8, quaternion8, other } kind = Kind::other;
  std::size_t order = 0;

  std::string name() const {
    switch (kind) {
    case Kind::cyclic: return "cyclic " + std::to_string(order);
    case Kind::klein_four: return "klein-four";
    case Kind::dihedral8: return "dihedral 8";
    case Kind::quaternion8: return "quaternion 8";
    default: return "other";
    }
  }
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

inline constexpr std::size_t shape_order_bound = 16;

/// Classifies a group of order at most 16 by its element-order census.
inline GroupShape small_group_shape(const TableGroup& q) {
  const std::size_t n = q.order();
  if (n > shape_order_bound)
    throw InputError("small_group_shape: order " + std::to_string(n) + " exceeds 16");
  std::map<std::uint32_t, std::size_t> census;
  for (std::uint32_t x = 0; x < n; ++x)
    ++census[q.element_order(x)];
  if (census.contains(static_cast<std::uint32_t>(n)))
    return {GroupShape::Kind::cyclic, n};
  if (n == 4 && census[2] == 3)
    return {GroupShape::Kind::klein_four, n};
  if (n == 8 && census[2] == 5 && census[4] == 2)
    return {GroupShape::Kind::dihedral8, n};
  if (n == 8 && census[2] == 1 && census[4] == 6)
    return {GroupShape::Kind::quaternion8, n};
  return {GroupShape::Kind::other, n};
}

inline GroupShape small_group_shape(const QuotientGroup& q) { return small_group_shape(q.table()); }
inline GroupShape small_group_shape(const Subgroup& h) { return small_group_shape(table_of(h)); }

/// Dihedral of order 2^n, n >= 2: a cyclic subgroup X of index 2 and an
/// involution t outside it inverting a generator of X.
inline bool is_dihedral_2group(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  const std::size_t n = s.order();
  if (n < 4 || !is_power_of(n, 2))
    return false;
  if (n == 4)
    return !is_cyclic(s);
  for (ElemId x : s.elements()) {
    if (g.element_order(x) != n / 2)
      continue;
    Subgroup cyc = generate(g, {x});
    for (ElemId t : s.elements())
      if (!cyc.contains(t) && g.element_order(t) == 2 && g.conj(t, x) == g.inv(x))
        return true;
    return false;
  }
  return false;
}

} // namespace lefschetz

#endif // LEFSCHETZ_STRUCTURE_HPP
