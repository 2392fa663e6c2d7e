#ifndef LEFSCHETZ_CHAR_TUPLES_HPP
#define LEFSCHETZ_CHAR_TUPLES_HPP

// Tuples of characters N_G(P)/P C_G(P) -> C_m, one per G-class of
// p-subgroups, subject to the coherence identities, and the abelian group
// they form.

#include <lefschetz/abelian.hpp>
#include <lefschetz/classes.hpp>
#include <lefschetz/lattice.hpp>
#include <lefschetz/superclass.hpp>

#include <set>

namespace lefschetz {

/// Hom(N_G(P)/P C_G(P), C_m) for the representative P of one G-class.
struct TupleComponent {
  std::size_t class_index = 0;
  QuotientGroup automizer; ///< N_G(P) / P C_G(P)
  CharacterGroup characters;
  std::size_t offset = 0; ///< first coordinate of this component in a tuple
};

inline std::vector<TupleComponent> tuple_components(const SubgroupClassTable& t, std::uint64_t m) {
  if (m == 0)
    throw InputError("unit order must be positive");
  std::vector<TupleComponent> out;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    Subgroup pc = with_small_generators(product_subgroup(t.rep(c), t.centralizer_of(c)));
    QuotientGroup q(t.normalizer_of(c), std::move(pc));
    CharacterGroup chars(q.table(), m);
    const std::size_t n = chars.factor_count();
    out.push_back({c, std::move(q), std::move(chars), offset});
    offset += n;
  }
  return out;
}

/// phi_P(x) = phi_Q(y) where P is a class representative, x in N_G(P) with
/// p-part outside P, Q = rep of P<x_p>, and y = g x g^-1 for the g taking
/// P<x_p> to Q. The row is in tuple coordinates, modulo m.
struct CoherenceConstraint {
  std::size_t p_class = 0;
  std::size_t q_class = 0;
  ElemId x = 0;
  ElemId y = 0;
  LinearRow row;
};

inline std::vector<CoherenceConstraint> coherence_constraints(const SubgroupClassTable& t,
                                                              const std::vector<TupleComponent>& comps,
                                                              std::uint64_t m) {
  const FiniteGroup& g = t.group();
  std::size_t width = 0;
  for (const auto& c : comps)
    width += c.characters.factor_count();
  std::vector<CoherenceConstraint> out;
  std::set<IntVector> seen;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const Subgroup& p = t.rep(c);
    const TupleComponent& pc = comps[c];
    for (ElemId x : t.normalizer_of(c).elements()) {
      ElemId xp = p_part_id(g, x, t.prime());
      if (p.contains(xp))
        continue;
      auto gens = p.generators();
      gens.push_back(xp);
      auto [d, h] = t.locate(generate(g, gens));
      ElemId y = g.conj(h, x);
      const TupleComponent& qc = comps[d];
      LinearRow row{IntVector(width, 0), Integer(m)};
      for (std::size_t j = 0; j < pc.characters.factor_count(); ++j)
        row.coeff[pc.offset + j] += pc.characters.weight(pc.automizer.coset_index(x), j);
      for (std::size_t j = 0; j < qc.characters.factor_count(); ++j)
        row.coeff[qc.offset + j] -= qc.characters.weight(qc.automizer.coset_index(y), j);
      bool nonzero = false;
      for (auto& v : row.coeff) {
        v = mod_floor(v, row.modulus);
        nonzero = nonzero || v != 0;
      }
      if (!nonzero || !seen.insert(row.coeff).second)
        continue;
      out.push_back({c, d, x, y, std::move(row)});
    }
  }
  return out;
}

inline std::vector<CoherenceConstraint> coherence_constraints(const SubgroupClassTable& t, std::uint64_t m) {
  return coherence_constraints(t, tuple_components(t, m), m);
}

/// R_{G,m}: coherent, G-stable character tuples. A tuple is a vector of
/// character coordinates, component after component; coordinate j of a
/// component lies in Z/o_j with o_j its factor order.
class TupleGroup {
public:
  TupleGroup(const SubgroupClassTable& t, std::uint64_t m)
      : m_(m), components_(tuple_components(t, m)), constraints_(coherence_constraints(t, components_, m)) {
    for (const auto& c : components_)
      for (const auto& o : c.characters.factor_orders())
        orders_.push_back(o);
    const std::size_t n = orders_.size();
    std::vector<LinearRow> rows;
    for (const auto& c : constraints_)
      rows.push_back(c.row);
    solutions_ = solve_mixed_system(rows, n);
    // The group is solutions modulo the tuples that are zero coordinatewise.
    IntMatrix relations;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector v(n, 0);
      v[i] = orders_[i];
      auto z = solutions_.coordinates(v);
      if (!z)
        throw AlgorithmError("tuple group: trivial tuple violates a coherence row");
      relations.push_back(std::move(*z));
    }
    relations_ = relations;
    group_ = FiniteAbelianGroup(n, std::move(relations));
    for (std::size_t i = 0; i < group_.invariant_factors().size(); ++i)
      basis_.push_back(reduce(multiply(group_.generator(i), solutions_.basis())));
  }

  std::uint64_t unit_order() const { return m_; }
  const std::vector<TupleComponent>& components() const { return components_; }
  const std::vector<CoherenceConstraint>& constraints() const { return constraints_; }
  /// Orders of the tuple coordinates.
  const std::vector<Integer>& coordinate_orders() const { return orders_; }
  std::size_t width() const { return orders_.size(); }

  const FiniteAbelianGroup& group() const { return group_; }
  Integer order() const { return group_.order(); }
  /// One tuple per invariant factor, generating the group.
  const std::vector<IntVector>& basis() const { return basis_; }

  /// Product of the component orders.
  Integer ambient_order() const {
    Integer n = 1;
    for (const auto& o : orders_)
      n *= o;
    return n;
  }

  bool contains(const IntVector& tuple) const {
    check_width(tuple);
    for (const auto& c : constraints_) {
      Integer v = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i)
        v += c.row.coeff[i] * tuple[i];
      if (mod_floor(v, c.row.modulus) != 0)
        return false;
    }
    return true;
  }

  /// Coordinates in group() of a tuple in the group.
  IntVector coordinates(const IntVector& tuple) const {
    auto z = lift(tuple);
    return group_.coordinates(z);
  }

  /// Minimal generator count of the group modulo the subgroup generated by
  /// `tuple`; one less than min_generators exactly when the tuple can be
  /// part of a minimal generating set.
  std::size_t quotient_min_generators(const IntVector& tuple) const {
    IntMatrix rel = relations_;
    rel.push_back(lift(tuple));
    return FiniteAbelianGroup(width(), std::move(rel)).invariant_factors().size();
  }

  /// The coordinates of `tuple` belonging to component c.
  IntVector component_values(const IntVector& tuple, std::size_t c) const {
    const auto& comp = components_.at(c);
    return IntVector(tuple.begin() + comp.offset,
                     tuple.begin() + comp.offset + comp.characters.factor_count());
  }

  /// Value in Z/m of the c-th character of `tuple` at x in N_G(P_c).
  Integer evaluate(const IntVector& tuple, std::size_t c, ElemId x) const {
    const auto& comp = components_.at(c);
    return comp.characters.evaluate(component_values(tuple, c), comp.automizer.coset_index(x));
  }

  std::string to_text(const ClassTable& classes) const {
    std::string s = "# unit order " + std::to_string(m_) + "\n";
    for (const auto& c : components_)
      s += "component " + class_label(classes, c.class_index) + ": " +
           c.characters.as_abelian_group().structure() + "\n";
    s += "constraints " + std::to_string(constraints_.size()) + "\n";
    s += "group " + group_.structure() + "\n";
    for (const auto& b : basis_) {
      s += "tuple";
      for (const auto& v : b)
        s += " " + v.str();
      s += "\n";
    }
    return s;
  }

private:
  void check_width(const IntVector& tuple) const {
    if (tuple.size() != width())
      throw InputError("tuple has " + std::to_string(tuple.size()) + " coordinates, expected " +
                       std::to_string(width()));
  }

  IntVector reduce(IntVector v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = mod_floor(v[i], orders_[i]);
    return v;
  }

  IntVector lift(const IntVector& tuple) const {
    check_width(tuple);
    auto z = solutions_.coordinates(reduce(tuple));
    if (!z)
      throw InputError("tuple is not coherent");
    return *z;
  }

  std::uint64_t m_;
  std::vector<TupleComponent> components_;
  std::vector<CoherenceConstraint> constraints_;
  std::vector<Integer> orders_;
  IntegerLattice solutions_;
  IntMatrix relations_;
  FiniteAbelianGroup group_;
  std::vector<IntVector> basis_;
};

inline TupleGroup reduced_tuple_group(const SubgroupClassTable& t, std::uint64_t m) {
  if (t.prime() == 2)
    throw InputError("reduced_tuple_group: the prime must be odd");
  return TupleGroup(t, m);
}

inline TupleGroup reduced_tuple_group(const FiniteGroup& g, std::uint64_t p, std::uint64_t m) {
  return reduced_tuple_group(p_subgroup_classes(g, p), m);
}

inline std::size_t min_generators(const TupleGroup& r) { return min_generators(r.group()); }

} // namespace lefschetz

#endif // LEFSCHETZ_CHAR_TUPLES_HPP
