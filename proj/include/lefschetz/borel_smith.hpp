#ifndef LEFSCHETZ_BOREL_SMITH_HPP
#define LEFSCHETZ_BOREL_SMITH_HPP

// Borel-Smith conditions on functions of p-subgroup classes, the lattice of
// Borel-Smith functions, diagonal bases, extension from cyclic subgroups and
// the trace over N_G(S)/S.

#include <lefschetz/superclass.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>

namespace lefschetz {

using Rational = boost::multiprecision::cpp_rational;

enum class BSCondition {
  parity,     ///< odd p: f(R) = f(Q) mod 2 for [Q:R] = p
  involution, ///< p = 2: f(K) = f(H) mod 2 or 4 below a C4 or Q8 section
  rank_two,   ///< Q/R elementary abelian of rank 2
};

inline std::string condition_name(BSCondition c) {
  switch (c) {
  case BSCondition::parity: return "a";
  case BSCondition::involution: return "b";
  default: return "c";
  }
}

/// One row of the system with the subgroups of S (lattice indices) that
/// produced it: (R, Q) for parity and rank-two rows, (H, K, L) for
/// involution rows.
struct BSRow {
  BSCondition condition;
  LinearRow row;
  std::vector<std::size_t> chain;
};

struct BSConstraintSystem {
  TablePtr table;
  std::vector<BSRow> rows;

  std::size_t equality_count() const {
    std::size_t n = 0;
    for (const auto& r : rows)
      n += r.row.modulus == 0;
    return n;
  }
  std::size_t congruence_count() const { return rows.size() - equality_count(); }

  std::vector<LinearRow> linear_rows() const {
    std::vector<LinearRow> out;
    for (const auto& r : rows)
      out.push_back(r.row);
    return out;
  }

  std::string describe(const BSRow& r) const {
    const SubgroupLattice& lat = table->lattice();
    std::string s = "(" + condition_name(r.condition) + ")";
    for (std::size_t i : r.chain) {
      const Subgroup& h = lat[i];
      s += " [" + class_label(*table, table->class_of(i)) + " order " + std::to_string(h.order()) + "]";
    }
    s += " :";
    for (std::size_t c = 0; c < r.row.coeff.size(); ++c)
      if (r.row.coeff[c] != 0)
        s += " " + r.row.coeff[c].str() + "*f" + std::to_string(c);
    s += r.row.modulus == 0 ? " = 0" : " = 0 mod " + r.row.modulus.str();
    return s;
  }
};

namespace detail {

inline bool normalize_row(LinearRow& r) {
  bool nonzero = false;
  for (auto& x : r.coeff) {
    if (r.modulus != 0)
      x = mod_floor(x, r.modulus);
    if (x != 0)
      nonzero = true;
  }
  if (!nonzero)
    return false;
  if (r.modulus == 0)
    for (const auto& x : r.coeff)
      if (x != 0) {
        if (x < 0)
          for (auto& y : r.coeff)
            y = -y;
        break;
      }
  return true;
}

} // namespace detail

/// Enumerates the Borel-Smith conditions over all chains of subgroups of S,
/// with variables the classes of `table`. Rows are deduplicated by their
/// coefficients; rows that vanish identically are dropped.
inline BSConstraintSystem build_constraints(TablePtr table) {
  BSConstraintSystem sys{table, {}};
  const SubgroupLattice& lat = table->lattice();
  const FiniteGroup& g = lat.sylow().group();
  const std::uint64_t p = lat.prime();
  const std::size_t n = table->size();
  std::set<std::pair<IntVector, Integer>> seen;

  auto emit = [&](BSCondition cond, LinearRow r, std::vector<std::size_t> chain) {
    if (!detail::normalize_row(r))
      return;
    if (!seen.emplace(r.coeff, r.modulus).second)
      return;
    sys.rows.push_back({cond, std::move(r), std::move(chain)});
  };

  for (std::size_t q = 0; q < lat.size(); ++q) {
    const auto& maximal = lat.maximal_subgroups(q);
    if (p != 2)
      for (std::size_t r : maximal) {
        LinearRow row{IntVector(n, 0), 2};
        row.coeff[table->class_of(r)] += 1;
        row.coeff[table->class_of(q)] -= 1;
        emit(BSCondition::parity, std::move(row), {r, q});
      }
    std::set<std::vector<ElemId>> bottoms;
    for (std::size_t i = 0; i < maximal.size(); ++i)
      for (std::size_t j = i + 1; j < maximal.size(); ++j) {
        const Subgroup& m1 = lat[maximal[i]];
        const Subgroup& m2 = lat[maximal[j]];
        std::vector<ElemId> meet;
        std::set_intersection(m1.elements().begin(), m1.elements().end(), m2.elements().begin(),
                              m2.elements().end(), std::back_inserter(meet));
        if (!bottoms.insert(meet).second)
          continue;
        std::size_t r = lat.index_of(Subgroup::from_closed_set(g, meet, meet));
        LinearRow row{IntVector(n, 0), 0};
        row.coeff[table->class_of(r)] += 1;
        row.coeff[table->class_of(q)] += static_cast<long long>(p);
        std::size_t between = 0;
        for (std::size_t x : maximal)
          if (lat[r].is_subgroup_of(lat[x])) {
            row.coeff[table->class_of(x)] -= 1;
            ++between;
          }
        if (between != p + 1)
          throw AlgorithmError("rank-two section with " + std::to_string(between) +
                               " intermediate subgroups");
        emit(BSCondition::rank_two, std::move(row), {r, q});
      }
  }

  if (p == 2) {
    for (std::size_t h = 0; h < lat.size(); ++h)
      for (std::size_t l = h + 1; l < lat.size(); ++l) {
        const Subgroup& hs = lat[h];
        const Subgroup& ls = lat[l];
        const std::size_t index = ls.order() / hs.order();
        if ((index != 4 && index != 8) || !hs.is_subgroup_of(ls) || !is_normal_in(hs, ls))
          continue;
        QuotientGroup quot(ls, hs);
        GroupShape shape = small_group_shape(quot);
        Integer modulus;
        if (shape.kind == GroupShape::Kind::cyclic && shape.order == 4)
          modulus = 2;
        else if (shape.kind == GroupShape::Kind::quaternion8)
          modulus = 4;
        else
          continue;
        // K/H is the unique subgroup of order 2 in L/H.
        std::optional<std::size_t> k;
        for (ElemId x : ls.elements())
          if (!hs.contains(x) && quot.table().element_order(quot.coset_index(x)) == 2) {
            auto gens = hs.generators();
            gens.push_back(x);
            k = lat.index_of(generate(g, gens));
            break;
          }
        LinearRow row{IntVector(n, 0), modulus};
        row.coeff[table->class_of(*k)] += 1;
        row.coeff[table->class_of(h)] -= 1;
        emit(BSCondition::involution, std::move(row), {h, *k, l});
      }
  }
  return sys;
}

struct BSViolation {
  BSRow row;
  Integer value;
  std::string description;
};

struct BSCheck {
  std::vector<BSViolation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

inline BSCheck check_borel_smith(const BSConstraintSystem& sys, const IntVector& values) {
  if (values.size() != sys.table->size())
    throw InputError("check_borel_smith: function does not match the constraint system");
  BSCheck out;
  for (const auto& r : sys.rows) {
    Integer v = 0;
    for (std::size_t c = 0; c < values.size(); ++c)
      v += r.row.coeff[c] * values[c];
    bool holds = r.row.modulus == 0 ? v == 0 : mod_floor(v, r.row.modulus) == 0;
    if (!holds)
      out.violations.push_back({r, v, sys.describe(r)});
  }
  return out;
}

template <class Scope>
BSCheck check_borel_smith(const ClassFunction<Scope>& f) {
  return check_borel_smith(build_constraints(f.table_ptr()), f.values());
}

/// The lattice of Borel-Smith functions on the classes of `table`, in Hermite
/// normal form. Its rank must equal the number of cyclic classes.
inline IntegerLattice borel_smith_basis(const BSConstraintSystem& sys) {
  IntegerLattice lattice = solve_mixed_system(sys.linear_rows(), sys.table->size());
  if (lattice.rank() != sys.table->cyclic_count())
    throw AlgorithmError("Borel-Smith lattice has rank " + std::to_string(lattice.rank()) +
                         " but there are " + std::to_string(sys.table->cyclic_count()) +
                         " cyclic classes");
  return lattice;
}

inline IntegerLattice borel_smith_basis(TablePtr table) {
  return borel_smith_basis(build_constraints(std::move(table)));
}

inline IntegerLattice borel_smith_basis(const SubgroupClassTable& t, ClassScope scope) {
  return borel_smith_basis(t.table_ptr(scope));
}

inline IntegerLattice borel_smith_basis(const FiniteGroup& g, std::uint64_t p, ClassScope scope) {
  return borel_smith_basis(p_subgroup_classes(g, p), scope);
}

template <class Scope>
std::vector<ClassFunction<Scope>> lattice_functions(const IntegerLattice& l, TablePtr table) {
  std::vector<ClassFunction<Scope>> out;
  for (const auto& row : l.basis())
    out.emplace_back(table, row);
  return out;
}

/// Sum over coset representatives g of N_G(S)/S of f(g^-1 P g).
inline SylowLevelFunction trace_to_stable(const SylowLevelFunction& f, const SubgroupClassTable& t) {
  const ClassTable& st = f.table();
  if (&st.lattice() != &t.lattice())
    throw InputError("trace_to_stable: function is not on this group's Sylow lattice");
  const FiniteGroup& g = t.group();
  const Subgroup& s = t.sylow();
  const Subgroup& n = t.scope(ClassScope::normalizer).acting();
  boost::dynamic_bitset<> covered(g.order());
  IntVector out(st.size(), 0);
  for (ElemId x : n.elements()) {
    if (covered.test(x))
      continue;
    for (ElemId y : s.elements())
      covered.set(g.mul(x, y));
    ElemId xi = g.inv(x);
    for (std::size_t c = 0; c < st.size(); ++c)
      out[c] += f.at_subgroup(st.lattice().index_of(conjugate(st.rep(c), xi)));
  }
  return SylowLevelFunction(f.table_ptr(), std::move(out));
}

namespace detail {

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0)
      ++piv;
    if (piv == n)
      throw AlgorithmError("singular matrix on cyclic classes");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    Rational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0)
        continue;
      Rational k = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= k * a[c][j];
        inv[i][j] -= k * inv[c][j];
      }
    }
  }
  return inv;
}

} // namespace detail

/// G-stable Borel-Smith functions f_i, one per G-class of cyclic
/// p-subgroups, with f_i nonzero at the i-th cyclic class and zero at the
/// others. Built from the rational basis g_j of CF_b(S) dual to the cyclic
/// S-classes, summed over S-classes fused in G, then scaled to the least
/// multiple lying in the lattice.
inline std::vector<SuperclassFunction> diagonal_basis(const SubgroupClassTable& t) {
  TablePtr st = t.table_ptr(ClassScope::sylow);
  TablePtr gt = t.table_ptr(ClassScope::group);
  IntegerLattice lattice = borel_smith_basis(st);
  const auto cyc = st->cyclic_classes();
  const std::size_t r = cyc.size();
  detail::RatMatrix c(r, std::vector<Rational>(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j)
      c[k][j] = Rational(lattice.basis()[k][cyc[j]]);
  // With C = basis restricted to cyclic columns, g_j = sum_k (C^-1)_jk b_k.
  detail::RatMatrix cinv = detail::invert(c);
  std::vector<SuperclassFunction> out;
  for (std::size_t gc : gt->cyclic_classes()) {
    std::vector<Rational> coeff(r, 0);
    for (std::size_t j = 0; j < r; ++j)
      if (gt->class_of(st->rep_index(cyc[j])) == gc)
        for (std::size_t k = 0; k < r; ++k)
          coeff[k] += cinv[j][k];
    Integer scale = 1;
    for (const auto& q : coeff)
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
    IntVector values(st->size(), 0);
    for (std::size_t k = 0; k < r; ++k) {
      Integer a = boost::multiprecision::numerator(Rational(coeff[k] * scale));
      for (std::size_t x = 0; x < st->size(); ++x)
        values[x] += a * lattice.basis()[k][x];
    }
    out.push_back(to_superclass(SylowLevelFunction(st, std::move(values)), gt));
  }
  return out;
}

/// Recovers a Borel-Smith function on S from its values on the cyclic
/// S-classes (in the order of `cyclic_classes()`), solving
/// p f(Q) = sum_X f(X) - f(R) over every rank-two section R < Q in order of
/// subgroup size.
inline SylowLevelFunction extend_from_cyclics(TablePtr s_table, const IntVector& cyclic_values) {
  const ClassTable& st = *s_table;
  const SubgroupLattice& lat = st.lattice();
  const auto cyc = st.cyclic_classes();
  if (cyclic_values.size() != cyc.size())
    throw InputError("extend_from_cyclics: expected " + std::to_string(cyc.size()) +
                     " cyclic values");
  const Integer p = lat.prime();
  std::vector<std::optional<Integer>> value(lat.size());
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (std::size_t m : st.members(cyc[i]))
      value[m] = cyclic_values[i];
  for (std::size_t q = 0; q < lat.size(); ++q) {
    if (lat.is_cyclic(q))
      continue;
    const auto& maximal = lat.maximal_subgroups(q);
    std::optional<Integer> result;
    for (std::size_t i = 0; i < maximal.size(); ++i)
      for (std::size_t j = i + 1; j < maximal.size(); ++j) {
        const Subgroup& m1 = lat[maximal[i]];
        const Subgroup& m2 = lat[maximal[j]];
        std::vector<ElemId> meet;
        std::set_intersection(m1.elements().begin(), m1.elements().end(), m2.elements().begin(),
                              m2.elements().end(), std::back_inserter(meet));
        std::size_t r = lat.index_of(Subgroup::from_closed_set(lat.sylow().group(), meet, meet));
        Integer sum = -*value[r];
        for (std::size_t x : maximal)
          if (lat[r].is_subgroup_of(lat[x]))
            sum += *value[x];
        if (sum % p != 0)
          throw InputError("non-integral extension at a subgroup of order " +
                           std::to_string(lat[q].order()));
        Integer v = sum / p;
        if (result && *result != v)
          throw InputError("inconsistent extension at a subgroup of order " +
                           std::to_string(lat[q].order()));
        result = v;
      }
    value[q] = result;
  }
  IntVector out(st.size());
  for (std::size_t c = 0; c < st.size(); ++c) {
    out[c] = *value[st.rep_index(c)];
    for (std::size_t m : st.members(c))
      if (*value[m] != out[c])
        throw InputError("inconsistent extension: conjugate subgroups get different values");
  }
  return SylowLevelFunction(std::move(s_table), std::move(out));
}

/// Instance of the stability lemma for a Borel-Smith f: stability on cyclic
/// classes implies stability everywhere. Returns the full stability result.
inline StabilityResult stable_from_cyclics_check(const SylowLevelFunction& f, const ClassTable& g_table) {
  BSCheck bs = check_borel_smith(f);
  if (!bs)
    throw InputError("stable_from_cyclics_check: not a Borel-Smith function: " +
                     bs.violations.front().description);
  StabilityResult on_cyclics = is_G_stable_on_cyclics(f, g_table);
  StabilityResult full = is_G_stable(f, g_table);
  if (on_cyclics && !full)
    throw AlgorithmError("stable on cyclic classes but not G-stable");
  return full;
}

} // namespace lefschetz

#endif // LEFSCHETZ_BOREL_SMITH_HPP
