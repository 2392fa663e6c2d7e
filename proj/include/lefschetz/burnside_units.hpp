#ifndef LEFSCHETZ_BURNSIDE_UNITS_HPP
#define LEFSCHETZ_BURNSIDE_UNITS_HPP

// Sign spaces over the two-element field: the unit group of the Burnside
// ring of a p-group read through its marks, its G-stable part, and the
// p = 2 surjectivity test.

#include <lefschetz/borel_smith.hpp>

namespace lefschetz {

using Bits = boost::dynamic_bitset<>;

namespace detail {

/// Reduced row echelon form over F_2; returns the nonzero rows.
inline std::vector<Bits> rref(std::vector<Bits> rows, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !rows[piv][c])
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        rows[i] ^= rows[r];
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Some x with sum x_i gens_i = target, if one exists.
inline std::optional<Bits> solve_f2(const std::vector<Bits>& gens, const Bits& target) {
  const std::size_t k = gens.size();
  // Augment each generator with its own index bit to track combinations.
  std::vector<Bits> rows;
  const std::size_t width = target.size();
  for (std::size_t i = 0; i < k; ++i) {
    Bits row(width + k);
    for (std::size_t c = 0; c < width; ++c)
      row[c] = gens[i][c];
    row[width + i] = true;
    rows.push_back(std::move(row));
  }
  rows = rref(std::move(rows), width);
  Bits rest(width + k);
  for (std::size_t c = 0; c < width; ++c)
    rest[c] = target[c];
  for (const auto& row : rows) {
    std::size_t lead = row.find_first();
    if (lead < width && rest[lead])
      rest ^= row;
  }
  for (std::size_t c = 0; c < width; ++c)
    if (rest[c])
      return std::nullopt;
  Bits x(k);
  for (std::size_t i = 0; i < k; ++i)
    x[i] = rest[width + i];
  return x;
}

/// Basis of {x : M x = 0} over F_2 for rows of width n.
inline std::vector<Bits> kernel_f2(const std::vector<Bits>& m, std::size_t n) {
  auto rows = rref(m, n);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : rows) {
    std::size_t lead = row.find_first();
    pivots.push_back(lead);
    is_pivot[lead] = true;
  }
  std::vector<Bits> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Bits x(n);
    x[free] = true;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][free])
        x[pivots[i]] = true;
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace detail

/// A subspace of F_2^classes, kept in reduced row echelon form.
class SignSpace {
public:
  SignSpace() = default;
  SignSpace(TablePtr table, std::vector<Bits> generators)
      : table_(std::move(table)), basis_(detail::rref(std::move(generators), table_->size())) {}

  const ClassTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Bits>& basis() const& { return basis_; }
  std::vector<Bits> basis() && { return std::move(basis_); }

  bool contains(const Bits& v) const { return detail::solve_f2(basis_, v).has_value(); }

  bool contains(const SignSpace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v))
        return false;
    return true;
  }

  friend bool operator==(const SignSpace& a, const SignSpace& b) {
    return a.table_ == b.table_ && a.basis_ == b.basis_;
  }

  /// Rows of +-1 under the class header.
  std::string to_text() const {
    std::string s = table_header(*table_) + "\n";
    for (const auto& row : basis_) {
      for (std::size_t c = 0; c < row.size(); ++c)
        s += std::string(c ? " " : "") + (row[c] ? "-1" : "1");
      s += "\n";
    }
    return s;
  }

private:
  TablePtr table_;
  std::vector<Bits> basis_;
};

/// B(S)^x for the Sylow subgroup of `t`, on S-classes. For p = 2 this is the
/// span of dim(f) over a basis of CF_b(S); for odd p it is {+1, -1}.
inline SignSpace unit_group_of_p_group(const SubgroupClassTable& t) {
  TablePtr st = t.table_ptr(ClassScope::sylow);
  if (t.prime() != 2) {
    Bits all(st->size());
    all.set();
    return SignSpace(st, {all});
  }
  std::vector<Bits> gens;
  for (const auto& f : lattice_functions<SylowScope>(borel_smith_basis(st), st))
    gens.push_back(dim_function(f).bits());
  SignSpace out(st, std::move(gens));
  if (out.dimension() > st->cyclic_count())
    throw AlgorithmError("unit space larger than the Borel-Smith rank");
  return out;
}

/// Overload for a p-group given as a group in its own right.
inline SignSpace unit_group_of_p_group(const FiniteGroup& s, std::uint64_t p) {
  if (!is_prime(p) || !is_power_of(s.order(), p))
    throw InputError("unit_group_of_p_group: group of order " + std::to_string(s.order()) +
                     " is not a " + std::to_string(p) + "-group");
  return unit_group_of_p_group(p_subgroup_classes(s, p));
}

/// The sign vectors in `space` that are constant on every class of `g_table`.
inline SignSpace stable_sign_subspace(const SignSpace& space, const ClassTable& g_table) {
  const ClassTable& st = space.table();
  const auto& basis = space.basis();
  const std::size_t d = basis.size();
  std::vector<std::optional<std::size_t>> first(g_table.size());
  std::vector<Bits> constraints;
  for (std::size_t c = 0; c < st.size(); ++c) {
    std::size_t gc = g_table.class_of(st.rep_index(c));
    if (!first[gc]) {
      first[gc] = c;
      continue;
    }
    Bits row(d);
    for (std::size_t i = 0; i < d; ++i)
      row[i] = basis[i][*first[gc]] != basis[i][c];
    if (row.any())
      constraints.push_back(std::move(row));
  }
  std::vector<Bits> out;
  for (const auto& x : detail::kernel_f2(constraints, d)) {
    Bits v(st.size());
    for (std::size_t i = 0; i < d; ++i)
      if (x[i])
        v ^= basis[i];
    out.push_back(std::move(v));
  }
  return SignSpace(space.table_ptr(), std::move(out));
}

/// dim of a G-stable function, read on S-classes.
inline Bits sylow_bits(const SuperclassFunction& f, const ClassTable& st) {
  Bits b(st.size());
  for (std::size_t c = 0; c < st.size(); ++c)
    b[c] = (f.at_subgroup(st.rep_index(c)) % 2) != 0;
  return b;
}

/// Lifts a G-stable sign function to a G-stable Borel-Smith function f with
/// dim(f) = u. Solves over F_2 in a basis of CF_b(G, 2); when that fails and
/// N_G(S) controls fusion, solves at the Sylow level and traces.
inline SuperclassFunction lift_unit(const SignFunction& u, const SubgroupClassTable& t) {
  TablePtr gt = t.table_ptr(ClassScope::group);
  if (u.table_ptr() != gt)
    throw InputError("lift_unit: sign function is not on this group's class table");
  auto basis = lattice_functions<GroupScope>(borel_smith_basis(gt), gt);
  std::vector<Bits> dims;
  for (const auto& f : basis)
    dims.push_back(dim_function(f).bits());
  if (auto x = detail::solve_f2(dims, u.bits())) {
    auto f = SuperclassFunction::constant(gt, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((*x)[i])
        f = f + basis[i];
    return f;
  }
  const Subgroup& s = t.sylow();
  if (!s.is_trivial() && controls_fusion(t.group(), t.scope(ClassScope::normalizer).acting(), s)) {
    TablePtr st = t.table_ptr(ClassScope::sylow);
    auto sbasis = lattice_functions<SylowScope>(borel_smith_basis(st), st);
    std::vector<Bits> sdims;
    for (const auto& f : sbasis)
      sdims.push_back(dim_function(f).bits());
    Bits target = restrict_signs<SylowScope>(u, st).bits();
    if (auto x = detail::solve_f2(sdims, target)) {
      auto f = SylowLevelFunction::constant(st, 0);
      for (std::size_t i = 0; i < sbasis.size(); ++i)
        if ((*x)[i])
          f = f + sbasis[i];
      auto lifted = to_superclass(trace_to_stable(f, t), gt);
      if (dim_function(lifted) == u)
        return lifted;
    }
  }
  throw InputError("no lift: sign function is not in the image of dim");
}

struct P2Surjectivity {
  bool surjective = false;
  SignSpace image;  ///< dim(CF_b(G, 2)) on S-classes
  SignSpace stable; ///< G-stable part of B(S)^x
  std::vector<SuperclassFunction> preimages; ///< one per basis vector of `stable`, when surjective
  std::optional<Bits> missing;               ///< a stable unit outside the image otherwise
};

inline P2Surjectivity p2_surjectivity(const SubgroupClassTable& t) {
  if (t.prime() != 2)
    throw InputError("p2_surjectivity: prime must be 2");
  TablePtr st = t.table_ptr(ClassScope::sylow);
  TablePtr gt = t.table_ptr(ClassScope::group);
  P2Surjectivity out;
  std::vector<Bits> image;
  for (const auto& f : lattice_functions<GroupScope>(borel_smith_basis(gt), gt))
    image.push_back(sylow_bits(f, *st));
  out.image = SignSpace(st, std::move(image));
  out.stable = stable_sign_subspace(unit_group_of_p_group(t), *gt);
  if (!out.stable.contains(out.image))
    throw AlgorithmError("dim of a stable Borel-Smith function is not a stable unit");
  out.surjective = out.image == out.stable;
  if (!out.surjective) {
    for (const auto& v : out.stable.basis())
      if (!out.image.contains(v)) {
        out.missing = v;
        break;
      }
    return out;
  }
  for (const auto& v : out.stable.basis()) {
    Bits g(gt->size());
    for (std::size_t c = 0; c < gt->size(); ++c)
      g[c] = v[st->class_of(gt->rep_index(c))];
    out.preimages.push_back(lift_unit(SignFunction(gt, g), t));
  }
  return out;
}

inline P2Surjectivity p2_surjectivity(const FiniteGroup& g) {
  return p2_surjectivity(p_subgroup_classes(g, 2));
}

} // namespace lefschetz

#endif // LEFSCHETZ_BURNSIDE_UNITS_HPP
