#ifndef LEFSCHETZ_DIHEDRAL_TABLES_HPP
#define LEFSCHETZ_DIHEDRAL_TABLES_HPP

// Borel-Smith and unit tables of a dihedral 2-group, laid out on the named
// columns 1, K1, K2, C2, H1, H2, C, D.

#include <lefschetz/burnside_units.hpp>
#include <lefschetz/named_groups.hpp>

namespace lefschetz {

struct DihedralColumn {
  std::string name;
  std::size_t class_index = 0;
};

/// Named columns of an S-scope table over a dihedral 2-group S of order
/// >= 8: K1, K2 the non-central involution classes, H_i the Klein four
/// subgroup of index 2 over K_i, C the cyclic subgroup of index 2.
inline std::vector<DihedralColumn> dihedral_columns(const ClassTable& st) {
  const SubgroupLattice& lat = st.lattice();
  const Subgroup& s = lat.sylow();
  const std::size_t n = s.order();
  if (!is_dihedral_2group(s) || n < 8)
    throw InputError("dihedral_columns: Sylow subgroup is not dihedral of order >= 8");
  std::optional<std::size_t> one, centre, cyclic, whole;
  std::vector<std::size_t> ks, hs;
  for (std::size_t c = 0; c < st.size(); ++c) {
    const Subgroup& h = st.rep(c);
    if (h.order() == 1)
      one = c;
    else if (h.order() == 2 && centralizes(h.generators().front(), s))
      centre = c;
    else if (h.order() == 2)
      ks.push_back(c);
    else if (h.order() * 2 == n && st.is_cyclic(c))
      cyclic = c;
    else if (h.order() * 2 == n)
      hs.push_back(c);
    else if (h.order() == n)
      whole = c;
  }
  if (!one || !centre || !cyclic || !whole || ks.size() != 2 || hs.size() != 2)
    throw AlgorithmError("dihedral_columns: unexpected class structure");
  std::vector<std::size_t> over(2);
  for (std::size_t i = 0; i < 2; ++i) {
    const Subgroup& k = st.rep(ks[i]);
    auto it = std::find_if(hs.begin(), hs.end(), [&](std::size_t h) {
      for (std::size_t m : st.members(h))
        if (k.is_subgroup_of(lat[m]))
          return true;
      return false;
    });
    if (it == hs.end())
      throw AlgorithmError("dihedral_columns: no index-two subgroup over an involution");
    over[i] = *it;
  }
  return {{"1", *one},      {"K1", ks[0]},    {"K2", ks[1]},   {"C2", *centre},
          {"H1", over[0]},  {"H2", over[1]},  {"C", *cyclic},  {"D", *whole}};
}

struct NamedTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<IntVector> rows;

  std::string to_text() const {
    std::string s = "# " + title + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      s += (i ? " " : "") + columns[i];
    s += "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? " " : "") + r[i].str();
      s += "\n";
    }
    return s;
  }
};

namespace detail {

inline NamedTable project_rows(std::string title, const std::vector<DihedralColumn>& cols,
                               const std::vector<IntVector>& rows, std::size_t shown) {
  NamedTable t{std::move(title), {}, {}};
  for (std::size_t i = 0; i < shown; ++i)
    t.columns.push_back(cols[i].name);
  for (const auto& r : rows) {
    IntVector v;
    for (std::size_t i = 0; i < shown; ++i)
      v.push_back(r[cols[i].class_index]);
    t.rows.push_back(std::move(v));
  }
  return t;
}

inline std::size_t dihedral_exponent(std::size_t n) {
  if (n < 3 || n > 10)
    throw InputError("dihedral tables need 3 <= n <= 10, got " + std::to_string(n));
  return std::size_t{1} << n;
}

} // namespace detail

/// Z-basis of CF_b(D_{2^n}). For n > 3 only the columns of subgroups of
/// order at most 2 are kept.
inline NamedTable dihedral_borel_smith_table(std::size_t n) {
  auto t = p_subgroup_classes(dihedral_group(detail::dihedral_exponent(n)), 2);
  auto st = t.table_ptr(ClassScope::sylow);
  auto cols = dihedral_columns(*st);
  auto lattice = borel_smith_basis(st);
  return detail::project_rows("Borel-Smith functions on D" + std::to_string(std::size_t{1} << n), cols,
                              lattice.basis(), n == 3 ? cols.size() : 4);
}

/// F_2-basis of the unit group of B(D_{2^n}) read through marks, as signs.
inline NamedTable dihedral_units_table(std::size_t n) {
  auto t = p_subgroup_classes(dihedral_group(detail::dihedral_exponent(n)), 2);
  auto cols = dihedral_columns(*t.table_ptr(ClassScope::sylow));
  std::vector<IntVector> rows;
  for (const auto& b : unit_group_of_p_group(t).basis()) {
    IntVector v;
    for (std::size_t c = 0; c < b.size(); ++c)
      v.push_back(b[c] ? -1 : 1);
    rows.push_back(std::move(v));
  }
  return detail::project_rows("Burnside ring units of D" + std::to_string(std::size_t{1} << n), cols, rows,
                              n == 3 ? cols.size() : 4);
}

/// cfb-d8, units-d8, cfb-d2n:N, units-d2n:N.
inline NamedTable named_table(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::size_t n = 3;
  if (head == "cfb-d2n" || head == "units-d2n") {
    if (colon == std::string::npos)
      throw InputError("table " + head + " needs a parameter, e.g. " + head + ":4");
    try {
      std::size_t used = 0;
      n = std::stoul(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1)
        throw InputError("bad table parameter in \"" + name + "\"");
    } catch (const std::logic_error&) {
      throw InputError("bad table parameter in \"" + name + "\"");
    }
    if (n < 4)
      throw InputError("table " + head + " needs n >= 4");
  } else if ((head != "cfb-d8" && head != "units-d8") || colon != std::string::npos) {
    throw InputError("unknown table: " + name);
  }
  if (head.starts_with("cfb"))
    return dihedral_borel_smith_table(n);
  return dihedral_units_table(n);
}

} // namespace lefschetz

#endif // LEFSCHETZ_DIHEDRAL_TABLES_HPP
