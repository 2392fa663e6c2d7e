#ifndef LEFSCHETZ_ABELIAN_HPP
#define LEFSCHETZ_ABELIAN_HPP

// Finite abelian groups Z^k / R in invariant-factor form, abelianizations
// of small table groups, and character groups Hom(A, C_m).

#include <lefschetz/lattice.hpp>
#include <lefschetz/table_group.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace lefschetz {

/// Z^k modulo a full-rank relation lattice, presented as
/// C_{d_1} x ... x C_{d_t} with d_1 | ... | d_t and every d_i > 1.
///
/// With U R V = D, a vector x in Z^k has coordinates (x V)_i mod d_i; the
/// i-th factor is generated by the image of row i of V^-1.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;

  /// The quotient of Z^k by the rows of `relations`.
  FiniteAbelianGroup(std::size_t k, IntMatrix relations) : k_(k) {
    SmithForm s = smith_normal_form(std::move(relations), k);
    if (s.rank != k)
      throw AlgorithmError("abelian group: relation lattice is not of full rank");
    for (std::size_t i = 0; i < k; ++i) {
      if (s.d[i][i] == 1)
        continue;
      factors_.push_back(s.d[i][i]);
      columns_.push_back(i);
    }
    v_ = std::move(s.v);
    v_inv_ = std::move(s.v_inv);
  }

  /// The product of cyclic groups of the given orders (1s allowed).
  static FiniteAbelianGroup from_cyclic_factors(const std::vector<Integer>& orders) {
    IntMatrix rel(orders.size(), IntVector(orders.size(), 0));
    for (std::size_t i = 0; i < orders.size(); ++i)
      rel[i][i] = orders[i];
    return FiniteAbelianGroup(orders.size(), std::move(rel));
  }

  /// Invariant factors d_1 | ... | d_t, all > 1.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t presentation_rank() const { return k_; }

  Integer order() const {
    Integer n = 1;
    for (const auto& d : factors_)
      n *= d;
    return n;
  }

  bool is_trivial() const { return factors_.empty(); }

  /// Coordinates of the image of x in Z^k, reduced into [0, d_i).
  IntVector coordinates(const IntVector& x) const {
    IntVector y = multiply(x, v_);
    IntVector out;
    out.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out.push_back(mod_floor(y[columns_[i]], factors_[i]));
    return out;
  }

  /// A preimage in Z^k of the i-th factor generator.
  IntVector generator(std::size_t i) const { return v_inv_[columns_.at(i)]; }

  /// A preimage in Z^k of the element with the given coordinates.
  IntVector element(const IntVector& coords) const {
    IntVector x(k_, 0);
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (std::size_t j = 0; j < k_; ++j)
        x[j] += coords[i] * v_inv_[columns_[i]][j];
    return x;
  }

  std::string structure() const {
    if (factors_.empty())
      return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      s += (i ? " x C" : "C") + factors_[i].str();
    return s;
  }

private:
  std::size_t k_ = 0;
  std::vector<Integer> factors_;
  std::vector<std::size_t> columns_;
  IntMatrix v_;
  IntMatrix v_inv_;
};

/// Minimal number of generators: the count of invariant factors.
inline std::size_t min_generators(const FiniteAbelianGroup& a) {
  return a.invariant_factors().size();
}

/// The abelianization of a table group, with the coordinates of every
/// element of the group in the invariant-factor presentation.
struct Abelianization {
  FiniteAbelianGroup group;
  std::vector<IntVector> coords; ///< per element of the table group
};

/// Computes Q/[Q,Q] from Schreier relations w(a) + e_i - w(a g_i), where
/// g_i is a generating set of Q and w a spanning-tree word map.
inline Abelianization abelianize(const TableGroup& q) {
  const std::uint32_t n = static_cast<std::uint32_t>(q.order());
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> covered{0};
  for (std::uint32_t x = 1; x < n && covered.size() < n; ++x) {
    if (std::binary_search(covered.begin(), covered.end(), x))
      continue;
    gens.push_back(x);
    covered = q.closure(gens);
  }
  const std::size_t k = gens.size();
  std::vector<IntVector> word(n);
  std::vector<bool> seen(n, false);
  word[0] = IntVector(k, 0);
  seen[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto a = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      auto b = q.mul(a, gens[i]);
      if (seen[b])
        continue;
      seen[b] = true;
      word[b] = word[a];
      word[b][i] += 1;
      queue.push_back(b);
    }
  }
  IntMatrix relations;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < k; ++i) {
      IntVector r = word[a];
      r[i] += 1;
      const IntVector& w = word[q.mul(a, gens[i])];
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) {
        r[j] -= w[j];
        if (r[j] != 0)
          zero = false;
      }
      if (!zero)
        relations.push_back(std::move(r));
    }
  if (k == 0)
    return {FiniteAbelianGroup(0, {}), std::vector<IntVector>(n)};
  FiniteAbelianGroup a(k, std::move(relations));
  std::vector<IntVector> coords(n);
  for (std::uint32_t x = 0; x < n; ++x)
    coords[x] = a.coordinates(word[x]);
  return {std::move(a), std::move(coords)};
}

/// Hom(Q, C_m) for a table group Q, identified with
/// C_{gcd(d_1,m)} x ... x C_{gcd(d_t,m)} where d_i are the invariant factors
/// of the abelianization. A character with coordinates (k_i) sends x to
/// sum k_i c_i(x) (m / gcd(d_i, m)) mod m, with c_i the abelianization
/// coordinates of x.
class CharacterGroup {
public:
  CharacterGroup() = default;

  CharacterGroup(const TableGroup& q, std::uint64_t m) : m_(m) {
    if (m == 0)
      throw InputError("character group: unit order must be positive");
    Abelianization ab = abelianize(q);
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < ab.group.invariant_factors().size(); ++i) {
      Integer g = gcd(ab.group.invariant_factors()[i], Integer(m));
      if (g == 1)
        continue;
      kept_.push_back(i);
      orders_.push_back(g);
      scale_.push_back(Integer(m) / g);
    }
    coords_ = std::move(ab.coords);
    abelianization_ = std::move(ab.group);
  }

  std::uint64_t unit_order() const { return m_; }
  /// Orders of the cyclic factors of Hom(Q, C_m), all > 1.
  const std::vector<Integer>& factor_orders() const { return orders_; }
  std::size_t factor_count() const { return orders_.size(); }
  bool is_trivial() const { return orders_.empty(); }
  const FiniteAbelianGroup& abelianization() const { return abelianization_; }

  Integer order() const {
    Integer n = 1;
    for (const auto& o : orders_)
      n *= o;
    return n;
  }

  /// Coefficient of the j-th character coordinate in the value at element x:
  /// value(chi, x) = sum_j chi_j * weight(x, j) mod m.
  Integer weight(std::uint32_t x, std::size_t j) const {
    return coords_[x][kept_[j]] * scale_[j];
  }

  /// chi(x) in Z/m.
  Integer evaluate(const IntVector& chi, std::uint32_t x) const {
    Integer v = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j)
      v += chi[j] * weight(x, j);
    return mod_floor(v, Integer(m_));
  }

  FiniteAbelianGroup as_abelian_group() const {
    return FiniteAbelianGroup::from_cyclic_factors(orders_);
  }

private:
  std::uint64_t m_ = 1;
  FiniteAbelianGroup abelianization_;
  std::vector<IntVector> coords_;
  std::vector<std::size_t> kept_;
  std::vector<Integer> orders_;
  std::vector<Integer> scale_;
};

inline CharacterGroup hom_to_roots(const QuotientGroup& q, std::uint64_t m) {
  return CharacterGroup(q.table(), m);
}

} // namespace lefschetz

#endif // LEFSCHETZ_ABELIAN_HPP
