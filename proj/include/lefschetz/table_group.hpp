#ifndef LEFSCHETZ_TABLE_GROUP_HPP
#define LEFSCHETZ_TABLE_GROUP_HPP

#include <lefschetz/group.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace lefschetz {

/// A small abstract group given by its Cayley table. Element 0 is the identity.
class TableGroup {
public:
  TableGroup() : n_(1), table_{0}, inverses_{0}, orders_{1} {}

  explicit TableGroup(std::size_t n, std::vector<std::uint32_t> table)
      : n_(n), table_(std::move(table)) {
    inverses_.resize(n_);
    orders_.resize(n_);
    for (std::uint32_t a = 0; a < n_; ++a) {
      for (std::uint32_t b = 0; b < n_; ++b)
        if (mul(a, b) == 0)
          inverses_[a] = b;
      std::uint32_t k = 1;
      for (std::uint32_t x = a; x != 0; x = mul(x, a))
        ++k;
      orders_[a] = k;
    }
  }

  std::size_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverses_[a]; }
  std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }

  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  bool is_abelian() const {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  std::uint32_t exponent() const {
    std::uint32_t e = 1;
    for (auto o : orders_)
      e = std::lcm(e, o);
    return e;
  }

  /// Closure of a generating set, as a sorted list of elements.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const {
    std::vector<bool> seen(n_, false);
    std::vector<std::uint32_t> out{0};
    seen[0] = true;
    for (std::size_t head = 0; head < out.size(); ++head)
      for (auto g : gens) {
        auto next = mul(out[head], g);
        if (!seen[next]) {
          seen[next] = true;
          out.push_back(next);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The derived subgroup, by closure of all commutators.
  std::vector<std::uint32_t> derived_subgroup() const {
    std::vector<std::uint32_t> comms;
    std::vector<bool> seen(n_, false);
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b) {
        auto c = commutator(a, b);
        if (!seen[c]) {
          seen[c] = true;
          comms.push_back(c);
        }
      }
    return closure(comms);
  }

private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::uint32_t> orders_;
};

/// Quotient of a table group by a normal subgroup given as an element list.
/// `coset_of[x]` is the image of x.
struct TableQuotient {
  TableGroup group;
  std::vector<std::uint32_t> coset_of;
};

inline TableQuotient quotient_table(const TableGroup& g, const std::vector<std::uint32_t>& kernel) {
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> coset_of(g.order(), unset);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unset)
      continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto k : kernel)
      coset_of[g.mul(x, k)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = coset_of[g.mul(reps[a], reps[b])];
  return {TableGroup(m, std::move(table)), std::move(coset_of)};
}

/// A quotient N/K of subgroups of a permutation group, with the projection
/// from N given by `coset_index`.
class QuotientGroup {
public:
  static constexpr std::uint32_t not_in_ambient = UINT32_MAX;

  QuotientGroup() = default;

  QuotientGroup(Subgroup ambient, Subgroup kernel) : ambient_(std::move(ambient)),
                                                     kernel_(std::move(kernel)) {
    if (!is_normal_in(kernel_, ambient_))
      throw InputError("quotient: kernel is not a normal subgroup");
    const FiniteGroup& g = ambient_.group();
    coset_.assign(g.order(), not_in_ambient);
    // Identity first so coset 0 is the kernel.
    for (ElemId x : ambient_.elements()) {
      if (coset_[x] != not_in_ambient)
        continue;
      auto c = static_cast<std::uint32_t>(reps_.size());
      reps_.push_back(x);
      for (ElemId k : kernel_.elements())
        coset_[g.mul(x, k)] = c;
    }
    const std::size_t m = reps_.size();
    std::vector<std::uint32_t> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        table[a * m + b] = coset_[g.mul(reps_[a], reps_[b])];
    table_ = TableGroup(m, std::move(table));
  }

  const Subgroup& ambient() const { return ambient_; }
  const Subgroup& kernel() const { return kernel_; }
  const TableGroup& table() const { return table_; }
  std::size_t order() const { return reps_.size(); }
  const std::vector<ElemId>& representatives() const { return reps_; }

  /// Image of x in the quotient; x must lie in the ambient subgroup.
  std::uint32_t coset_index(ElemId x) const {
    auto c = coset_[x];
    if (c == not_in_ambient)
      throw InputError("quotient: element is not in the ambient subgroup");
    return c;
  }

private:
  Subgroup ambient_;
  Subgroup kernel_;
  std::vector<std::uint32_t> coset_;
  std::vector<ElemId> reps_;
  TableGroup table_;
};

/// The Cayley table of a subgroup, in the order of `h.elements()`, with the
/// identity moved to position 0.
inline TableGroup table_of(const Subgroup& h) {
  QuotientGroup q(h, trivial_subgroup(h.group()));
  return q.table();
}

} // namespace lefschetz

#endif // LEFSCHETZ_TABLE_GROUP_HPP
