#ifndef LEFSCHETZ_SUPERCLASS_HPP
#define LEFSCHETZ_SUPERCLASS_HPP

// Integer and sign valued functions on classes of p-subgroups. Functions on
// G-classes and on S-classes are distinct types; moving between them is an
// explicit, checked conversion.

#include <lefschetz/classes.hpp>
#include <lefschetz/lattice.hpp>

#include <memory>
#include <sstream>

namespace lefschetz {

struct GroupScope {
  static constexpr ClassScope scope = ClassScope::group;
};
struct SylowScope {
  static constexpr ClassScope scope = ClassScope::sylow;
};

using TablePtr = std::shared_ptr<const ClassTable>;

/// Describes class c by the generators of its representative, e.g.
/// "<(1 2),(3 4)>", or "1" for the trivial subgroup.
inline std::string class_label(const ClassTable& t, std::size_t c) {
  const Subgroup& h = t.rep(c);
  if (h.is_trivial())
    return "1";
  std::string s = "<";
  for (std::size_t i = 0; i < h.generators().size(); ++i)
    s += (i ? "," : "") + h.group().element(h.generators()[i]).to_cycles();
  return s + ">";
}

inline std::string table_header(const ClassTable& t) {
  std::string s = "# classes:";
  for (std::size_t c = 0; c < t.size(); ++c)
    s += (c ? " | " : " ") + class_label(t, c);
  return s;
}

/// An integer per class of the table's scope.
template <class Scope>
class ClassFunction {
public:
  ClassFunction() = default;

  ClassFunction(TablePtr table, IntVector values) : table_(std::move(table)), values_(std::move(values)) {
    if (!table_)
      throw InputError("class function: missing class table");
    if (table_->scope() != Scope::scope)
      throw InputError("class function: table has scope " + scope_name(table_->scope()) +
                       ", expected " + scope_name(Scope::scope));
    if (values_.size() != table_->size())
      throw InputError("class function: expected " + std::to_string(table_->size()) +
                       " values, got " + std::to_string(values_.size()));
  }

  static ClassFunction constant(TablePtr table, const Integer& c) {
    IntVector v(table->size(), c);
    return ClassFunction(std::move(table), std::move(v));
  }

  const ClassTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  const IntVector& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Integer& operator[](std::size_t c) const { return values_[c]; }

  /// Value at a subgroup of S given by its lattice index.
  const Integer& at_subgroup(std::size_t lattice_index) const {
    return values_[table_->class_of(lattice_index)];
  }

  ClassFunction operator+(const ClassFunction& o) const {
    check_same(o);
    IntVector v = values_;
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] += o.values_[i];
    return ClassFunction(table_, std::move(v));
  }

  ClassFunction operator-(const ClassFunction& o) const {
    check_same(o);
    IntVector v = values_;
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] -= o.values_[i];
    return ClassFunction(table_, std::move(v));
  }

  ClassFunction operator*(const Integer& k) const {
    IntVector v = values_;
    for (auto& x : v)
      x *= k;
    return ClassFunction(table_, std::move(v));
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.table_ == b.table_ && a.values_ == b.values_;
  }

  /// Header line with the class representatives, then the values.
  std::string to_text() const {
    std::ostringstream os;
    os << table_header(*table_) << '\n';
    for (std::size_t i = 0; i < values_.size(); ++i)
      os << (i ? " " : "") << values_[i];
    os << '\n';
    return os.str();
  }

private:
  void check_same(const ClassFunction& o) const {
    if (table_ != o.table_)
      throw InputError("class functions live on different class tables");
  }

  TablePtr table_;
  IntVector values_;
};

using SuperclassFunction = ClassFunction<GroupScope>;
using SylowLevelFunction = ClassFunction<SylowScope>;

/// A +-1 value per class, stored as a bit per class (bit set means -1).
template <class Scope>
class SignVector {
public:
  SignVector() = default;
  SignVector(TablePtr table, boost::dynamic_bitset<> bits) : table_(std::move(table)), bits_(std::move(bits)) {
    if (bits_.size() != table_->size())
      throw InputError("sign function: wrong number of entries");
  }

  static SignVector from_signs(TablePtr table, const std::vector<int>& signs) {
    boost::dynamic_bitset<> b(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] != 1 && signs[i] != -1)
        throw InputError("sign function: entries must be +1 or -1");
      b[i] = signs[i] == -1;
    }
    return SignVector(std::move(table), std::move(b));
  }

  const ClassTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  int sign(std::size_t c) const { return bits_[c] ? -1 : 1; }

  std::vector<int> signs() const {
    std::vector<int> out;
    for (std::size_t c = 0; c < bits_.size(); ++c)
      out.push_back(sign(c));
    return out;
  }

  /// Pointwise product.
  SignVector operator*(const SignVector& o) const {
    if (table_ != o.table_)
      throw InputError("sign functions live on different class tables");
    return SignVector(table_, bits_ ^ o.bits_);
  }

  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.table_ == b.table_ && a.bits_ == b.bits_;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << table_header(*table_) << '\n';
    for (std::size_t i = 0; i < bits_.size(); ++i)
      os << (i ? " " : "") << sign(i);
    os << '\n';
    return os.str();
  }

private:
  TablePtr table_;
  boost::dynamic_bitset<> bits_;
};

using SignFunction = SignVector<GroupScope>;
using SylowSignFunction = SignVector<SylowScope>;

/// dim(f)(P) = (-1)^f(P)
template <class Scope>
SignVector<Scope> dim_function(const ClassFunction<Scope>& f) {
  boost::dynamic_bitset<> b(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    b[i] = (f[i] % 2) != 0;
  return SignVector<Scope>(f.table_ptr(), std::move(b));
}

/// m_{G/K}(P): the number of cosets gK fixed by P, counted on the coset
/// space directly.
inline SuperclassFunction mark_function(const Subgroup& k, TablePtr table) {
  const FiniteGroup& g = k.group();
  if (!g.same_as(table->group()))
    throw InputError("mark_function: K is not a subgroup of the table's group");
  boost::dynamic_bitset<> covered(g.order());
  std::vector<ElemId> cosets;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (covered.test(x))
      continue;
    cosets.push_back(x);
    for (ElemId y : k.elements())
      covered.set(g.mul(x, y));
  }
  IntVector values;
  for (std::size_t c = 0; c < table->size(); ++c) {
    const Subgroup& p = table->rep(c);
    long long fixed = 0;
    for (ElemId x : cosets) {
      // P fixes xK iff x^-1 P x <= K
      bool ok = true;
      for (ElemId y : p.generators())
        if (!k.contains(g.conj(g.inv(x), y))) {
          ok = false;
          break;
        }
      fixed += ok;
    }
    values.push_back(fixed);
  }
  return SuperclassFunction(std::move(table), std::move(values));
}

/// Two S-classes whose G-conjugate representatives carry different values.
struct StabilityResult {
  bool stable = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;

  explicit operator bool() const { return stable; }
};

/// f is G-stable when it is constant on the S-classes fused by `g_table`.
template <class V>
StabilityResult stability_of(const ClassTable& s_table, const V& values, const ClassTable& g_table) {
  if (&s_table.lattice() != &g_table.lattice())
    throw InputError("stability: tables over different Sylow lattices");
  std::vector<std::optional<std::size_t>> seen(g_table.size());
  for (std::size_t c = 0; c < s_table.size(); ++c) {
    std::size_t gc = g_table.class_of(s_table.rep_index(c));
    if (!seen[gc]) {
      seen[gc] = c;
      continue;
    }
    if (!(values[*seen[gc]] == values[c]))
      return {false, std::make_pair(*seen[gc], c)};
  }
  return {};
}

inline StabilityResult is_G_stable(const SylowLevelFunction& f, const ClassTable& g_table) {
  return stability_of(f.table(), f.values(), g_table);
}

/// Stability checked on cyclic S-classes only.
inline StabilityResult is_G_stable_on_cyclics(const SylowLevelFunction& f, const ClassTable& g_table) {
  const ClassTable& s = f.table();
  std::vector<std::optional<std::size_t>> seen(g_table.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (!s.is_cyclic(c))
      continue;
    std::size_t gc = g_table.class_of(s.rep_index(c));
    if (!seen[gc]) {
      seen[gc] = c;
      continue;
    }
    if (f[*seen[gc]] != f[c])
      return {false, std::make_pair(*seen[gc], c)};
  }
  return {};
}

/// Reads a superclass function at the Sylow level.
template <class To, class From>
ClassFunction<To> restrict_function(const ClassFunction<From>& f, TablePtr to) {
  if (&to->lattice() != &f.table().lattice())
    throw InputError("restrict: tables over different Sylow lattices");
  IntVector v;
  for (std::size_t c = 0; c < to->size(); ++c)
    v.push_back(f.at_subgroup(to->rep_index(c)));
  return ClassFunction<To>(std::move(to), std::move(v));
}

inline SylowLevelFunction to_sylow_level(const SuperclassFunction& f, TablePtr s_table) {
  return restrict_function<SylowScope>(f, std::move(s_table));
}

/// The superclass function of a G-stable Sylow-level function.
inline SuperclassFunction to_superclass(const SylowLevelFunction& f, TablePtr g_table) {
  auto st = is_G_stable(f, *g_table);
  if (!st)
    throw InputError("function is not G-stable: classes " + std::to_string(st.violation->first) +
                     " and " + std::to_string(st.violation->second) + " fuse");
  return restrict_function<GroupScope>(f, std::move(g_table));
}

template <class Scope>
SignVector<Scope> restrict_signs(const SignVector<GroupScope>& u, TablePtr to) {
  boost::dynamic_bitset<> b(to->size());
  for (std::size_t c = 0; c < to->size(); ++c)
    b[c] = u.bits()[u.table().class_of(to->rep_index(c))];
  return SignVector<Scope>(std::move(to), std::move(b));
}

} // namespace lefschetz

#endif // LEFSCHETZ_SUPERCLASS_HPP
