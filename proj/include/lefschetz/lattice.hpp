#ifndef LEFSCHETZ_LATTICE_HPP
#define LEFSCHETZ_LATTICE_HPP

// Exact integer linear algebra: Smith and Hermite normal forms, integer
// kernels, and lattices given by a basis in Hermite normal form.

#include <lefschetz/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty())
    return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

/// Row vector times matrix.
inline IntVector multiply(const IntVector& v, const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  IntVector out(cols, 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      out[j] += v[k] * m[k][j];
  }
  return out;
}

/// Floor-style remainder in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0)
    r += abs(m);
  return r;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inv;
  std::size_t rank = 0;

  /// The nonzero diagonal entries, in order.
  IntVector invariants() const {
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i)
      out.push_back(d[i][i]);
    return out;
  }
};

namespace detail {

class SmithReducer {
public:
  SmithReducer(IntMatrix a, std::size_t cols)
      : a_(std::move(a)), m_(a_.size()), n_(cols), u_(identity_matrix(m_)),
        v_(identity_matrix(n_)), vi_(identity_matrix(n_)) {}

  SmithForm run() {
    std::size_t t = 0;
    for (; t < std::min(m_, n_); ++t) {
      auto pivot = smallest_in(t);
      if (!pivot)
        break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      while (!reduce_at(t)) {
      }
      if (a_[t][t] < 0)
        negate_row(t);
    }
    return {std::move(a_), std::move(u_), std::move(v_), std::move(vi_), t};
  }

private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs = 0;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (a_[i][j] == 0)
          continue;
        Integer v = abs(a_[i][j]);
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    return best;
  }

  // One elimination sweep at pivot (t, t). Returns true once row and column t
  // are clear and the pivot divides the remaining block.
  bool reduce_at(std::size_t t) {
    bool clear = true;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (a_[i][t] == 0)
        continue;
      Integer q = a_[i][t] / a_[t][t];
      add_row(i, t, -q);
      if (a_[i][t] != 0)
        clear = false;
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (a_[t][j] == 0)
        continue;
      Integer q = a_[t][j] / a_[t][t];
      add_col(j, t, -q);
      if (a_[t][j] != 0)
        clear = false;
    }
    if (!clear) {
      move_smallest_remainder(t);
      return false;
    }
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (a_[i][j] % a_[t][t] != 0) {
          add_row(t, i, 1);
          return false;
        }
    return true;
  }

  void move_smallest_remainder(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(a_[t][t]);
    for (std::size_t i = t + 1; i < m_; ++i)
      if (a_[i][t] != 0 && abs(a_[i][t]) < best) {
        best = abs(a_[i][t]);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n_; ++j)
      if (a_[t][j] != 0 && abs(a_[t][j]) < best) {
        best = abs(a_[t][j]);
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    std::swap(a_[i], a_[j]);
    std::swap(u_[i], u_[j]);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (auto& row : a_)
      std::swap(row[i], row[j]);
    for (auto& row : v_)
      std::swap(row[i], row[j]);
    std::swap(vi_[i], vi_[j]);
  }

  void negate_row(std::size_t i) {
    for (auto& x : a_[i])
      x = -x;
    for (auto& x : u_[i])
      x = -x;
  }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < n_; ++c)
      a_[i][c] += k * a_[j][c];
    for (std::size_t c = 0; c < m_; ++c)
      u_[i][c] += k * u_[j][c];
  }

  // col_i += k * col_j; the inverse applies row_j -= k * row_i to V^-1
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    for (auto& row : a_)
      row[i] += k * row[j];
    for (auto& row : v_)
      row[i] += k * row[j];
    for (std::size_t c = 0; c < n_; ++c)
      vi_[j][c] -= k * vi_[i][c];
  }

  IntMatrix a_;
  std::size_t m_, n_;
  IntMatrix u_, v_, vi_;
};

} // namespace detail

/// Smith normal form of an m x n matrix (`cols` gives n when m = 0).
inline SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols)
      throw AlgorithmError("smith_normal_form: ragged matrix");
  return detail::SmithReducer(std::move(a), cols).run();
}

inline SmithForm smith_normal_form(IntMatrix a) {
  if (a.empty())
    throw AlgorithmError("smith_normal_form: empty matrix needs an explicit width");
  std::size_t cols = a[0].size();
  return smith_normal_form(std::move(a), cols);
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: upper
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_normal_form(IntMatrix rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (!best || abs(rows[i][c]) < abs(rows[*best][c])))
          best = i;
      if (!best)
        break;
      std::swap(rows[r], rows[*best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0)
          continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t k = c; k < cols; ++k)
          rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (r >= rows.size() || rows[r][c] == 0)
      continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r])
        x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = (rows[i][c] - mod_floor(rows[i][c], rows[r][c])) / rows[r][c];
      if (q != 0)
        for (std::size_t k = c; k < cols; ++k)
          rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Basis (as rows) of the integer kernel {x : A x = 0} of an m x n matrix.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  SmithForm s = smith_normal_form(a, cols);
  IntMatrix out;
  for (std::size_t j = s.rank; j < cols; ++j) {
    IntVector x(cols);
    for (std::size_t i = 0; i < cols; ++i)
      x[i] = s.v[i][j];
    out.push_back(std::move(x));
  }
  return out;
}

/// A sublattice of Z^dimension. The basis is kept in Hermite normal form so
/// equal lattices have equal bases.
class IntegerLattice {
public:
  IntegerLattice() = default;

  IntegerLattice(std::size_t dimension, IntMatrix generators)
      : dim_(dimension), basis_(hermite_normal_form(std::move(generators), dimension)) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const& { return basis_; }
  IntMatrix basis() && { return std::move(basis_); }

  /// Optional labels for rows of a caller-chosen (non-HNF) basis.
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) { names_ = std::move(names); }

  /// Coefficients of v in the HNF basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(IntVector v) const {
    if (v.size() != dim_)
      throw InputError("lattice: vector has wrong dimension");
    IntVector coeff(rank(), 0);
    std::size_t c = 0;
    for (std::size_t r = 0; r < rank(); ++r) {
      while (basis_[r][c] == 0) {
        if (v[c] != 0)
          return std::nullopt;
        ++c;
      }
      if (v[c] % basis_[r][c] != 0)
        return std::nullopt;
      coeff[r] = v[c] / basis_[r][c];
      for (std::size_t k = c; k < dim_; ++k)
        v[k] -= coeff[r] * basis_[r][k];
      ++c;
    }
    for (const auto& x : v)
      if (x != 0)
        return std::nullopt;
    return coeff;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::string> names_;
};

inline bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dimension() != b.dimension())
    throw InputError("lattice_equal: ambient dimensions differ");
  return a == b;
}

/// A congruence or equality row: sum coeff[i] x_i == 0 (mod modulus), where
/// modulus 0 means an exact equation.
struct LinearRow {
  IntVector coeff;
  Integer modulus = 0;
};

/// Solutions in Z^n of a mixed system of equations and congruences. Each
/// congruence row gets one auxiliary variable with the modulus as
/// coefficient; the kernel of the stacked matrix is projected back to Z^n.
inline IntegerLattice solve_mixed_system(const std::vector<LinearRow>& rows, std::size_t n) {
  std::size_t aux = 0;
  for (const auto& r : rows)
    if (r.modulus != 0)
      ++aux;
  const std::size_t width = n + aux;
  IntMatrix a;
  std::size_t k = 0;
  for (const auto& r : rows) {
    if (r.coeff.size() != n)
      throw AlgorithmError("solve_mixed_system: row has wrong width");
    IntVector row(width, 0);
    std::copy(r.coeff.begin(), r.coeff.end(), row.begin());
    if (r.modulus != 0)
      row[n + k++] = r.modulus;
    a.push_back(std::move(row));
  }
  if (a.empty())
    return IntegerLattice(n, identity_matrix(n));
  IntMatrix kernel = integer_kernel(a, width);
  for (auto& v : kernel)
    v.resize(n);
  return IntegerLattice(n, std::move(kernel));
}

} // namespace lefschetz

#endif // LEFSCHETZ_LATTICE_HPP
