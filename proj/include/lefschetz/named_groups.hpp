#ifndef LEFSCHETZ_NAMED_GROUPS_HPP
#define LEFSCHETZ_NAMED_GROUPS_HPP

#include <lefschetz/arith.hpp>
#include <lefschetz/group.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <vector>

namespace lefschetz {

namespace detail {

inline Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> cycle;
  for (std::size_t i = 0; i < length; ++i)
    cycle.push_back(static_cast<Point>(first + i + 1));
  return Permutation::from_cycles(degree, {cycle});
}

inline void require(bool ok, const std::string& what) {
  if (!ok)
    throw InputError("parameter out of supported range: " + what);
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t r = 1; r < p; ++r) {
    std::uint64_t x = 1, k = 0;
    do {
      x = x * r % p;
      ++k;
    } while (x != 1);
    if (k == p - 1)
      return r;
  }
  return 1;
}

// Greedy generating set of an explicit element set closed under products.
inline FiniteGroup group_from_element_set(std::size_t degree,
                                          const std::vector<Permutation>& elements,
                                          std::size_t bound) {
  std::vector<Permutation> gens;
  FiniteGroup current = FiniteGroup::from_generators(degree, gens, bound);
  for (const auto& x : elements) {
    if (current.find(x))
      continue;
    gens.push_back(x);
    current = FiniteGroup::from_generators(degree, gens, bound);
    if (current.order() == elements.size())
      break;
  }
  return current;
}

} // namespace detail

inline FiniteGroup cyclic_group(std::size_t n, std::size_t bound = default_element_bound) {
  detail::require(n >= 1, "cyclic needs n >= 1");
  if (n == 1)
    return FiniteGroup::from_generators(1, {}, bound);
  return FiniteGroup::from_generators(n, {detail::cycle_on(n, 0, n)}, bound);
}

/// Dihedral group of the given order 2k, generated by the rotation x and
/// the reflection t fixing point 1; order 4 is the Klein four group.
inline FiniteGroup dihedral_group(std::size_t order, std::size_t bound = default_element_bound) {
  detail::require(order >= 2 && order % 2 == 0, "dihedral needs an even order >= 2");
  const std::size_t k = order / 2;
  if (k == 1)
    return cyclic_group(2, bound);
  if (k == 2)
    return FiniteGroup::from_generators(
        4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::from_cycles(4, {{1, 3}, {2, 4}})},
        bound);
  std::vector<std::vector<Point>> refl;
  for (std::size_t i = 2; i < k + 2 - i; ++i)
    refl.push_back({static_cast<Point>(i), static_cast<Point>(k + 2 - i)});
  return FiniteGroup::from_generators(
      k, {detail::cycle_on(k, 0, k), Permutation::from_cycles(k, refl)}, bound);
}

inline FiniteGroup symmetric_group(std::size_t n, std::size_t bound = default_element_bound) {
  detail::require(n >= 1, "symmetric needs n >= 1");
  if (n == 1)
    return FiniteGroup::from_generators(1, {}, bound);
  return FiniteGroup::from_generators(
      n, {detail::cycle_on(n, 0, n), Permutation::from_cycles(n, {{1, 2}})}, bound);
}

inline FiniteGroup alternating_group(std::size_t n, std::size_t bound = default_element_bound) {
  detail::require(n >= 1, "alternating needs n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t i = 3; i <= n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{1, 2, static_cast<Point>(i)}}));
  return FiniteGroup::from_generators(n, gens, bound);
}

/// (C_p)^n as n disjoint p-cycles on np points.
inline FiniteGroup elementary_abelian_group(std::size_t p, std::size_t n,
                                            std::size_t bound = default_element_bound) {
  detail::require(is_prime(p), "elementary_abelian needs a prime");
  detail::require(n >= 1, "elementary_abelian needs n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < n; ++b)
    gens.push_back(detail::cycle_on(n * p, b * p, p));
  return FiniteGroup::from_generators(n * p, gens, bound);
}

/// The quaternion group of order 8 in its regular representation.
inline FiniteGroup quaternion_group(std::size_t bound = default_element_bound) {
  // Elements 0..7 are 1, i, j, k, -1, -i, -j, -k.
  static constexpr std::array<std::array<int, 4>, 4> unit{{
      {0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}}};
  auto mul = [](int a, int b) {
    int sign = (a >= 4) ^ (b >= 4);
    int r = unit[a % 4][b % 4];
    return sign ? (r + 4) % 8 : r;
  };
  auto left = [&](int a) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x)
      images[x] = static_cast<Point>(mul(a, x));
    return Permutation(images);
  };
  return FiniteGroup::from_generators(8, {left(1), left(2)}, bound);
}

/// N_{S_2p}(<(1..p), (p+1..2p)>), by scanning the symmetric group of
/// degree 2p.
inline FiniteGroup s2p_normalizer(std::size_t p, std::size_t bound = default_element_bound) {
  detail::require(is_prime(p) && p <= 5, "s2p_normalizer supports primes p <= 5");
  const std::size_t degree = 2 * p;
  FiniteGroup s = FiniteGroup::from_generators(
      degree, {detail::cycle_on(degree, 0, p), detail::cycle_on(degree, p, p)}, bound);
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  std::vector<Permutation> normalizing;
  do {
    Permutation x{std::vector<Point>(images)};
    Permutation xi = x.inverse();
    bool ok = true;
    for (const auto& gen : s.generators())
      if (!s.find(x * gen * xi)) {
        ok = false;
        break;
      }
    if (ok)
      normalizing.push_back(std::move(x));
  } while (std::next_permutation(images.begin(), images.end()));
  return detail::group_from_element_set(degree, normalizing, bound);
}

/// (C_p : C_{p-1})^n : S_n acting on np points, the i-th copy of C_p
/// generated by the i-th block p-cycle and C_{p-1} acting faithfully on it.
inline FiniteGroup wreath_family(std::size_t p, std::size_t n,
                                 std::size_t bound = default_element_bound) {
  detail::require(is_prime(p), "wreath_family needs a prime");
  detail::require(n >= 1 && n <= 8, "wreath_family needs 1 <= n <= 8");
  const std::size_t degree = n * p;
  std::vector<Permutation> gens{detail::cycle_on(degree, 0, p)};
  if (p > 2) {
    std::uint64_t r = detail::primitive_root(p);
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<Point>(i);
    for (std::size_t a = 0; a < p; ++a)
      images[a] = static_cast<Point>(a * r % p);
    gens.emplace_back(images);
  }
  if (n >= 2) {
    std::vector<Point> swap(degree), rotate(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      std::size_t block = i / p, offset = i % p;
      swap[i] = static_cast<Point>(i);
      rotate[i] = static_cast<Point>(((block + 1) % n) * p + offset);
    }
    for (std::size_t a = 0; a < p; ++a)
      std::swap(swap[a], swap[p + a]);
    gens.emplace_back(swap);
    if (n >= 3)
      gens.emplace_back(rotate);
  }
  return FiniteGroup::from_generators(degree, gens, bound);
}

/// Named families: cyclic n, dihedral 2n, symmetric n, alternating n,
/// elementary_abelian p n, quaternion, s2p_normalizer p, wreath_family p n.
inline FiniteGroup named_group(const std::string& family, const std::vector<std::size_t>& params,
                               std::size_t bound = default_element_bound) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("parameter out of supported range: " + family + " takes " +
                       std::to_string(count) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1);
    return cyclic_group(params[0], bound);
  }
  if (family == "dihedral") {
    need(1);
    return dihedral_group(params[0], bound);
  }
  if (family == "symmetric") {
    need(1);
    return symmetric_group(params[0], bound);
  }
  if (family == "alternating") {
    need(1);
    return alternating_group(params[0], bound);
  }
  if (family == "elementary_abelian") {
    need(2);
    return elementary_abelian_group(params[0], params[1], bound);
  }
  if (family == "quaternion") {
    if (!params.empty() && !(params.size() == 1 && params[0] == 8))
      throw InputError("parameter out of supported range: quaternion has order 8");
    return quaternion_group(bound);
  }
  if (family == "s2p_normalizer") {
    need(1);
    return s2p_normalizer(params[0], bound);
  }
  if (family == "wreath_family") {
    need(2);
    return wreath_family(params[0], params[1], bound);
  }
  throw InputError("unknown family: " + family);
}

} // namespace lefschetz

#endif // LEFSCHETZ_NAMED_GROUPS_HPP
