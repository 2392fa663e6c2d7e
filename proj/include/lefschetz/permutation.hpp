#ifndef LEFSCHETZ_PERMUTATION_HPP
#define LEFSCHETZ_PERMUTATION_HPP

#include <lefschetz/error.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace lefschetz {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Points are 0-based internally and
/// 1-based in cycle notation.
///
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point image : images_) {
      if (image >= images_.size() || seen[image])
        throw InputError("invalid permutation: images are not a bijection");
      seen[image] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Builds a permutation from 1-based cycles. Points must lie in 1..degree
  /// and may not repeat across cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (Point point : cycle) {
        if (point < 1 || point > degree)
          throw InputError("point out of range: " + std::to_string(point));
        if (used[point - 1])
          throw InputError("invalid permutation: point " +
                           std::to_string(point) + " repeats");
        used[point - 1] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<Point>& images() const noexcept { return images_; }
  Point operator()(Point x) const { return images_[x]; }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree())
      throw InputError("invalid permutation: degree mismatch in product");
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x)
      out.images_[x] = images_[rhs.images_[x]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x)
      out.images_[images_[x]] = static_cast<Point>(x);
    return out;
  }

  Permutation pow(long long exponent) const {
    Permutation base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                        : static_cast<unsigned long long>(exponent);
    Permutation result = identity(degree());
    while (e) {
      if (e & 1u)
        result = result * base;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < degree(); ++x)
      if (images_[x] != x)
        return false;
    return true;
  }

  /// Disjoint cycles of length > 1, 0-based, each starting at its least point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree(), false);
    for (Point start = 0; start < degree(); ++start) {
      if (seen[start] || images_[start] == start)
        continue;
      std::vector<Point> cycle;
      for (Point x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& cycle : cycles())
      result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
    return result;
  }

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycles() const {
    std::ostringstream os;
    auto cs = cycles();
    if (cs.empty())
      return "()";
    for (const auto& cycle : cs) {
      os << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i)
        os << (i ? " " : "") << cycle[i] + 1;
      os << ')';
    }
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images())
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

} // namespace lefschetz

#endif // LEFSCHETZ_PERMUTATION_HPP
