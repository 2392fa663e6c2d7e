#ifndef LEFSCHETZ_ARITH_HPP
#define LEFSCHETZ_ARITH_HPP

#include <cstdint>

namespace lefschetz {

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Largest power of p dividing n (n > 0).
inline std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  return n > 0 && p_part_of(n, p) == n;
}

/// Modular inverse of a modulo m, assuming gcd(a, m) = 1 and m >= 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1)
    return 0;
  std::int64_t old_r = ((a % m) + m) % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return ((old_s % m) + m) % m;
}

} // namespace lefschetz

#endif // LEFSCHETZ_ARITH_HPP
