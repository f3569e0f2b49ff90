#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace revmap {

/// Non-negative gcd; gcd(0, n) = |n|.
inline long long gcd(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline long long gcd(long long a, long long b, long long c) {
  return gcd(gcd(a, b), c);
}

inline long long lcm(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return (a < 0 ? -a : a) / gcd(a, b) * (b < 0 ? -b : b);
}

/// Least non-negative residue of a modulo n (n > 0).
inline long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace revmap
