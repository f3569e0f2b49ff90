#include "revmap/numeric.hpp"

namespace revmap {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  if (n == 0 || p < 2) return part;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

}  // namespace revmap
