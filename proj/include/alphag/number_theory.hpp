#pragma once

#include "alphag/error.hpp"

#include <cstdint>
#include <numeric>

namespace alphag {

/// Euler's totient by trial-division factorization.
constexpr std::uint64_t euler_phi(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "euler_phi(0) is undefined");
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

constexpr std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace alphag
