#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace piltz {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// All primes p <= limit, ascending (plain Eratosthenes over odd numbers).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

/// floor(n^(1/k)) exactly, k >= 1.
std::uint64_t iroot(std::uint64_t n, unsigned k);

bool is_squarefree(std::int64_t n);

std::string to_decimal(i128 value);
std::string to_decimal(u128 value);

}  // namespace piltz
