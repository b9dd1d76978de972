#include <algorithm>
#include <cmath>
#include <string>

#include "piltz/arith.hpp"

namespace piltz {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is exact below 2^64
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    // index i represents the odd number 2i+1
    const std::uint64_t half = (limit - 1) / 2 + 1;
    std::vector<bool> composite(half, false);
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
    }
    primes.reserve(static_cast<std::size_t>(limit / std::max(1.0, std::log(double(limit)) - 1.1)) + 16);
    primes.push_back(2);
    for (std::uint64_t i = 1; i < half; ++i) {
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
    }
    return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {
// r^k > n, saturating
bool power_exceeds(std::uint64_t r, unsigned k, std::uint64_t n) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
        if (acc > n) return true;
    }
    return false;
}
}  // namespace

std::uint64_t iroot(std::uint64_t n, unsigned k) {
    if (k == 1 || n < 2) return n;
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    while (r > 0 && power_exceeds(r, k, n)) --r;
    while (!power_exceeds(r + 1, k, n)) ++r;
    return r;
}

bool is_squarefree(std::int64_t n) {
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    if (m == 0) return false;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

std::string to_decimal(u128 value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string to_decimal(i128 value) {
    if (value < 0) return "-" + to_decimal(static_cast<u128>(-(value + 1)) + 1);
    return to_decimal(static_cast<u128>(value));
}

}  // namespace piltz
