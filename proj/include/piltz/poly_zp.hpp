#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

// Dense univariate polynomials over F_p (p < 2^32) and their factorization.
// Coefficients are stored lowest degree first and kept trimmed, so the zero
// polynomial is the empty vector.

namespace piltz::zp {

using Poly = std::vector<std::uint64_t>;

struct Factor {
    Poly poly;  // monic irreducible
    int multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

int degree(const Poly& a);  // -1 for the zero polynomial
void trim(Poly& a);

/// Reduce integer coefficients (lowest degree first) modulo p.
Poly reduce(std::span<const std::int64_t> coeffs, std::uint64_t p);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly make_monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);  // monic, gcd(0, 0) = 0

/// f = prod g_i^{m_i} with the g_i squarefree and pairwise coprime; f monic.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f, std::uint64_t p);

/// For squarefree monic f: pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);

/// Splits a product of distinct irreducibles of common degree d (Cantor-Zassenhaus).
std::vector<Poly> equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng);

/// Complete factorization of a monic polynomial. Randomness is seeded from
/// (p, f) so repeated calls return identical, canonically ordered output.
std::vector<Factor> factor(const Poly& f, std::uint64_t p);

/// Number of distinct roots of f in F_p, i.e. deg gcd(x^p - x, f).
int count_distinct_roots(const Poly& f, std::uint64_t p);

}  // namespace piltz::zp
