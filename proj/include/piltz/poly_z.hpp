#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact arithmetic on integer polynomials, used only while building a
// field descriptor. Coefficients are lowest degree first.

namespace piltz::zpoly {

using BigInt = boost::multiprecision::cpp_int;
using Poly = std::vector<BigInt>;

Poly from_int64(std::span<const std::int64_t> coeffs);

/// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
BigInt resultant(const Poly& f, const Poly& g);

/// (-1)^{n(n-1)/2} res(f, f') / lc(f).
BigInt discriminant(const Poly& f);

/// Number of distinct real roots, from a Sturm sequence.
int count_real_roots(const Poly& f);

/// Integer roots of a monic polynomial (the only possible rational ones).
std::vector<BigInt> integer_roots(const Poly& f);

BigInt evaluate(const Poly& f, const BigInt& x);

}  // namespace piltz::zpoly
