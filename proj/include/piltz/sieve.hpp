#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "piltz/arith.hpp"
#include "piltz/coeff_table.hpp"
#include "piltz/field.hpp"

namespace piltz {

/// Which Euler factor a multiplicative sieve expands: prod_i (1 - t^{f_i})^{-1}
/// (coefficients of zeta_K) or prod_i (1 - t^{f_i}) (coefficients of 1/zeta_K).
enum class EulerSide { zeta, inverse };

/// Power-series coefficients c(0..kmax) of the local factor at p.
std::vector<std::int64_t> local_series(const SplittingType& st, int kmax, EulerSide side);

/// Local data for every prime p <= X: the full series for p^2 <= X and the
/// linear coefficient c(1) for the rest.
class LocalFactorTable {
public:
    LocalFactorTable(const FieldDescriptor& field, std::uint64_t limit, EulerSide side);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& small_primes() const { return small_primes_; }
    /// c(0..k_max(p)) for small_primes()[index]
    std::span<const std::int64_t> series(std::size_t index) const;
    /// c(1) at a prime q <= limit()
    std::int64_t linear(std::uint64_t q) const;

private:
    FieldDescriptor field_;
    std::uint64_t limit_;
    EulerSide side_;
    std::vector<std::uint32_t> small_primes_;
    std::vector<std::size_t> offsets_;
    std::vector<std::int64_t> series_;
    std::vector<std::int8_t> linear_by_value_;  // monogenic fields only
};

/// Segment length of the multiplicative sieve (entries).
inline constexpr std::uint64_t kSieveSegment = 1ULL << 20;

/// d_K(l) = number of integral ideals of norm l, for l <= X.
CoefficientTable sieve_dk(const FieldDescriptor& field, std::int64_t X);

/// M_K(q) = sum over ideals of norm q of mu_K, for q <= X.
CoefficientTable sieve_mobius(const FieldDescriptor& field, std::int64_t X);

/// (A * B)(l) = sum_{jk = l} A(j) B(k). Throws LengthMismatch or OverflowRisk.
CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b);

/// d_K^m, by m - 1 convolutions with d_K.
CoefficientTable piltz_table(const FieldDescriptor& field, int m, std::int64_t X);

/// F_K = d_K^m * mu with the rational Moebius function.
CoefficientTable f_kernel_table(const FieldDescriptor& field, int m, std::int64_t X);

/// I_K^m(x) = sum_{l <= x} table(l). Throws RangeExceeded when x > length.
std::int64_t count_ideals(const CoefficientTable& table, double x);

/// Prefix sums of a coefficient table.
class SummatoryTable {
public:
    explicit SummatoryTable(const CoefficientTable& table);

    std::int64_t length() const { return static_cast<std::int64_t>(prefix_.size()) - 1; }
    std::int64_t at(std::int64_t n) const;  // n <= length, negative n gives 0
    std::int64_t at(double x) const;
    const std::string& label() const { return label_; }

private:
    std::string label_;
    std::vector<std::int64_t> prefix_;
};

/// V_l^r(x, K) = sum_{q^r <= x} M_K(q) I_K(x / q^r)^l, accumulated in 128 bits.
u128 count_rprime(const FieldDescriptor& field, int r, int l, double x, const CoefficientTable& dk,
                  const CoefficientTable& mobius);
u128 count_rprime(int r, int l, double x, const SummatoryTable& ideals, const CoefficientTable& mobius);

/// I_K(x) at each query without materializing a table: one segmented pass
/// up to max(xs), answers returned in input order.
std::vector<std::int64_t> count_ideals_streamed(const FieldDescriptor& field, std::span<const double> xs);

/// Straight-line single-threaded kernels, kept as the reference the
/// parallel versions are tested and benchmarked against.
namespace serial {
CoefficientTable sieve_dk(const FieldDescriptor& field, std::int64_t X);
CoefficientTable sieve_mobius(const FieldDescriptor& field, std::int64_t X);
CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b);
}  // namespace serial

}  // namespace piltz
