#include <algorithm>
#include <cmath>
#include <numeric>

#include <omp.h>

#include "piltz/error.hpp"
#include "piltz/sieve.hpp"

namespace piltz {

namespace {

constexpr std::uint64_t kLinearTableLimit = 1ULL << 28;

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }

int max_exponent(std::uint64_t p, std::uint64_t limit) {
    int k = 0;
    u128 pk = 1;
    while (pk * p <= limit) {
        pk *= p;
        ++k;
    }
    return k;
}

std::uint64_t first_multiple_at_least(std::uint64_t step, std::uint64_t lo) { return (lo + step - 1) / step * step; }

// Fills out[i] = a(lo + i) for lo + i < hi, where a is the multiplicative
// function with local coefficients from `local`. Returns false on overflow.
bool fill_segment(const LocalFactorTable& local, std::uint64_t lo, std::uint64_t hi, std::int64_t* out,
                  std::vector<std::uint64_t>& acc, std::vector<std::uint8_t>& exponent) {
    const std::size_t len = hi - lo;
    acc.assign(len, 1);
    exponent.assign(len, 0);
    std::fill(out, out + len, 1);
    bool ok = true;
    const auto& primes = local.small_primes();
    for (std::size_t idx = 0; idx < primes.size(); ++idx) {
        const std::uint64_t p = primes[idx];
        if (p * p > hi - 1) break;
        const std::uint64_t start = first_multiple_at_least(p, lo);
        if (start >= hi) continue;
        std::uint64_t powers[64];
        powers[0] = 1;
        powers[1] = p;
        int k = 1;
        for (std::uint64_t j = start; j < hi; j += p) exponent[j - lo] = 1;
        for (std::uint64_t pk = p; pk <= (hi - 1) / p;) {
            pk *= p;
            ++k;
            powers[k] = pk;
            for (std::uint64_t j = first_multiple_at_least(pk, lo); j < hi; j += pk) exponent[j - lo] = static_cast<std::uint8_t>(k);
        }
        const auto series = local.series(idx);
        for (std::uint64_t j = start; j < hi; j += p) {
            const std::size_t i = j - lo;
            const int e = exponent[i];
            ok &= checked_mul(out[i], series[static_cast<std::size_t>(e)], out[i]);
            acc[i] *= powers[e];
        }
    }
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t l = lo + i;
        if (acc[i] != l) {
            // the cofactor has no prime factor <= sqrt(hi - 1), so it is prime
            ok &= checked_mul(out[i], local.linear(l / acc[i]), out[i]);
        }
    }
    return ok;
}

CoefficientTable build_multiplicative(const FieldDescriptor& field, std::int64_t X, EulerSide side, TableKind kind) {
    require(X >= 1, ErrorCode::PreconditionViolated, "table length must be >= 1");
    const auto limit = static_cast<std::uint64_t>(X);
    const LocalFactorTable local(field, limit, side);
    std::vector<std::int64_t> values(limit + 1, 0);
    const std::uint64_t segments = (limit + kSieveSegment - 1) / kSieveSegment;
    bool ok = true;
#pragma omp parallel reduction(&& : ok)
    {
        std::vector<std::uint64_t> acc;
        std::vector<std::uint8_t> exponent;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(segments); ++s) {
            const std::uint64_t lo = 1 + static_cast<std::uint64_t>(s) * kSieveSegment;
            const std::uint64_t hi = std::min(limit + 1, lo + kSieveSegment);
            ok = fill_segment(local, lo, hi, values.data() + lo, acc, exponent) && ok;
        }
    }
    require(ok, ErrorCode::OverflowRisk, "coefficient exceeds the 64-bit range");
    return CoefficientTable(field.label(), kind, 1, std::move(values));
}

}  // namespace

std::vector<std::int64_t> local_series(const SplittingType& st, int kmax, EulerSide side) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(kmax) + 1, 0);
    c[0] = 1;
    for (const auto& fac : st.factors) {
        const auto f = static_cast<std::size_t>(fac.f);
        if (side == EulerSide::zeta) {
            for (std::size_t k = f; k < c.size(); ++k) c[k] += c[k - f];
        } else {
            for (std::size_t k = c.size(); k-- > f;) c[k] -= c[k - f];
        }
    }
    return c;
}

LocalFactorTable::LocalFactorTable(const FieldDescriptor& field, std::uint64_t limit, EulerSide side)
    : field_(field), limit_(limit), side_(side) {
    small_primes_ = primes_up_to(isqrt(limit));
    offsets_.reserve(small_primes_.size() + 1);
    offsets_.push_back(0);
    for (auto p : small_primes_) {
        const auto s = local_series(splitting_type(field_, p), max_exponent(p, limit), side_);
        series_.insert(series_.end(), s.begin(), s.end());
        offsets_.push_back(series_.size());
    }
    if (field_.presentation() == Presentation::monogenic && limit <= kLinearTableLimit) {
        const auto primes = primes_up_to(limit);
        linear_by_value_.assign(limit + 1, 0);
#pragma omp parallel for schedule(dynamic, 4096)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(primes.size()); ++i) {
            const std::uint64_t p = primes[static_cast<std::size_t>(i)];
            linear_by_value_[p] = static_cast<std::int8_t>(degree_one_primes(field_, p));
        }
    }
}

std::span<const std::int64_t> LocalFactorTable::series(std::size_t index) const {
    return std::span(series_).subspan(offsets_[index], offsets_[index + 1] - offsets_[index]);
}

std::int64_t LocalFactorTable::linear(std::uint64_t q) const {
    const std::int64_t sign = side_ == EulerSide::zeta ? 1 : -1;
    if (field_.presentation() == Presentation::monogenic && !linear_by_value_.empty()) {
        return sign * linear_by_value_[q];
    }
    return sign * degree_one_primes(field_, q);
}

CoefficientTable sieve_dk(const FieldDescriptor& field, std::int64_t X) {
    return build_multiplicative(field, X, EulerSide::zeta, TableKind::piltz);
}

CoefficientTable sieve_mobius(const FieldDescriptor& field, std::int64_t X) {
    return build_multiplicative(field, X, EulerSide::inverse, TableKind::mobius_norm);
}

CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b) {
    require(a.length() == b.length(), ErrorCode::LengthMismatch,
            "tables of length " + std::to_string(a.length()) + " and " + std::to_string(b.length()));
    const std::int64_t X = a.length();
    const auto A = a.raw();
    const auto B = b.raw();
    std::vector<std::int64_t> out(static_cast<std::size_t>(X) + 1, 0);
    // Output blocks are owned by one thread each; the j loop over a block costs
    // O(hi), so blocks stay large.
    const std::int64_t threads = omp_get_max_threads();
    const std::int64_t block = std::max<std::int64_t>(1 << 18, (X + 4 * threads - 1) / (4 * threads));
    const std::int64_t blocks = (X + block - 1) / block;
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 1) reduction(&& : ok)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        const std::int64_t lo = 1 + blk * block;
        const std::int64_t hi = std::min(X + 1, lo + block);
        for (std::int64_t j = 1; j < hi; ++j) {
            const std::int64_t aj = A[static_cast<std::size_t>(j)];
            if (aj == 0) continue;
            const std::int64_t kmin = (lo + j - 1) / j;
            const std::int64_t kmax = (hi - 1) / j;
            for (std::int64_t k = kmin; k <= kmax; ++k) {
                std::int64_t term = 0;
                auto& slot = out[static_cast<std::size_t>(j * k)];
                ok = ok && checked_mul(aj, B[static_cast<std::size_t>(k)], term) && !__builtin_add_overflow(slot, term, &slot);
            }
        }
    }
    require(ok, ErrorCode::OverflowRisk, "convolution exceeds the 64-bit range");
    return CoefficientTable(a.label(), TableKind::generic, 1, std::move(out));
}

CoefficientTable piltz_table(const FieldDescriptor& field, int m, std::int64_t X) {
    require(m >= 1, ErrorCode::PreconditionViolated, "m must be >= 1");
    const CoefficientTable dk = sieve_dk(field, X);
    CoefficientTable acc = dk;
    for (int i = 1; i < m; ++i) acc = dirichlet_convolve(acc, dk);
    return acc.relabel(TableKind::piltz, m);
}

CoefficientTable f_kernel_table(const FieldDescriptor& field, int m, std::int64_t X) {
    const CoefficientTable mu = sieve_mobius(make_rational_field(), X);
    return dirichlet_convolve(piltz_table(field, m, X), mu).relabel(TableKind::f_kernel, m);
}

std::int64_t count_ideals(const CoefficientTable& table, double x) {
    require(std::isfinite(x), ErrorCode::PreconditionViolated, "x must be finite");
    if (x < 1) return 0;
    require(x < static_cast<double>(table.length()) + 1, ErrorCode::RangeExceeded,
            "x = " + std::to_string(x) + " beyond table length " + std::to_string(table.length()));
    const auto n = static_cast<std::int64_t>(std::floor(x));
    std::int64_t total = 0;
    for (std::int64_t l = 1; l <= n; ++l) {
        require(!__builtin_add_overflow(total, table[l], &total), ErrorCode::OverflowRisk, "partial sum overflow");
    }
    return total;
}

SummatoryTable::SummatoryTable(const CoefficientTable& table) : label_(table.label()) {
    prefix_.assign(static_cast<std::size_t>(table.length()) + 1, 0);
    for (std::int64_t l = 1; l <= table.length(); ++l) {
        require(!__builtin_add_overflow(prefix_[static_cast<std::size_t>(l - 1)], table[l], &prefix_[static_cast<std::size_t>(l)]),
                ErrorCode::OverflowRisk, "partial sum overflow");
    }
}

std::int64_t SummatoryTable::at(std::int64_t n) const {
    if (n <= 0) return 0;
    require(n <= length(), ErrorCode::RangeExceeded, "n = " + std::to_string(n) + " beyond table length");
    return prefix_[static_cast<std::size_t>(n)];
}

std::int64_t SummatoryTable::at(double x) const {
    require(std::isfinite(x), ErrorCode::PreconditionViolated, "x must be finite");
    if (x < 1) return 0;
    require(x < static_cast<double>(length()) + 1, ErrorCode::RangeExceeded, "x beyond table length");
    return at(static_cast<std::int64_t>(std::floor(x)));
}

u128 count_rprime(int r, int l, double x, const SummatoryTable& ideals, const CoefficientTable& mobius) {
    require(r >= 1 && l >= 1, ErrorCode::PreconditionViolated, "r and l must be >= 1");
    if (x < 1) return 0;
    const auto n = static_cast<std::uint64_t>(std::floor(x));
    require(static_cast<std::int64_t>(n) <= ideals.length(), ErrorCode::RangeExceeded, "ideal table too short");
    const std::uint64_t qmax = iroot(n, static_cast<unsigned>(r));
    require(static_cast<std::int64_t>(qmax) <= mobius.length(), ErrorCode::RangeExceeded, "Moebius table too short");
    i128 total = 0;
    bool ok = true;
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        const std::int64_t mu = mobius[static_cast<std::int64_t>(q)];
        if (mu == 0) continue;
        u128 qr = 1;
        for (int i = 0; i < r; ++i) qr *= q;
        const i128 count = ideals.at(static_cast<std::int64_t>(n / static_cast<std::uint64_t>(qr)));
        i128 power = 1;
        for (int i = 0; i < l; ++i) ok = ok && !__builtin_mul_overflow(power, count, &power);
        i128 term = 0;
        ok = ok && !__builtin_mul_overflow(power, static_cast<i128>(mu), &term) && !__builtin_add_overflow(total, term, &total);
    }
    require(ok, ErrorCode::OverflowRisk, "relatively r-prime count exceeds 128 bits");
    require(total >= 0, ErrorCode::PreconditionViolated, "negative count: tables are inconsistent");
    return static_cast<u128>(total);
}

u128 count_rprime(const FieldDescriptor& field, int r, int l, double x, const CoefficientTable& dk,
                  const CoefficientTable& mobius) {
    require(dk.label() == field.label() && mobius.label() == field.label(), ErrorCode::PreconditionViolated,
            "tables were built for a different field");
    return count_rprime(r, l, x, SummatoryTable(dk), mobius);
}

std::vector<std::int64_t> count_ideals_streamed(const FieldDescriptor& field, std::span<const double> xs) {
    std::vector<std::int64_t> answers(xs.size(), 0);
    std::vector<std::pair<std::uint64_t, std::size_t>> queries;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        require(std::isfinite(xs[i]), ErrorCode::PreconditionViolated, "x must be finite");
        if (xs[i] >= 1) queries.emplace_back(static_cast<std::uint64_t>(std::floor(xs[i])), i);
    }
    if (queries.empty()) return answers;
    std::sort(queries.begin(), queries.end());
    const std::uint64_t limit = queries.back().first;
    const LocalFactorTable local(field, limit, EulerSide::zeta);
    const std::uint64_t segments = (limit + kSieveSegment - 1) / kSieveSegment;
    std::vector<std::int64_t> segment_total(segments, 0);
    std::vector<std::int64_t> within(queries.size(), 0);  // partial sum inside the query's segment
    bool ok = true;
#pragma omp parallel reduction(&& : ok)
    {
        std::vector<std::int64_t> values(kSieveSegment);
        std::vector<std::uint64_t> acc;
        std::vector<std::uint8_t> exponent;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(segments); ++s) {
            const std::uint64_t lo = 1 + static_cast<std::uint64_t>(s) * kSieveSegment;
            const std::uint64_t hi = std::min(limit + 1, lo + kSieveSegment);
            ok = fill_segment(local, lo, hi, values.data(), acc, exponent) && ok;
            auto q = std::lower_bound(queries.begin(), queries.end(), std::make_pair(lo, std::size_t{0}));
            std::int64_t running = 0;
            std::uint64_t pos = lo;
            for (; q != queries.end() && q->first < hi; ++q) {
                for (; pos <= q->first; ++pos) running += values[pos - lo];
                within[static_cast<std::size_t>(q - queries.begin())] = running;
            }
            for (; pos < hi; ++pos) running += values[pos - lo];
            segment_total[static_cast<std::size_t>(s)] = running;
        }
    }
    require(ok, ErrorCode::OverflowRisk, "coefficient exceeds the 64-bit range");
    std::vector<std::int64_t> before(segments + 1, 0);
    for (std::uint64_t s = 0; s < segments; ++s) before[s + 1] = before[s] + segment_total[s];
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const std::uint64_t s = (queries[i].first - 1) / kSieveSegment;
        answers[queries[i].second] = before[s] + within[i];
    }
    return answers;
}

namespace serial {

namespace {

CoefficientTable linear_sieve(const FieldDescriptor& field, std::int64_t X, EulerSide side, TableKind kind) {
    require(X >= 1, ErrorCode::PreconditionViolated, "table length must be >= 1");
    const auto n = static_cast<std::size_t>(X);
    std::vector<std::uint32_t> spf(n + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (auto p : primes) {
            if (p > spf[i] || static_cast<std::uint64_t>(p) * i > n) break;
            spf[p * i] = p;
        }
    }
    // series per prime, straight from the splitting type
    std::vector<std::vector<std::int64_t>> series(n + 1);
    for (auto p : primes) series[p] = local_series(splitting_type(field, p), max_exponent(p, n), side);
    std::vector<std::int64_t> values(n + 1, 0);
    if (n >= 1) values[1] = 1;
    for (std::size_t l = 2; l <= n; ++l) {
        const std::uint32_t p = spf[l];
        std::size_t rest = l;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        require(checked_mul(values[rest], series[p][static_cast<std::size_t>(k)], values[l]), ErrorCode::OverflowRisk,
                "coefficient exceeds the 64-bit range");
    }
    return CoefficientTable(field.label(), kind, 1, std::move(values));
}

}  // namespace

CoefficientTable sieve_dk(const FieldDescriptor& field, std::int64_t X) {
    return linear_sieve(field, X, EulerSide::zeta, TableKind::piltz);
}

CoefficientTable sieve_mobius(const FieldDescriptor& field, std::int64_t X) {
    return linear_sieve(field, X, EulerSide::inverse, TableKind::mobius_norm);
}

CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b) {
    require(a.length() == b.length(), ErrorCode::LengthMismatch, "tables differ in length");
    const std::int64_t X = a.length();
    std::vector<std::int64_t> out(static_cast<std::size_t>(X) + 1, 0);
    for (std::int64_t j = 1; j <= X; ++j) {
        for (std::int64_t k = 1; j * k <= X; ++k) {
            std::int64_t term = 0;
            auto& slot = out[static_cast<std::size_t>(j * k)];
            require(checked_mul(a[j], b[k], term) && !__builtin_add_overflow(slot, term, &slot), ErrorCode::OverflowRisk,
                    "convolution exceeds the 64-bit range");
        }
    }
    return CoefficientTable(a.label(), TableKind::generic, 1, std::move(out));
}

}  // namespace serial

}  // namespace piltz
