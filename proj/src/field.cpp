#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "piltz/arith.hpp"
#include "piltz/error.hpp"
#include "piltz/field.hpp"
#include "piltz/poly_z.hpp"
#include "piltz/poly_zp.hpp"

namespace piltz {

namespace {

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
    // n odd, 0 <= a < n
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::vector<std::int64_t> ascending(const std::vector<std::int64_t>& leading_first) {
    return {leading_first.rbegin(), leading_first.rend()};
}

std::string polynomial_label(const std::vector<std::int64_t>& coeffs) {
    std::ostringstream out;
    const int n = static_cast<int>(coeffs.size()) - 1;
    bool first = true;
    for (int i = 0; i <= n; ++i) {
        const std::int64_t c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const int power = n - i;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (mag != 1 || power == 0) out << mag;
        if (power >= 1) out << 'x';
        if (power >= 2) out << '^' << power;
        first = false;
    }
    return out.str();
}

// Possible degrees of a proper rational factor given the factor degrees mod p.
std::set<int> subset_sums(const std::vector<int>& degrees) {
    std::set<int> sums{0};
    for (int d : degrees) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

bool irreducible_over_q(const std::vector<std::int64_t>& asc, const zpoly::BigInt& disc) {
    const int n = static_cast<int>(asc.size()) - 1;
    if (!zpoly::integer_roots(zpoly::from_int64(asc)).empty()) return false;
    if (n <= 3) return true;
    // a rational factorization forces a common factor degree at every good prime
    std::set<int> admissible;
    for (int d = 0; d <= n; ++d) admissible.insert(d);
    int tried = 0;
    for (std::uint64_t p = 2; tried < 60 && p < 100000; ++p) {
        if (!is_prime(p) || disc % p == 0) continue;
        ++tried;
        std::vector<int> degrees;
        for (const auto& fac : zp::factor(zp::reduce(asc, p), p)) {
            for (int k = 0; k < fac.multiplicity; ++k) degrees.push_back(zp::degree(fac.poly));
        }
        if (degrees.size() == 1) return true;
        std::set<int> sums = subset_sums(degrees);
        std::set<int> kept;
        std::set_intersection(admissible.begin(), admissible.end(), sums.begin(), sums.end(),
                              std::inserter(kept, kept.begin()));
        admissible = std::move(kept);
        if (admissible.size() <= 2) return true;  // only {0, n}
    }
    return false;
}

}  // namespace

std::string to_string(Presentation p) {
    switch (p) {
        case Presentation::rational: return "rational";
        case Presentation::quadratic: return "quadratic";
        case Presentation::monogenic: return "monogenic";
    }
    return "unknown";
}

FieldDescriptor FieldDescriptor::with_label(std::string label) const {
    FieldDescriptor copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

FieldDescriptor FieldDescriptor::with_invariants(FieldInvariants inv) const {
    require(inv.class_number >= 1 && inv.regulator > 0 && inv.roots_of_unity >= 2 && inv.roots_of_unity % 2 == 0,
            ErrorCode::InvalidField, "invariants must satisfy h >= 1, R > 0, w even and >= 2");
    FieldDescriptor copy = *this;
    copy.invariants_ = inv;
    return copy;
}

int SplittingType::degree_sum() const {
    int total = 0;
    for (const auto& fac : factors) total += fac.e * fac.f;
    return total;
}

bool SplittingType::unramified() const {
    return std::all_of(factors.begin(), factors.end(), [](const PrimeFactor& f) { return f.e == 1; });
}

FieldDescriptor make_rational_field() {
    FieldDescriptor k;
    k.label_ = "Q";
    k.invariants_ = FieldInvariants{1, 1.0, 2};
    return k;
}

FieldDescriptor make_quadratic_field(std::int64_t d) {
    require(d != 0 && d != 1, ErrorCode::NotFundamental, "d = " + std::to_string(d) + " does not define a quadratic field");
    std::int64_t fundamental = 0;
    if (mod_positive(d, 4) == 1 && is_squarefree(d)) {
        fundamental = d;
    } else if (is_squarefree(d)) {
        require(d < std::numeric_limits<std::int64_t>::max() / 4 && d > std::numeric_limits<std::int64_t>::min() / 4,
                ErrorCode::NotFundamental, "d too large");
        fundamental = 4 * d;
    } else if (mod_positive(d, 4) == 0) {
        const std::int64_t k = d / 4;
        const std::int64_t r = mod_positive(k, 4);
        require(k != 1 && is_squarefree(k) && (r == 2 || r == 3), ErrorCode::NotFundamental,
                "d = " + std::to_string(d) + " is not a fundamental discriminant");
        fundamental = d;
    } else {
        fail(ErrorCode::NotFundamental, "d = " + std::to_string(d) + " has a square factor");
    }
    FieldDescriptor k;
    k.presentation_ = Presentation::quadratic;
    k.degree_ = 2;
    k.fundamental_ = fundamental;
    k.disc_abs_ = fundamental < 0 ? -fundamental : fundamental;
    k.r1_ = fundamental > 0 ? 2 : 0;
    k.r2_ = fundamental > 0 ? 0 : 1;
    const std::int64_t kernel = mod_positive(fundamental, 4) == 1 ? fundamental : fundamental / 4;
    k.label_ = "Q(sqrt(" + std::to_string(kernel) + "))";
    k.index_certified_ = true;
    return k;
}

FieldDescriptor make_monogenic_field(const std::vector<std::int64_t>& coeffs) {
    require(coeffs.size() >= 3, ErrorCode::DegreeTooSmall, "monogenic fields need degree >= 2");
    require(coeffs.front() == 1, ErrorCode::NotMonic, "leading coefficient must be 1");
    const auto asc = ascending(coeffs);
    const zpoly::BigInt disc = zpoly::discriminant(zpoly::from_int64(asc));
    require(disc != 0 && irreducible_over_q(asc, disc), ErrorCode::Reducible,
            polynomial_label(coeffs) + " is reducible (or not certified irreducible)");
    const zpoly::BigInt disc_abs = abs(disc);
    require(disc_abs <= std::numeric_limits<std::int64_t>::max(), ErrorCode::Unsupported, "discriminant exceeds 64 bits");

    FieldDescriptor k;
    k.presentation_ = Presentation::monogenic;
    k.degree_ = static_cast<int>(coeffs.size()) - 1;
    k.coeffs_ = coeffs;
    k.disc_abs_ = static_cast<std::int64_t>(disc_abs);
    k.r1_ = zpoly::count_real_roots(zpoly::from_int64(asc));
    k.r2_ = (k.degree_ - k.r1_) / 2;
    k.index_certified_ = is_squarefree(k.disc_abs_);
    k.label_ = polynomial_label(coeffs);
    return k;
}

int kronecker_symbol(std::int64_t d, std::int64_t m) {
    require(m >= 1, ErrorCode::PreconditionViolated, "kronecker symbol needs m >= 1");
    int result = 1;
    auto um = static_cast<std::uint64_t>(m);
    while ((um & 1) == 0) {
        um >>= 1;
        if (d % 2 == 0) return 0;
        const std::int64_t r = mod_positive(d, 8);
        if (r == 3 || r == 5) result = -result;
    }
    if (um == 1) return result;
    const auto a = static_cast<std::uint64_t>(mod_positive(d, static_cast<std::int64_t>(um)));
    return result * jacobi(a, um);
}

SplittingType splitting_type(const FieldDescriptor& field, std::uint64_t p) {
    require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(p < (1ULL << 32), ErrorCode::Unsupported, "primes must be below 2^32");
    SplittingType st;
    st.prime = p;
    switch (field.presentation()) {
        case Presentation::rational:
            st.factors = {{1, 1}};
            break;
        case Presentation::quadratic: {
            const int chi = kronecker_symbol(field.fundamental_discriminant(), static_cast<std::int64_t>(p));
            if (chi == 1) st.factors = {{1, 1}, {1, 1}};
            else if (chi == -1) st.factors = {{1, 2}};
            else st.factors = {{2, 1}};
            break;
        }
        case Presentation::monogenic: {
            const auto asc = ascending(field.coefficients());
            for (const auto& fac : zp::factor(zp::reduce(asc, p), p)) {
                st.factors.push_back({fac.multiplicity, zp::degree(fac.poly)});
            }
            std::sort(st.factors.begin(), st.factors.end(),
                      [](const PrimeFactor& a, const PrimeFactor& b) { return a.f != b.f ? a.f < b.f : a.e < b.e; });
            break;
        }
    }
    return st;
}

int degree_one_primes(const FieldDescriptor& field, std::uint64_t p) {
    switch (field.presentation()) {
        case Presentation::rational:
            return 1;
        case Presentation::quadratic:
            return 1 + kronecker_symbol(field.fundamental_discriminant(), static_cast<std::int64_t>(p));
        case Presentation::monogenic: {
            const auto asc = ascending(field.coefficients());
            return zp::count_distinct_roots(zp::reduce(asc, p), p);
        }
    }
    return 0;
}

}  // namespace piltz
