#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace piltz {

enum class Presentation { rational, quadratic, monogenic };

std::string to_string(Presentation p);

/// Class-number-formula data; ingested, never computed.
struct FieldInvariants {
    std::int64_t class_number = 1;
    double regulator = 1.0;
    std::int64_t roots_of_unity = 2;

    friend bool operator==(const FieldInvariants&, const FieldInvariants&) = default;
};

/// A number field K presented either by a fundamental quadratic discriminant
/// or by a monic polynomial f with Z[theta] = O_K. The rational field is
/// admitted as the degree-1 case. Instances are immutable; build them with
/// the factory functions below.
class FieldDescriptor {
public:
    const std::string& label() const { return label_; }
    int degree() const { return degree_; }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    std::int64_t discriminant_abs() const { return disc_abs_; }
    /// Signed discriminant: (-1)^{r2} D_K.
    std::int64_t discriminant() const { return r2_ % 2 == 0 ? disc_abs_ : -disc_abs_; }
    Presentation presentation() const { return presentation_; }
    bool is_quadratic() const { return presentation_ == Presentation::quadratic; }
    bool is_rational() const { return presentation_ == Presentation::rational; }
    /// Fundamental discriminant; only meaningful for quadratic fields.
    std::int64_t fundamental_discriminant() const { return fundamental_; }
    /// Defining polynomial, leading coefficient first. Empty unless monogenic.
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    /// True when disc(f) is squarefree, which proves Z[theta] = O_K.
    bool index_certified() const { return index_certified_; }
    const std::optional<FieldInvariants>& invariants() const { return invariants_; }

    FieldDescriptor with_label(std::string label) const;
    FieldDescriptor with_invariants(FieldInvariants inv) const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    friend FieldDescriptor make_rational_field();
    friend FieldDescriptor make_quadratic_field(std::int64_t d);
    friend FieldDescriptor make_monogenic_field(const std::vector<std::int64_t>& coeffs);

    std::string label_;
    int degree_ = 1;
    int r1_ = 1;
    int r2_ = 0;
    std::int64_t disc_abs_ = 1;
    Presentation presentation_ = Presentation::rational;
    std::int64_t fundamental_ = 1;
    std::vector<std::int64_t> coeffs_;
    bool index_certified_ = true;
    std::optional<FieldInvariants> invariants_;
};

/// One factor p O_K = ... P^e ... with N(P) = p^f.
struct PrimeFactor {
    int e = 1;
    int f = 1;
    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct SplittingType {
    std::uint64_t prime = 2;
    std::vector<PrimeFactor> factors;  // sorted by (f, e)

    int degree_sum() const;
    bool unramified() const;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

FieldDescriptor make_rational_field();

/// Accepts a fundamental discriminant or a squarefree d != 0, 1 (normalized
/// to d or 4d). Throws NotFundamental otherwise.
FieldDescriptor make_quadratic_field(std::int64_t d);

/// coeffs: monic polynomial, leading coefficient first, degree >= 2.
/// Throws NotMonic, DegreeTooSmall or Reducible.
FieldDescriptor make_monogenic_field(const std::vector<std::int64_t>& coeffs);

/// Kronecker symbol (d / m) for m >= 1.
int kronecker_symbol(std::int64_t d, std::int64_t m);

/// Decomposition of p in O_K. Throws NotPrime.
SplittingType splitting_type(const FieldDescriptor& field, std::uint64_t p);

/// Number of prime ideals of norm p above p, i.e. #{i : f_i = 1}. Agrees
/// with splitting_type but avoids the full factorization.
int degree_one_primes(const FieldDescriptor& field, std::uint64_t p);

}  // namespace piltz
