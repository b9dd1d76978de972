#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "piltz/arith.hpp"
#include "piltz/error.hpp"
#include "piltz/field.hpp"
#include "piltz/field_io.hpp"
#include "piltz/poly_zp.hpp"

using namespace piltz;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::PreconditionViolated;
}

}  // namespace

TEST_CASE("quadratic fields from d") {
    const auto qi = make_quadratic_field(-1);
    CHECK(qi.fundamental_discriminant() == -4);
    CHECK(qi.discriminant_abs() == 4);
    CHECK(qi.r1() == 0);
    CHECK(qi.r2() == 1);

    const auto q5 = make_quadratic_field(5);
    CHECK(q5.fundamental_discriminant() == 5);
    CHECK(q5.discriminant_abs() == 5);
    CHECK(q5.r1() == 2);
    CHECK(q5.r2() == 0);

    CHECK(make_quadratic_field(2).fundamental_discriminant() == 8);
    CHECK(make_quadratic_field(-3).discriminant_abs() == 3);
    CHECK(make_quadratic_field(12).fundamental_discriminant() == 12);
    CHECK(code_of([] { make_quadratic_field(1); }) == ErrorCode::NotFundamental);
    CHECK(code_of([] { make_quadratic_field(0); }) == ErrorCode::NotFundamental);
    CHECK(code_of([] { make_quadratic_field(9); }) == ErrorCode::NotFundamental);
}

TEST_CASE("monogenic fields") {
    const auto gauss = make_monogenic_field({1, 0, 1});
    CHECK(gauss.degree() == 2);
    CHECK(gauss.discriminant_abs() == 4);
    CHECK(gauss.r1() == 0);
    CHECK(gauss.r2() == 1);

    const auto quartic = make_monogenic_field({1, -1, 0, 0, -1});
    CHECK(quartic.degree() == 4);
    CHECK(quartic.discriminant_abs() == 283);
    CHECK(quartic.r1() == 2);
    CHECK(quartic.r2() == 1);

    const auto cubic = make_monogenic_field({1, 0, -1, -1});
    CHECK(cubic.discriminant_abs() == 23);
    CHECK(cubic.discriminant() == -23);

    CHECK(code_of([] { make_monogenic_field({1, 0, -1}); }) == ErrorCode::Reducible);
    CHECK(code_of([] { make_monogenic_field({2, 0, 1}); }) == ErrorCode::NotMonic);
    CHECK(code_of([] { make_monogenic_field({1, 3}); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("kronecker symbol") {
    CHECK(kronecker_symbol(-4, 5) == 1);
    CHECK(kronecker_symbol(-4, 2) == 0);
    CHECK(kronecker_symbol(8, 7) == 1);
    for (std::int64_t d : {-4, -3, 5, 8, -7, 12, -8, 13})
        for (std::int64_t m = 1; m <= 300; ++m) REQUIRE(kronecker_symbol(d, m) == oracle::kronecker(d, m));
}

TEST_CASE("kronecker symbol is completely multiplicative") {
    for (std::int64_t d : {-4, 5, 8}) {
        std::vector<int> chi(1001);
        for (int a = 1; a <= 1000; ++a) chi[static_cast<std::size_t>(a)] = kronecker_symbol(d, a);
        for (int a = 1; a <= 1000; ++a)
            for (int b = 1; b <= 1000; ++b)
                REQUIRE(kronecker_symbol(d, std::int64_t{a} * b) ==
                        chi[static_cast<std::size_t>(a)] * chi[static_cast<std::size_t>(b)]);
    }
}

TEST_CASE("splitting types in Q(i)") {
    const auto qi = make_quadratic_field(-1);
    CHECK(splitting_type(qi, 5).factors == std::vector<PrimeFactor>{{1, 1}, {1, 1}});
    CHECK(splitting_type(qi, 2).factors == std::vector<PrimeFactor>{{2, 1}});
    CHECK(splitting_type(qi, 3).factors == std::vector<PrimeFactor>{{1, 2}});
    CHECK(code_of([&] { splitting_type(qi, 9); }) == ErrorCode::NotPrime);
}

TEST_CASE("splitting types satisfy sum e f = n and agree with brute force") {
    const auto primes = primes_up_to(10000);
    for (const auto& K : builtin_fields()) {
        CAPTURE(K.label());
        for (auto p : primes) {
            const auto st = splitting_type(K, p);
            REQUIRE(st.degree_sum() == K.degree());
            if (K.discriminant_abs() % p != 0) REQUIRE(st.unramified());
            int ones = 0;
            for (const auto& f : st.factors) ones += f.f == 1;
            REQUIRE(degree_one_primes(K, p) == ones);
            if (p > 60) continue;
            std::vector<int> expected;
            if (K.is_quadratic())
                expected = oracle::quadratic_degrees(K.fundamental_discriminant(), p);
            else if (K.is_rational())
                expected = {1};
            else
                expected = oracle::residue_degrees(K.coefficients(), p);
            std::vector<int> got;
            for (const auto& f : st.factors) got.push_back(f.f);
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            REQUIRE(got == expected);
        }
    }
}

TEST_CASE("quadratic splitting follows the kronecker symbol") {
    for (const auto& K : builtin_fields()) {
        if (!K.is_quadratic()) continue;
        for (auto p : primes_up_to(2000)) {
            const auto st = splitting_type(K, p);
            switch (kronecker_symbol(K.fundamental_discriminant(), p)) {
                case 1: REQUIRE(st.factors == std::vector<PrimeFactor>{{1, 1}, {1, 1}}); break;
                case 0: REQUIRE(st.factors == std::vector<PrimeFactor>{{2, 1}}); break;
                default: REQUIRE(st.factors == std::vector<PrimeFactor>{{1, 2}}); break;
            }
        }
    }
}

TEST_CASE("factorization mod p reproduces the polynomial") {
    const std::vector<std::vector<std::int64_t>> polys = {
        {-1, -1, 0, 1}, {-1, 0, 0, -1, 1}, {-1, -1, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 0, 1}, {6, 11, 6, 1}};
    for (const auto& f : polys) {
        for (auto p : primes_up_to(200)) {
            const auto target = zp::reduce(f, p);
            zp::Poly prod{1};
            for (const auto& fac : zp::factor(target, p))
                for (int i = 0; i < fac.multiplicity; ++i) prod = zp::mul(prod, fac.poly, p);
            REQUIRE(prod == target);
        }
    }
}

TEST_CASE("unramified primes of monogenic fields give squarefree reductions") {
    for (const auto& K : builtin_fields()) {
        if (K.presentation() != Presentation::monogenic) continue;
        std::vector<std::int64_t> low(K.coefficients().rbegin(), K.coefficients().rend());
        for (auto p : primes_up_to(3000)) {
            if (K.discriminant_abs() % p == 0) continue;
            for (const auto& fac : zp::factor(zp::reduce(low, p), p)) REQUIRE(fac.multiplicity == 1);
        }
    }
}

TEST_CASE("field files round trip and reject unknown keys") {
    const auto dir = std::filesystem::temp_directory_path() / "piltz_field_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "fields.json";
    save_fields(path, builtin_fields());
    const auto back = load_fields(path);
    REQUIRE(back.size() == builtin_fields().size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == builtin_fields()[i]);

    nlohmann::json bad = field_to_json(builtin_fields()[1]);
    bad["colour"] = "blue";
    CHECK(code_of([&] { field_from_json(bad); }) == ErrorCode::InvalidField);
    std::filesystem::remove_all(dir);
}

TEST_CASE("shipped descriptor file matches the built-in fields") {
    const auto shipped = load_fields(PILTZ_DATA_DIR "/fields.json");
    REQUIRE(shipped.size() == builtin_fields().size());
    for (std::size_t i = 0; i < shipped.size(); ++i) CHECK(shipped[i] == builtin_fields()[i]);
}
