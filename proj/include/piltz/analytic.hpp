#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "piltz/field.hpp"
#include "piltz/laurent.hpp"
#include "piltz/special.hpp"

namespace piltz {

/// s = sigma + i t.
struct ComplexPoint {
    double sigma = 0;
    double t = 0;
    cplx value() const { return {sigma, t}; }
};

/// rho_K = 2^{r1} (2 pi)^{r2} h R / (w sqrt(D)) from the stored invariants.
/// Throws Unsupported when the field carries none.
double class_number_residue(const FieldDescriptor& field);

/// Derivatives L^{(k)}(1, chi_d), k = 0..kmax, from generalized Stieltjes
/// constants of zeta(s, a/q).
std::vector<double> l_derivatives_at_one(std::int64_t d, int kmax);

/// Expansion of zeta_K about s = 1 with T regular coefficients c_0..c_{T-1}
/// after the pole term c_{-1}. Rational and quadratic fields accept T <= 10;
/// other fields only T = 0, through the residue formula.
LaurentSeries laurent_of_zeta_K(const FieldDescriptor& field, int T);

/// Coefficients p_0..p_{d} of P with Res_{s=1} series(s)^m x^s / s = x P(log x).
std::vector<double> main_term_polynomial(const LaurentSeries& series, int m);

/// Res_{s=1} series(s)^m x^s / s for x > 1.
double residue_main_term(const LaurentSeries& series, int m, double x);

struct EulerProduct {
    cplx value;
    double relative_error = 0;  // rigorous bound on |zeta_K - value| / |value|
    std::uint64_t prime_limit = 0;
};

/// Bound on |log prod_{p > P} local factors| for a degree-n field at Re s = sigma > 1.
double euler_tail_bound(int degree, double sigma, std::uint64_t prime_limit);

/// prod_{p <= P} prod_i (1 - p^{-f_i s})^{-1}, for Re s > 1.
EulerProduct euler_product_zeta_K(const FieldDescriptor& field, ComplexPoint s, std::uint64_t prime_limit);

/// zeta_K(s). Rational and quadratic fields: any s != 1. Other fields: Re s > 1
/// through an Euler product whose prime limit is chosen from the tail bound;
/// NonConvergence when no limit up to 2^24 reaches `tolerance`.
cplx zeta_K_value(const FieldDescriptor& field, ComplexPoint s, double tolerance = 1e-10);

/// |zeta_K(1-s) - D^{s-1/2} 2^{n(1-s)} pi^{-ns} Gamma(s)^n cos(pi s/2)^{r1+r2} sin(pi s/2)^{r2} zeta_K(s)|.
double functional_equation_residual(const FieldDescriptor& field, ComplexPoint s);

struct ConvexityRow {
    double t = 0;
    double re = 0;
    double im = 0;
    double modulus = 0;
    double theory_exponent = 0;
};

struct ConvexityScan {
    double sigma = 0;
    std::vector<ConvexityRow> rows;
    /// slope of log(running max of modulus) against log t
    double fitted_exponent = 0;
};

ConvexityScan convexity_scan(const FieldDescriptor& field, double sigma, std::span<const double> t_grid);
void write_convexity_csv(std::ostream& out, const ConvexityScan& scan);

enum class Trig { cos, sin };

struct AtkinsonResult {
    cplx value;
    double prediction = 0;       // tau(y) when y <= B, else 0
    double residual_budget = 0;  // the error terms with implied constant 1
};

/// (1 / 2 pi i) int_{A-iB}^{A+iB} Gamma(s) tau(pi s / 2) y^{-s} ds by adaptive
/// Simpson on unit panels. Needs y > 0 and 1 < A <= B.
AtkinsonResult atkinson_integral(double y, double A, double B, Trig tau, double tolerance = 1e-10);

}  // namespace piltz
