#pragma once

#include <complex>
#include <cstdint>
#include <functional>

namespace piltz {

using cplx = std::complex<double>;

/// log Gamma(z) by the Lanczos approximation (g = 7) with reflection for
/// Re z < 1/2. The branch is not the principal one near the negative axis;
/// exp(k * log_gamma(z)) is unaffected for integer k.
cplx log_gamma(cplx z);
cplx complex_gamma(cplx z);

/// log cos(z) and log sin(z) without overflow for large |Im z|.
cplx log_cos(cplx z);
cplx log_sin(cplx z);

/// Hurwitz zeta(s, a) for s != 1, a > 0, by Euler-Maclaurin summation.
cplx hurwitz_zeta(cplx s, double a);

/// Riemann zeta(s), s != 1.
cplx riemann_zeta(cplx s);

/// Dirichlet L(s, chi_d) for the Kronecker character of a fundamental
/// discriminant d, via L = q^{-s} sum_a chi(a) zeta(s, a/q).
cplx dirichlet_l(cplx s, std::int64_t d);

/// Generalized Stieltjes constant gamma_k(a): zeta(s, a) = 1/(s-1) +
/// sum_k (-1)^k gamma_k(a) (s-1)^k / k!. Throws NonConvergence when the
/// Euler-Maclaurin remainder estimate exceeds 1e-12.
double stieltjes(int k, double a = 1.0);

/// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a(k)
/// with n terms; error about 5.8^{-n} relative for totally monotone a.
double alternating_sum(const std::function<double(int)>& a, int n = 40);

/// B_{2j} for j = 1..15.
double bernoulli_even(int j);

}  // namespace piltz
