#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numbers>
#include <ostream>

#include "piltz/analytic.hpp"
#include "piltz/arith.hpp"
#include "piltz/error.hpp"
#include "piltz/stats.hpp"

namespace piltz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxEulerPrimeLimit = 1ULL << 24;

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

bool analytic_everywhere(const FieldDescriptor& field) { return field.is_rational() || field.is_quadratic(); }

}  // namespace

double class_number_residue(const FieldDescriptor& field) {
    const auto& inv = field.invariants();
    require(inv.has_value(), ErrorCode::Unsupported, field.label() + " carries no class number, regulator and w");
    return std::pow(2.0, field.r1()) * std::pow(2 * kPi, field.r2()) * static_cast<double>(inv->class_number) *
           inv->regulator / (static_cast<double>(inv->roots_of_unity) * std::sqrt(static_cast<double>(field.discriminant_abs())));
}

std::vector<double> l_derivatives_at_one(std::int64_t d, int kmax) {
    const std::int64_t q = d < 0 ? -d : d;
    const double log_q = std::log(static_cast<double>(q));
    std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
    for (std::int64_t a = 1; a <= q; ++a) {
        const int chi = kronecker_symbol(d, a);
        if (chi == 0) continue;
        std::vector<double> g(static_cast<std::size_t>(kmax) + 1);
        for (int i = 0; i <= kmax; ++i) g[static_cast<std::size_t>(i)] = stieltjes(i, static_cast<double>(a) / static_cast<double>(q));
        // Taylor coefficient of q^{-s} zeta(s, a/q); the pole parts cancel over a full period
        for (int k = 0; k <= kmax; ++k) {
            double c = 0;
            for (int i = 0; i <= k; ++i) {
                const int j = k - i;
                c += (i % 2 == 0 ? 1 : -1) * g[static_cast<std::size_t>(i)] / factorial(i) * std::pow(-log_q, j) / factorial(j);
            }
            out[static_cast<std::size_t>(k)] += chi * c / static_cast<double>(q);
        }
    }
    for (int k = 0; k <= kmax; ++k) out[static_cast<std::size_t>(k)] *= factorial(k);
    return out;
}

LaurentSeries laurent_of_zeta_K(const FieldDescriptor& field, int T) {
    require(T >= 0, ErrorCode::PreconditionViolated, "truncation must be >= 0");
    if (!analytic_everywhere(field)) {
        require(T == 0, ErrorCode::Unsupported, field.label() + ": only the residue is available beyond quadratic fields");
        return LaurentSeries(1, {class_number_residue(field)});
    }
    require(T <= 10, ErrorCode::Unsupported, "truncation above 10 is not supported");
    // zeta(s) = 1/(s-1) + sum_k (-1)^k gamma_k (s-1)^k / k!, known through index T
    std::vector<double> z(static_cast<std::size_t>(T) + 2);
    z[0] = 1;
    for (int k = 0; k <= T; ++k) z[static_cast<std::size_t>(k) + 1] = (k % 2 == 0 ? 1 : -1) * stieltjes(k) / factorial(k);
    const LaurentSeries zeta(1, std::move(z));
    if (field.is_rational()) return LaurentSeries(1, std::vector<double>(zeta.coefficients().begin(), zeta.coefficients().end() - 1));
    const auto ld = l_derivatives_at_one(field.fundamental_discriminant(), T);
    std::vector<double> l(ld.size());
    for (std::size_t k = 0; k < ld.size(); ++k) l[k] = ld[k] / factorial(static_cast<int>(k));
    return zeta * LaurentSeries(0, std::move(l));
}

std::vector<double> main_term_polynomial(const LaurentSeries& series, int m) {
    require(m >= 1, ErrorCode::PreconditionViolated, "m must be >= 1");
    const LaurentSeries Z = series.pow(m);
    const int pole = Z.pole_order();
    require(Z.top() >= -1, ErrorCode::InsufficientTruncation,
            "series with " + std::to_string(series.truncation()) + " regular coefficients cannot give the residue of its " +
                std::to_string(m) + "-th power");
    if (pole == 0) return {0.0};
    // x^s/s = x sum_j (s-1)^j E_j(L), E_j = sum_{a+b=j} L^a/a! (-1)^b
    std::vector<double> p(static_cast<std::size_t>(pole), 0.0);
    for (int a = 0; a < pole; ++a) {
        double c = 0;
        for (int j = a; j < pole; ++j) c += Z[-1 - j] * ((j - a) % 2 == 0 ? 1 : -1);
        p[static_cast<std::size_t>(a)] = c / factorial(a);
    }
    return p;
}

double residue_main_term(const LaurentSeries& series, int m, double x) {
    require(x > 1, ErrorCode::PreconditionViolated, "x must exceed 1");
    const auto p = main_term_polynomial(series, m);
    const double L = std::log(x);
    double v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * L + p[i];
    return x * v;
}

double euler_tail_bound(int degree, double sigma, std::uint64_t prime_limit) {
    require(sigma > 1, ErrorCode::Unsupported, "the Euler product needs Re s > 1");
    const double P = static_cast<double>(std::max<std::uint64_t>(prime_limit, 2));
    // sum_{p > P} p^{-sigma} <= 1.25506 sigma P^{1-sigma} / ((sigma - 1) log P), from pi(x) < 1.25506 x / log x
    const double prime_tail = 1.25506 * sigma * std::pow(P, 1 - sigma) / ((sigma - 1) * std::log(P));
    return degree * prime_tail / (1 - std::pow(P, -sigma));
}

EulerProduct euler_product_zeta_K(const FieldDescriptor& field, ComplexPoint s, std::uint64_t prime_limit) {
    require(s.sigma > 1, ErrorCode::Unsupported, "the Euler product needs Re s > 1");
    const cplx z = s.value();
    cplx log_sum = 0;
    double abs_sum = 0;
    double terms = 0;
    for (auto p : primes_up_to(prime_limit)) {
        const double lp = std::log(static_cast<double>(p));
        for (const auto& fac : splitting_type(field, p).factors) {
            const cplx term = std::log(1.0 - std::exp(-z * (fac.f * lp)));
            log_sum -= term;
            abs_sum += std::abs(term);
            terms += 1;
        }
    }
    // a priori bound on the rounding in the summed logarithms and the final exp
    const double eps = std::numeric_limits<double>::epsilon();
    const double rounding = 4 * eps * (terms * abs_sum + std::abs(log_sum) + 1);
    const double b = euler_tail_bound(field.degree(), s.sigma, prime_limit);
    return {std::exp(log_sum), std::expm1(b + rounding), prime_limit};
}

cplx zeta_K_value(const FieldDescriptor& field, ComplexPoint s, double tolerance) {
    require(std::isfinite(s.sigma) && std::isfinite(s.t), ErrorCode::PreconditionViolated, "s must be finite");
    require(!(s.sigma == 1 && s.t == 0), ErrorCode::PoleAt1, "zeta_K has a pole at s = 1");
    if (field.is_rational()) return riemann_zeta(s.value());
    if (field.is_quadratic()) return riemann_zeta(s.value()) * dirichlet_l(s.value(), field.fundamental_discriminant());
    require(s.sigma > 1, ErrorCode::Unsupported, field.label() + ": continuation to Re s <= 1 is only available for quadratic fields");
    std::uint64_t P = 1024;
    while (P < kMaxEulerPrimeLimit && std::expm1(euler_tail_bound(field.degree(), s.sigma, P)) > tolerance) P *= 2;
    const double bound = std::expm1(euler_tail_bound(field.degree(), s.sigma, P));
    require(bound <= tolerance, ErrorCode::NonConvergence,
            field.label() + ": Euler product tail bound " + std::to_string(bound) + " at p <= " + std::to_string(P) +
                " exceeds the tolerance");
    return euler_product_zeta_K(field, s, P).value;
}

double functional_equation_residual(const FieldDescriptor& field, ComplexPoint s) {
    require(analytic_everywhere(field), ErrorCode::Unsupported, field.label() + ": needs the continuation to Re s < 1");
    const cplx z = s.value();
    require(std::abs(z - 1.0) >= 0.1, ErrorCode::NearSingularity, "s is within 0.1 of the pole at 1");
    const double k = std::round(s.sigma);
    require(k > 0 || std::abs(z - k) >= 0.1, ErrorCode::NearSingularity, "s is within 0.1 of a pole of Gamma(s) or zeta_K(1 - s)");
    const int n = field.degree();
    const double D = static_cast<double>(field.discriminant_abs());
    const cplx log_factor = (z - 0.5) * std::log(D) + static_cast<double>(n) * (1.0 - z) * std::log(2.0) -
                            static_cast<double>(n) * z * std::log(kPi) + static_cast<double>(n) * log_gamma(z) +
                            static_cast<double>(field.r1() + field.r2()) * log_cos(kPi * z / 2.0) +
                            static_cast<double>(field.r2()) * log_sin(kPi * z / 2.0);
    const cplx lhs = zeta_K_value(field, {1 - s.sigma, -s.t});
    const cplx rhs = std::exp(log_factor) * zeta_K_value(field, s);
    return std::abs(lhs - rhs);
}

ConvexityScan convexity_scan(const FieldDescriptor& field, double sigma, std::span<const double> t_grid) {
    require(!t_grid.empty(), ErrorCode::EmptyGrid, "convexity scan needs at least one t");
    require(analytic_everywhere(field), ErrorCode::Unsupported, field.label() + ": no continuation into the critical strip");
    require(sigma >= 0 && sigma <= 1, ErrorCode::PreconditionViolated, "sigma must lie in [0, 1]");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        require(t_grid[i] >= 2, ErrorCode::PreconditionViolated, "t values must be >= 2");
        require(i == 0 || t_grid[i] > t_grid[i - 1], ErrorCode::PreconditionViolated, "t grid must be increasing");
    }
    ConvexityScan scan;
    scan.sigma = sigma;
    scan.rows.resize(t_grid.size());
    const double theory = field.degree() * (1 - sigma) / 2;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(t_grid.size()); ++i) {
        const double t = t_grid[static_cast<std::size_t>(i)];
        const cplx v = zeta_K_value(field, {sigma, t});
        scan.rows[static_cast<std::size_t>(i)] = {t, v.real(), v.imag(), std::abs(v), theory};
    }
    if (scan.rows.size() >= 2) {
        std::vector<double> lx, mod;
        for (const auto& r : scan.rows) {
            lx.push_back(std::log(r.t));
            mod.push_back(r.modulus);
        }
        std::vector<double> ly;
        for (double m : running_max(mod)) ly.push_back(std::log(m));
        scan.fitted_exponent = least_squares(lx, ly).slope;
    } else {
        scan.fitted_exponent = std::nan("");
    }
    return scan;
}

void write_convexity_csv(std::ostream& out, const ConvexityScan& scan) {
    out << "t,re,im,modulus,theory_exponent\n";
    char line[256];
    for (const auto& r : scan.rows) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.re, r.im, r.modulus, r.theory_exponent);
        out << line;
    }
}

AtkinsonResult atkinson_integral(double y, double A, double B, Trig tau, double tolerance) {
    require(y > 0, ErrorCode::PreconditionViolated, "y must be positive");
    require(A > 1 && B >= A, ErrorCode::PreconditionViolated, "need 1 < A <= B");
    const double log_y = std::log(y);
    // integrand in t along s = A + it, including the 1/(2 pi) from ds = i dt
    auto g = [&](double t) {
        const cplx s(A, t);
        const cplx trig = tau == Trig::cos ? log_cos(kPi * s / 2.0) : log_sin(kPi * s / 2.0);
        return std::exp(log_gamma(s) + trig - s * log_y) / (2 * kPi);
    };
    const std::function<cplx(double, double, cplx, cplx, cplx, cplx, int)> simpson =
        [&](double a, double b, cplx fa, cplx fm, cplx fb, cplx whole, int depth) -> cplx {
        const double m = (a + b) / 2;
        const cplx flm = g((a + m) / 2);
        const cplx frm = g((m + b) / 2);
        const cplx left = (m - a) / 6 * (fa + 4.0 * flm + fm);
        const cplx right = (b - m) / 6 * (fm + 4.0 * frm + fb);
        const cplx diff = left + right - whole;
        if (std::abs(diff) <= 15 * tolerance * (b - a)) return left + right + diff / 15.0;
        require(depth < 40, ErrorCode::QuadratureFailure, "adaptive Simpson did not settle near t = " + std::to_string(m));
        return simpson(a, m, fa, flm, fm, left, depth + 1) + simpson(m, b, fm, frm, fb, right, depth + 1);
    };
    const auto panels = static_cast<std::int64_t>(std::ceil(2 * B));
    const double width = 2 * B / static_cast<double>(panels);
    std::vector<cplx> parts(static_cast<std::size_t>(panels));
    bool failed = false;
#pragma omp parallel for schedule(dynamic, 4) reduction(|| : failed)
    for (std::int64_t k = 0; k < panels; ++k) {
        const double a = -B + width * static_cast<double>(k);
        const double b = k + 1 == panels ? B : a + width;
        try {
            const cplx fa = g(a), fm = g((a + b) / 2), fb = g(b);
            parts[static_cast<std::size_t>(k)] = simpson(a, b, fa, fm, fb, (b - a) / 6 * (fa + 4.0 * fm + fb), 0);
        } catch (const Error&) {
            failed = true;
        }
    }
    require(!failed, ErrorCode::QuadratureFailure, "adaptive Simpson exceeded its depth limit");
    cplx value = 0;
    for (const auto& p : parts) value += p;

    AtkinsonResult out;
    out.value = value;
    const double root_y = std::sqrt(y);
    if (y <= B) {
        out.prediction = tau == Trig::cos ? std::cos(y) : std::sin(y);
        const double lg = std::log(B / y);
        const double near = lg > 0 ? std::min(1 / lg, std::sqrt(B)) : std::sqrt(B);
        out.residual_budget = near / root_y + std::pow(y, -A) * std::pow(B, A - 0.5) + 1 / root_y;
    } else {
        const double lg = std::log(y / B);
        const double near = std::min(1 / lg, std::sqrt(B));
        out.residual_budget = std::pow(y, -A) * (std::pow(B, A - 0.5) * near + std::pow(A, A - 0.5));
    }
    return out;
}

}  // namespace piltz
