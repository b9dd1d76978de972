#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "piltz/error.hpp"
#include "piltz/field.hpp"
#include "piltz/special.hpp"

namespace piltz {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
};

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// B_{2j}/(2j)!
double bernoulli_over_factorial(int j) {
    double f = 1;
    for (int i = 2; i <= 2 * j; ++i) f *= i;
    return kBernoulli[static_cast<std::size_t>(j - 1)] / f;
}

}  // namespace

double bernoulli_even(int j) {
    require(j >= 1 && j <= 15, ErrorCode::PreconditionViolated, "Bernoulli index out of range");
    return kBernoulli[static_cast<std::size_t>(j - 1)];
}

cplx log_cos(cplx z) {
    // cos z = e^{-iz}(1 + e^{2iz})/2 when Im z >= 0, mirror otherwise
    const cplx i(0, 1);
    if (z.imag() >= 0) return -i * z + std::log(1.0 + std::exp(2.0 * i * z)) - std::log(2.0);
    return i * z + std::log(1.0 + std::exp(-2.0 * i * z)) - std::log(2.0);
}

cplx log_sin(cplx z) {
    const cplx i(0, 1);
    // sin z = (e^{iz} - e^{-iz}) / 2i
    if (z.imag() >= 0) return -i * z + std::log((std::exp(2.0 * i * z) - 1.0) / (2.0 * i));
    return i * z + std::log((1.0 - std::exp(-2.0 * i * z)) / (2.0 * i));
}

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) return std::log(kPi) - log_sin(kPi * z) - log_gamma(1.0 - z);
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx complex_gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx hurwitz_zeta(cplx s, double a) {
    require(a > 0, ErrorCode::PreconditionViolated, "Hurwitz parameter must be positive");
    require(std::abs(s - 1.0) > 0, ErrorCode::PoleAt1, "zeta(s, a) has a pole at s = 1");
    const int N = 20 + static_cast<int>(std::ceil(std::abs(s) / 2));
    cplx sum = 0;
    for (int n = N - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + a));
    const double base = N + a;
    const double log_base = std::log(base);
    const cplx head = std::exp(-s * log_base);
    sum += head * base / (s - 1.0) + head / 2.0;
    // (s)_{2j-1} base^{-s-2j+1}
    cplx rising = s;
    cplx power = head / base;
    for (int j = 1; j <= 15; ++j) {
        const cplx term = bernoulli_over_factorial(j) * rising * power;
        sum += term;
        rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        power /= base * base;
    }
    return sum;
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_l(cplx s, std::int64_t d) {
    const std::int64_t q = d < 0 ? -d : d;
    if (s == cplx(1, 0) && q > 1) {
        // the poles of zeta(s, a/q) cancel because the character sums to zero
        double l1 = 0;
        for (std::int64_t a = 1; a < q; ++a)
            l1 += kronecker_symbol(d, a) * stieltjes(0, static_cast<double>(a) / static_cast<double>(q));
        return l1 / static_cast<double>(q);
    }
    cplx sum = 0;
    for (std::int64_t a = 1; a <= q; ++a) {
        const int chi = kronecker_symbol(d, a);
        if (chi != 0) sum += static_cast<double>(chi) * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
    }
    return std::exp(-s * std::log(static_cast<double>(q))) * sum;
}

double stieltjes(int k, double a) {
    require(k >= 0 && k <= 12, ErrorCode::PreconditionViolated, "Stieltjes index must lie in 0..12");
    require(a > 0, ErrorCode::PreconditionViolated, "Stieltjes parameter must be positive");
    constexpr int N = 40;
    double sum = 0;
    for (int n = N - 1; n >= 0; --n) sum += std::pow(std::log(n + a), k) / (n + a);
    const double x = N + a;
    const double L = std::log(x);
    sum += std::pow(L, k) / x / 2 - std::pow(L, k + 1) / (k + 1);
    // derivatives of f = x^{-e} Q(log x): d/dx -> x^{-e-1} (Q' - e Q)
    std::vector<double> q(static_cast<std::size_t>(k) + 1, 0.0);
    q[static_cast<std::size_t>(k)] = 1;
    int e = 1;
    auto differentiate = [&] {
        std::vector<double> r(q.size(), 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            r[i] -= e * q[i];
            if (i > 0) r[i - 1] += static_cast<double>(i) * q[i];
        }
        q = std::move(r);
        ++e;
    };
    auto evaluate = [&] {
        double v = 0;
        for (std::size_t i = q.size(); i-- > 0;) v = v * L + q[i];
        return v * std::pow(x, -e);
    };
    differentiate();
    double last = 0;
    for (int j = 1; j <= 15; ++j) {
        last = bernoulli_over_factorial(j) * evaluate();
        sum -= last;
        differentiate();
        differentiate();
    }
    require(std::abs(last) < 1e-12, ErrorCode::NonConvergence,
            "Stieltjes remainder " + std::to_string(last) + " for k = " + std::to_string(k));
    return sum;
}

double alternating_sum(const std::function<double(int)>& a, int n) {
    const double root = 3 + std::sqrt(8.0);
    double d = std::pow(root, n);
    d = (d + 1 / d) / 2;
    double b = -1;
    double c = -d;
    double s = 0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    return s / d;
}

}  // namespace piltz
