#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <set>

#include "piltz/bounds.hpp"
#include "piltz/error.hpp"

namespace piltz {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

ExponentBound entry(BoundSource source, Rational theta, bool valid, bool epsilon = true, double log_power = 0) {
    ExponentBound b;
    b.source = source;
    b.theta = theta;
    b.valid = valid;
    b.epsilon = epsilon;
    b.log_power = log_power;
    return b;
}

// e(x) = exp(2 pi i x), reduced mod 1 first
cplx unit(double x) {
    const double f = x - std::floor(x);
    const double angle = 2 * std::numbers::pi * f;
    return {std::cos(angle), std::sin(angle)};
}

struct KahanComplex {
    double re = 0, im = 0, cre = 0, cim = 0;
    void add(cplx z) {
        const double yr = z.real() - cre;
        const double tr = re + yr;
        cre = (tr - re) - yr;
        re = tr;
        const double yi = z.imag() - cim;
        const double ti = im + yi;
        cim = (ti - im) - yi;
        im = ti;
    }
    cplx value() const { return {re, im}; }
};

Permutation compose(const Permutation& a, const Permutation& b) {
    // (a o b)(i) = a(b(i))
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

Permutation inverse(const Permutation& a) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return c;
}

}  // namespace

std::string to_string(BoundSource source) {
    switch (source) {
        case BoundSource::huxley: return "huxley";
        case BoundSource::muller: return "muller";
        case BoundSource::bordelles: return "bordelles";
        case BoundSource::lao: return "lao";
        case BoundSource::nowak: return "nowak";
        case BoundSource::cub: return "cub";
        case BoundSource::lindelof: return "lindelof";
        case BoundSource::omega: return "omega";
        case BoundSource::dirichlet_m2: return "dirichlet_m2";
        case BoundSource::cubi_uniform: return "cubi_uniform";
        case BoundSource::rprime_uniform: return "rprime_uniform";
        case BoundSource::rprime_lindelof: return "rprime_lindelof";
    }
    return "unknown";
}

Rational beta_limit(int n) { return Rational(8, 2 * n + 5); }

std::vector<ExponentBound> evaluate_catalog(int n, int m, std::optional<Rational> beta) {
    require(n >= 1 && m >= 1, ErrorCode::PreconditionViolated, "need n >= 1 and m >= 1");
    const std::int64_t mn = static_cast<std::int64_t>(m) * n;
    std::vector<ExponentBound> out;
    out.push_back(entry(BoundSource::huxley, Rational(131, 416), n == 2 && m == 1, false, 18627.0 / 8320.0));
    out.push_back(entry(BoundSource::muller, Rational(43, 96), n == 3 && m == 1));
    out.push_back(entry(BoundSource::bordelles, n == 4 ? Rational(41, 72) : Rational(2 * n - 3, 2 * n + 1),
                        m == 1 && n >= 4 && n <= 10));
    out.push_back(entry(BoundSource::lao, Rational(n + 3, n + 6), m == 1 && n >= 11));
    if (mn <= 6) {
        out.push_back(entry(BoundSource::nowak, 1 - Rational(2, mn) + Rational(8, mn * (5 * mn + 2)), n >= 2 && mn >= 3, false,
                            m - 1 - 10.0 * (m - 2) / (5.0 * n + 2)));
    } else {
        out.push_back(entry(BoundSource::nowak, 1 - Rational(2, mn) + Rational(3, 2 * mn * mn), n >= 2, false,
                            m - 1 - 2.0 * (m - 2) / static_cast<double>(mn)));
    }
    out.push_back(entry(BoundSource::cub, Rational(2 * mn - 3, 2 * mn + 1), mn >= 4));
    auto lindelof = entry(BoundSource::lindelof, Rational(1, 2), true);
    lindelof.conditional = true;
    out.push_back(lindelof);
    const Rational omega_theta = Rational(1, 2) - Rational(1, 2 * mn);
    auto omega = entry(BoundSource::omega, omega_theta, n >= 2, false, to_double(omega_theta));
    omega.lower_bound = true;
    out.push_back(omega);
    out.push_back(entry(BoundSource::dirichlet_m2, Rational(517, 1648), n == 1 && m == 2));
    if (beta) {
        const bool ok = m == 1 && n >= 2 && *beta >= 0 && *beta < beta_limit(n);
        out.push_back(entry(BoundSource::cubi_uniform, Rational(2 * n - 3, 2 * n + 1) + 2 * *beta / (2 * n + 1), ok));
    }
    return out;
}

std::vector<ExponentBound> exponent_catalog(int n, int m, std::optional<Rational> beta) {
    std::vector<ExponentBound> out;
    for (auto& b : evaluate_catalog(n, m, beta)) {
        if (b.valid) out.push_back(b);
    }
    ExponentBound* best = nullptr;
    for (auto& b : out) {
        if (b.conditional || b.lower_bound) continue;
        if (best == nullptr || b.theta < best->theta) best = &b;
    }
    if (best != nullptr) best->best = true;
    return out;
}

nlohmann::json catalog_to_json(const std::vector<ExponentBound>& bounds) {
    auto arr = nlohmann::json::array();
    for (const auto& b : bounds) {
        arr.push_back({{"source", to_string(b.source)},
                       {"theta_num", b.theta.numerator()},
                       {"theta_den", b.theta.denominator()},
                       {"log_power", b.log_power},
                       {"epsilon", b.epsilon},
                       {"valid", b.valid},
                       {"conditional", b.conditional},
                       {"lower_bound", b.lower_bound},
                       {"best", b.best}});
    }
    return arr;
}

std::vector<ExponentBound> rprime_exponents(int n, int r, int l, Rational beta) {
    require(n >= 1 && r >= 1 && l >= 1, ErrorCode::PreconditionViolated, "need n, r, l >= 1");
    const std::int64_t d = 2 * n + 1;
    const bool ok = r * l >= 2 && beta >= 0 && beta < beta_limit(n);
    Rational uniform;
    Rational lindelof;
    if (r * l == 2) {
        uniform = Rational(4 * n - 2, r * d) + 4 * beta / d;
        lindelof = Rational(3, 2 * r);
    } else {
        uniform = l - Rational(4, d) + (2 * n + 5 - d * l) * beta / (2 * d);
        lindelof = Rational(2 * l - 1, 2);
    }
    auto cond = entry(BoundSource::rprime_lindelof, lindelof, r * l >= 2);
    cond.conditional = true;
    return {entry(BoundSource::rprime_uniform, uniform, ok), cond};
}

GaloisData cyclic_galois_data(int n) {
    require(n >= 1, ErrorCode::PreconditionViolated, "order must be >= 1");
    GaloisData data;
    for (int k = 0; k < n; ++k) {
        Permutation p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + k) % n;
        data.group.push_back(p);
    }
    data.subgroup.push_back(data.group[0]);
    return data;
}

GaloisData symmetric_galois_data(int N) {
    require(N >= 1 && N <= 7, ErrorCode::PreconditionViolated, "symmetric groups up to S_7");
    GaloisData data;
    Permutation p(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
        data.group.push_back(p);
        if (p[static_cast<std::size_t>(N - 1)] == N - 1) data.subgroup.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return data;
}

void validate(const GaloisData& data) {
    require(!data.group.empty(), ErrorCode::NotAGroup, "empty group");
    require(data.group.size() <= 10000, ErrorCode::PreconditionViolated, "groups are capped at 10^4 elements");
    const std::size_t N = data.group[0].size();
    for (const auto& g : data.group) {
        require(g.size() == N, ErrorCode::NotAGroup, "permutations act on different sets");
        std::vector<bool> seen(N, false);
        for (int x : g) {
            require(x >= 0 && static_cast<std::size_t>(x) < N && !seen[static_cast<std::size_t>(x)], ErrorCode::NotAGroup,
                    "entry is not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    const std::set<Permutation> G(data.group.begin(), data.group.end());
    require(G.size() == data.group.size(), ErrorCode::NotAGroup, "repeated elements");
    Permutation id(N);
    for (std::size_t i = 0; i < N; ++i) id[i] = static_cast<int>(i);
    require(G.contains(id), ErrorCode::NotAGroup, "identity missing");
    for (const auto& a : data.group) {
        require(G.contains(inverse(a)), ErrorCode::NotAGroup, "not closed under inverses");
        for (const auto& b : data.group) require(G.contains(compose(a, b)), ErrorCode::NotAGroup, "not closed under composition");
    }
    const std::set<Permutation> H(data.subgroup.begin(), data.subgroup.end());
    require(!H.empty() && H.size() == data.subgroup.size(), ErrorCode::NotASubgroup, "subgroup empty or repeated");
    require(H.contains(id), ErrorCode::NotASubgroup, "identity missing from H");
    for (const auto& a : data.subgroup) {
        require(G.contains(a), ErrorCode::NotASubgroup, "H is not inside G");
        for (const auto& b : data.subgroup) require(H.contains(compose(a, inverse(b))), ErrorCode::NotASubgroup, "H is not closed");
    }
    require(G.size() % H.size() == 0, ErrorCode::NotASubgroup, "|H| does not divide |G|");
}

OmegaConstants omega_constants(const GaloisData& data, int m) {
    validate(data);
    require(m >= 1, ErrorCode::PreconditionViolated, "m must be >= 1");
    const int n = data.degree();
    require(n >= 2, ErrorCode::PreconditionViolated, "need [G : H] >= 2");
    const std::set<Permutation> H(data.subgroup.begin(), data.subgroup.end());
    std::vector<Permutation> inverses;
    for (const auto& s : data.group) inverses.push_back(inverse(s));
    const auto h = static_cast<std::int64_t>(H.size());
    std::vector<std::int64_t> count(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& tau : data.group) {
        // tau in sigma H sigma^{-1}  <=>  sigma^{-1} tau sigma in H
        std::int64_t c = 0;
        for (std::size_t i = 0; i < data.group.size(); ++i) {
            if (H.contains(compose(inverses[i], compose(tau, data.group[i])))) ++c;
        }
        if (c > 0) ++count[static_cast<std::size_t>(c / h)];
    }
    OmegaConstants out;
    const auto order = static_cast<std::int64_t>(data.group.size());
    const double mnd = static_cast<double>(m) * n;
    double sum = 0;
    for (int nu = 1; nu <= n; ++nu) {
        const Rational d(count[static_cast<std::size_t>(nu)], order);
        out.delta.push_back(d);
        if (d > 0) ++out.R;
        sum += to_double(d) * std::pow(static_cast<double>(nu), 2 * mnd / (mnd + 1));
    }
    out.kappa = (mnd + 1) / (2 * mnd) * (sum - 1);
    out.lambda = (mnd + 1) / (4 * mnd) * out.R + (mnd - 1) / (2 * mnd);
    return out;
}

BalanceResult srinivasan_balance(const std::vector<BalanceTerm>& growing, const std::vector<BalanceTerm>& shrinking,
                                 double Q1, double Q2) {
    require(!growing.empty() && !shrinking.empty(), ErrorCode::EmptyTermList, "both term lists must be non-empty");
    require(Q2 >= Q1, ErrorCode::InvalidRange, "Q2 < Q1");
    Q1 = std::max(Q1, 1.0);
    require(Q2 >= Q1, ErrorCode::InvalidRange, "Q2 < 1");
    for (const auto& t : growing) {
        require(t.coefficient >= 0 && t.exponent >= 0, ErrorCode::PreconditionViolated, "growing terms need A >= 0, u >= 0");
    }
    for (const auto& t : shrinking) {
        require(t.coefficient > 0 && t.exponent > 0, ErrorCode::PreconditionViolated, "shrinking terms need B > 0, v > 0");
    }
    auto phi = [&](double w) {
        double s = 0;
        for (const auto& t : growing) s += t.coefficient * std::exp(t.exponent * w);
        for (const auto& t : shrinking) s += t.coefficient * std::exp(-t.exponent * w);
        return s;
    };
    // phi is convex in w = log q
    double a = std::log(Q1), b = std::log(Q2);
    const double ratio = (std::sqrt(5.0) - 1) / 2;
    double c = b - ratio * (b - a), d = a + ratio * (b - a);
    double fc = phi(c), fd = phi(d);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = phi(d);
        }
    }
    double w = (a + b) / 2;
    double best = phi(w);
    for (double edge : {std::log(Q1), std::log(Q2)}) {
        if (phi(edge) < best) {
            best = phi(edge);
            w = edge;
        }
    }
    double cross = 0;
    for (const auto& g : growing) {
        for (const auto& s : shrinking) {
            if (g.coefficient == 0) continue;
            cross += std::exp((s.exponent * std::log(g.coefficient) + g.exponent * std::log(s.coefficient)) / (g.exponent + s.exponent));
        }
    }
    double edges = 0;
    for (const auto& g : growing) edges += g.coefficient * std::pow(Q1, g.exponent);
    for (const auto& s : shrinking) edges += s.coefficient * std::pow(Q2, -s.exponent);
    const auto terms = static_cast<double>(growing.size() + shrinking.size());
    return {std::exp(w), best, terms * (cross + edges)};
}

cplx bilinear_expsum(const BilinearInstance& in) {
    const auto M1 = in.M + static_cast<std::int64_t>(in.a.size());
    const auto N1 = in.N + static_cast<std::int64_t>(in.b.size());
    require(in.M >= 1 && in.M < M1 && M1 <= 2 * in.M, ErrorCode::RangeViolation, "need 1 <= M < M1 <= 2M");
    require(in.N >= 1 && in.N < N1 && N1 <= 2 * in.N, ErrorCode::RangeViolation, "need 1 <= N < N1 <= 2N");
    std::vector<double> np(in.b.size());
    for (std::size_t j = 0; j < in.b.size(); ++j) {
        np[j] = std::pow(static_cast<double>(in.N + 1 + static_cast<std::int64_t>(j)) / static_cast<double>(in.N), in.beta);
    }
    KahanComplex outer;
    for (std::size_t i = 0; i < in.a.size(); ++i) {
        const double mp =
            in.X * std::pow(static_cast<double>(in.M + 1 + static_cast<std::int64_t>(i)) / static_cast<double>(in.M), in.alpha);
        KahanComplex inner;
        for (std::size_t j = 0; j < in.b.size(); ++j) inner.add(in.b[j] * unit(mp * np[j]));
        outer.add(in.a[i] * inner.value());
    }
    return outer.value();
}

PropSumResult prop_ideal_sum(const FieldDescriptor& field, int m, double x, const PropWindow& window,
                             const CoefficientTable& f_table) {
    require(m >= 1 && x > 0 && window.S >= 1, ErrorCode::PreconditionViolated, "need m >= 1, x > 0, S >= 1");
    require(window.S <= (1 << 12), ErrorCode::PreconditionViolated, "S is capped at 2^12");
    require(f_table.length() >= 2 * window.S, ErrorCode::TableTooShort,
            "F table of length " + std::to_string(f_table.length()) + " needs at least " + std::to_string(2 * window.S));
    const double mn = static_cast<double>(m) * field.degree();
    const double log_scale = std::log(x) - m * std::log(static_cast<double>(field.discriminant_abs()));
    std::vector<std::pair<std::int64_t, std::int64_t>> windows;
    for (std::int64_t M = 1; M <= window.S; M *= 2) {
        for (std::int64_t N = 1; N <= window.S; N *= 2) {
            const double prod = static_cast<double>(M) * static_cast<double>(N);
            if (prod * window.ratio >= static_cast<double>(window.S) && prod <= static_cast<double>(window.S) * window.ratio) {
                windows.emplace_back(M, N);
            }
        }
    }
    require(!windows.empty(), ErrorCode::NoAdmissibleWindow, "no dyadic M, N with M N comparable to S");
    std::vector<PropSumResult> per(windows.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(windows.size()); ++w) {
        const auto [M, N] = windows[static_cast<std::size_t>(w)];
        std::vector<cplx> column(static_cast<std::size_t>(N), 0.0);
        PropSumResult r;
        r.M = M;
        r.N = N;
        for (std::int64_t l = M + 1; l <= 2 * M; ++l) {
            const std::int64_t F = f_table[l];
            cplx row = 0;
            for (std::int64_t k = N + 1; k <= 2 * N; ++k) {
                if (F != 0) {
                    const double phase = mn * std::exp((log_scale + std::log(static_cast<double>(l)) + std::log(static_cast<double>(k))) / mn);
                    row += static_cast<double>(F) * unit(phase);
                }
                auto& c = column[static_cast<std::size_t>(k - N - 1)];
                c += row;
                if (std::abs(c) > r.max_abs) {
                    r.max_abs = std::abs(c);
                    r.M1 = l;
                    r.N1 = k;
                }
            }
        }
        per[static_cast<std::size_t>(w)] = r;
    }
    PropSumResult best = per[0];
    for (const auto& r : per) {
        if (r.max_abs > best.max_abs) best = r;
    }
    best.windows = static_cast<int>(windows.size());
    best.value = std::pow(static_cast<double>(window.S), -(mn + 1) / (2 * mn)) * best.max_abs;
    return best;
}

ExpsumReportRow wu_bordelles_row(const BilinearInstance& in) {
    for (const auto& v : in.a) require(std::abs(v) <= 1 + 1e-12, ErrorCode::CoefficientOutOfRange, "|a_m| > 1");
    for (const auto& v : in.b) require(std::abs(v) <= 1 + 1e-12, ErrorCode::CoefficientOutOfRange, "|b_n| > 1");
    ExpsumReportRow row;
    row.abs_s = std::abs(bilinear_expsum(in));
    const double X = in.X, M = static_cast<double>(in.M), N = static_cast<double>(in.N);
    const double L = std::log(X * M * N + 2);
    row.wu_lhs = row.abs_s / (L * L);
    row.wu_rhs = std::pow(X * std::pow(M, 3) * std::pow(N, 4), 1.0 / 5) +
                 std::pow(std::pow(X, 4) * std::pow(M, 10) * std::pow(N, 11), 1.0 / 16) +
                 std::pow(X * std::pow(M, 7) * std::pow(N, 10), 1.0 / 11) + M * std::sqrt(N) +
                 std::pow(std::pow(M, 14) * std::pow(N, 23) / X, 1.0 / 22) + M * N / std::sqrt(X);
    row.wu_ratio = row.wu_lhs / row.wu_rhs;
    row.bordelles_lhs = row.abs_s * std::pow(M * N, -0.01);
    row.bordelles_rhs = std::pow(X * std::pow(M, 5) * std::pow(N, 7), 1.0 / 8) + N * std::pow(std::pow(M, 11) / (X * X), 1.0 / 12) +
                        std::pow(std::pow(M, 21) * std::pow(N, 23) / (X * X * X), 1.0 / 24) + std::pow(M, 0.75) * N +
                        M * N / std::pow(X, 0.25);
    row.bordelles_ratio = row.bordelles_lhs / row.bordelles_rhs;
    row.x_at_most_m = X <= M;
    return row;
}

std::vector<ExpsumReportRow> wu_bordelles_report(const std::vector<BilinearInstance>& instances) {
    for (const auto& in : instances) {
        for (const auto& v : in.a) require(std::abs(v) <= 1 + 1e-12, ErrorCode::CoefficientOutOfRange, "|a_m| > 1");
        for (const auto& v : in.b) require(std::abs(v) <= 1 + 1e-12, ErrorCode::CoefficientOutOfRange, "|b_n| > 1");
    }
    std::vector<ExpsumReportRow> rows(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(instances.size()); ++i) {
        rows[static_cast<std::size_t>(i)] = wu_bordelles_row(instances[static_cast<std::size_t>(i)]);
    }
    return rows;
}

void write_expsum_csv(std::ostream& out, const std::vector<ExpsumReportRow>& rows) {
    out << "abs_s,wu_lhs,wu_rhs,wu_ratio,bordelles_lhs,bordelles_rhs,bordelles_ratio,x_at_most_m\n";
    char line[512];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.abs_s, r.wu_lhs, r.wu_rhs, r.wu_ratio,
                      r.bordelles_lhs, r.bordelles_rhs, r.bordelles_ratio, r.x_at_most_m ? 1 : 0);
        out << line;
    }
}

}  // namespace piltz
