#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "piltz/analytic.hpp"
#include "piltz/bounds.hpp"
#include "piltz/error.hpp"
#include "piltz/experiment.hpp"
#include "piltz/field_io.hpp"
#include "piltz/sieve.hpp"

namespace piltz {

namespace {

using Apply = std::function<void(ExperimentConfig&)>;

class OptionSet {
public:
    explicit OptionSet(CLI::App* app) : app_(app) {}

    template <class T>
    void add(const std::string& name, T ExperimentConfig::*member, const std::string& help) {
        auto value = std::make_shared<T>();
        CLI::Option* opt = app_->add_option(name, *value, help);
        apply_.push_back([opt, value, member](ExperimentConfig& c) {
            if (opt->count() > 0) c.*member = *value;
        });
    }

    void add_converted(const std::string& name, const std::string& help, std::function<void(ExperimentConfig&, const std::string&)> set) {
        auto value = std::make_shared<std::string>();
        CLI::Option* opt = app_->add_option(name, *value, help);
        apply_.push_back([opt, value, set](ExperimentConfig& c) {
            if (opt->count() > 0) set(c, *value);
        });
    }

    void add_flag(const std::string& name, bool ExperimentConfig::*member, const std::string& help) {
        CLI::Option* opt = app_->add_flag(name, help);
        apply_.push_back([opt, member](ExperimentConfig& c) {
            if (opt->count() > 0) c.*member = true;
        });
    }

    void apply(ExperimentConfig& c) const {
        for (const auto& f : apply_) f(c);
    }

private:
    CLI::App* app_;
    std::vector<Apply> apply_;
};

struct Subcommand {
    ExperimentKind kind;
    CLI::App* app;
    std::unique_ptr<OptionSet> options;
    std::shared_ptr<std::string> config_path;
};

void add_common(Subcommand& sub, bool field_options) {
    sub.config_path = std::make_shared<std::string>();
    sub.app->add_option("--config", *sub.config_path, "JSON configuration file; flags override its keys");
    auto& o = *sub.options;
    if (field_options) {
        o.add("--field", &ExperimentConfig::field, "field label");
        o.add("--fields-file", &ExperimentConfig::fields_file, "field descriptor file (JSON)");
    }
    o.add("--out", &ExperimentConfig::out, "report path");
    o.add("--format", &ExperimentConfig::format, "csv or json");
    o.add("--threads", &ExperimentConfig::threads, "OpenMP threads (0: runtime default)");
    o.add("--seed", &ExperimentConfig::seed, "random seed");
}

void add_grid(OptionSet& o) {
    o.add("--x-max", &ExperimentConfig::x_max, "largest x, at most 2^31");
    o.add("--x-min", &ExperimentConfig::x_min, "smallest x");
    o.add("--points", &ExperimentConfig::points, "geometric grid points");
    o.add("--window", &ExperimentConfig::window, "fraction of the grid (in log x) used by the fit");
    o.add_converted("--fit-method", "running_max or all_points", [](ExperimentConfig& c, const std::string& s) {
        c.fit_method = s == "all_points" ? FitMethod::all_points : FitMethod::running_max;
        require(s == "all_points" || s == "running_max", ErrorCode::InvalidConfig, "unknown fit method '" + s + "'");
    });
}

using Check = std::pair<std::string, std::function<bool()>>;

template <class F>
bool throws_code(F&& f, ErrorCode code) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

std::vector<DeltaSample> power_samples(int count, double scale, double theta) {
    std::vector<DeltaSample> out;
    for (int i = 0; i < count; ++i) {
        const double x = 1000 * std::pow(2.0, i);
        out.push_back({x, 0, 0, scale * std::pow(x, theta)});
    }
    return out;
}

std::vector<Check> selftest_checks() {
    const FieldDescriptor Q = make_rational_field();
    const FieldDescriptor Qi = make_quadratic_field(-1);
    std::vector<Check> c;
    c.emplace_back("d = 1 is not fundamental",
                   [] { return throws_code([] { make_quadratic_field(1); }, ErrorCode::NotFundamental); });
    c.emplace_back("d = 5 is fundamental", [] { return make_quadratic_field(5).fundamental_discriminant() == 5; });
    c.emplace_back("x^2 - 1 is reducible",
                   [] { return throws_code([] { make_monogenic_field({1, 0, -1}); }, ErrorCode::Reducible); });
    c.emplace_back("kronecker(-4, 2) = 0", [] { return kronecker_symbol(-4, 2) == 0; });
    c.emplace_back("d_Q is identically 1", [Q] {
        const auto t = sieve_dk(Q, 1000);
        for (auto v : t.values())
            if (v != 1) return false;
        return true;
    });
    c.emplace_back("convolution with the unit is the identity", [Qi] {
        const auto a = sieve_dk(Qi, 500);
        std::vector<std::int64_t> unit(501, 0);
        unit[1] = 1;
        return dirichlet_convolve(a, CoefficientTable(Qi.label(), TableKind::generic, 1, unit)).values()[499] ==
               a.values()[499];
    });
    c.emplace_back("M_Q(4) = 0 and M_Q(6) = 1", [Q] {
        const auto t = sieve_mobius(Q, 10);
        return t[4] == 0 && t[6] == 1;
    });
    c.emplace_back("I_K(x) = 0 for x < 1", [Qi] { return count_ideals(sieve_dk(Qi, 10), 0.5) == 0; });
    c.emplace_back("V_1^1(x) = 1", [Qi] {
        return count_rprime(Qi, 1, 1, 100, sieve_dk(Qi, 100), sieve_mobius(Qi, 100)) == 1;
    });
    c.emplace_back("Q main term for m = 1 is x",
                   [Q] { return std::abs(residue_main_term(laurent_of_zeta_K(Q, 0), 1, 1234.5) - 1234.5) < 1e-9; });
    c.emplace_back("functional equation rejects s = 0", [Qi] {
        return throws_code([&] { functional_equation_residual(Qi, {0, 0}); }, ErrorCode::NearSingularity);
    });
    c.emplace_back("empty convexity grid", [Qi] {
        return throws_code([&] { convexity_scan(Qi, 0.5, std::vector<double>{}); }, ErrorCode::EmptyGrid);
    });
    c.emplace_back("Atkinson integral needs A > 1", [] {
        return throws_code([] { atkinson_integral(10, 0.5, 10, Trig::cos); }, ErrorCode::PreconditionViolated);
    });
    c.emplace_back("omega constants need H != G", [] {
        GaloisData d = cyclic_galois_data(2);
        d.subgroup = d.group;
        return throws_code([&] { omega_constants(d, 1); }, ErrorCode::PreconditionViolated);
    });
    c.emplace_back("balancing rejects Q2 < Q1", [] {
        return throws_code([] { srinivasan_balance({{1, 1}}, {{1, 1}}, 5, 2); }, ErrorCode::InvalidRange);
    });
    c.emplace_back("single-term bilinear sum has modulus 1", [] {
        BilinearInstance in{0.7, 0.5, 0.5, 1, {cplx(1, 0)}, 1, {cplx(1, 0)}};
        return std::abs(std::abs(bilinear_expsum(in)) - 1) < 1e-15;
    });
    c.emplace_back("2 x 2 sum of ones at X = 0 is 4", [] {
        BilinearInstance in{0, 0.5, 0.5, 2, {1, 1}, 2, {1, 1}};
        return std::abs(bilinear_expsum(in) - cplx(4, 0)) < 1e-15;
    });
    c.emplace_back("ideal sum of a zero kernel is 0", [Qi] {
        const CoefficientTable zero(Qi.label(), TableKind::f_kernel, 1, std::vector<std::int64_t>(129, 0));
        return prop_ideal_sum(Qi, 1, 1000, {64, 2}, zero).value == 0;
    });
    c.emplace_back("empty window set is rejected", [Qi] {
        const CoefficientTable zero(Qi.label(), TableKind::f_kernel, 1, std::vector<std::int64_t>(129, 0));
        return throws_code([&] { prop_ideal_sum(Qi, 1, 1000, {3, 0.5}, zero); }, ErrorCode::NoAdmissibleWindow);
    });
    c.emplace_back("coefficients above 1 are rejected", [] {
        BilinearInstance in{1, 0.5, 0.5, 1, {cplx(2, 0)}, 1, {cplx(1, 0)}};
        return throws_code([&] { wu_bordelles_row(in); }, ErrorCode::CoefficientOutOfRange);
    });
    c.emplace_back("synthetic x^0.3 fits 0.3", [] {
        ExperimentConfig cfg;
        cfg.x_max = 1000000;
        const auto run = run_delta(cfg, [](double x) { return std::pow(x, 0.3); });
        return std::abs(run.fit.theta_hat - 0.3) < 1e-9;
    });
    c.emplace_back("5 x^0.42 fits exactly", [] {
        const auto f = fit_exponent(power_samples(10, 5, 0.42), 0, 1e300, FitMethod::all_points);
        return std::abs(f.theta_hat - 0.42) < 1e-12 && std::abs(f.intercept - std::log(5.0)) < 1e-10 && f.rms < 1e-12;
    });
    c.emplace_back("7 samples are too few", [] {
        return throws_code([] { fit_exponent(power_samples(7, 1, 0.3), 0, 1e300, FitMethod::running_max); },
                           ErrorCode::InsufficientPoints);
    });
    c.emplace_back("r = l = 1 hits the pole", [] {
        ExperimentConfig cfg;
        cfg.kind = ExperimentKind::rprime;
        cfg.r = 1;
        cfg.l = 1;
        return throws_code([&] { run_rprime(cfg); }, ErrorCode::PoleAt1);
    });
    c.emplace_back("catalog best for n = 4, m = 1 is 5/9", [] {
        for (const auto& b : exponent_catalog(4, 1))
            if (b.best) return b.theta == Rational(5, 9) && b.source == BoundSource::cub;
        return false;
    });
    return c;
}

int run_selftest() {
    int failed = 0;
    for (const auto& [name, check] : selftest_checks()) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            std::cout << "  unexpected error: " << e.what() << '\n';
        }
        std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
        failed += ok ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " selftest checks failed" : "selftest passed") << '\n';
    return failed ? 2 : 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Ideal counting experiments for number fields", "piltz"};
    app.require_subcommand(1);
    std::vector<Subcommand> subs;
    const auto make = [&](ExperimentKind kind, const std::string& help, bool field_options) -> Subcommand& {
        Subcommand s{kind, app.add_subcommand(to_string(kind), help), nullptr, nullptr};
        s.options = std::make_unique<OptionSet>(s.app);
        add_common(s, field_options);
        subs.push_back(std::move(s));
        return subs.back();
    };
    subs.reserve(8);

    auto& delta = make(ExperimentKind::delta, "error term of the ideal counting function on a grid", true);
    delta.options->add("--m", &ExperimentConfig::m, "Piltz exponent m");
    add_grid(*delta.options);

    auto& rprime = make(ExperimentKind::rprime, "relatively r-prime ideal tuples against their main term", true);
    rprime.options->add("--r", &ExperimentConfig::r, "r");
    rprime.options->add("--l", &ExperimentConfig::l, "tuple length l");
    rprime.options->add("--zeta-tol", &ExperimentConfig::zeta_tolerance, "relative tolerance for zeta_K(r l)");
    add_grid(*rprime.options);

    auto& convexity = make(ExperimentKind::convexity, "growth of zeta_K on a vertical line", true);
    convexity.options->add("--sigma", &ExperimentConfig::sigma, "real part");
    convexity.options->add("--t-min", &ExperimentConfig::t_min, "smallest t, at least 2");
    convexity.options->add("--t-max", &ExperimentConfig::t_max, "largest t");
    convexity.options->add("--t-points", &ExperimentConfig::t_points, "geometric t points");

    auto& expsum = make(ExperimentKind::expsum, "bilinear exponential sums against their estimates", false);
    expsum.options->add("--instances", &ExperimentConfig::instances, "number of random instances");
    expsum.options->add("--M", &ExperimentConfig::M, "M");
    expsum.options->add("--N", &ExperimentConfig::N, "N");
    expsum.options->add("--X", &ExperimentConfig::X, "X");
    expsum.options->add("--exp-alpha", &ExperimentConfig::exp_alpha, "alpha");
    expsum.options->add("--exp-beta", &ExperimentConfig::exp_beta, "beta");
    expsum.options->add_flag("--unit", &ExperimentConfig::unit_coefficients, "all coefficients 1");

    auto& atkinson = make(ExperimentKind::atkinson, "truncated Mellin integral of Gamma(s) tau(pi s / 2) y^-s", false);
    atkinson.options->add("--y", &ExperimentConfig::y, "y");
    atkinson.options->add("--A", &ExperimentConfig::A, "abscissa A > 1");
    atkinson.options->add("--B", &ExperimentConfig::B, "height B >= A");
    atkinson.options->add_converted("--tau", "cos or sin", [](ExperimentConfig& c, const std::string& s) {
        require(s == "cos" || s == "sin", ErrorCode::InvalidConfig, "tau must be cos or sin");
        c.tau = s == "cos" ? Trig::cos : Trig::sin;
    });

    auto& omega = make(ExperimentKind::omega, "Omega-result constants from Galois data", false);
    omega.options->add("--group", &ExperimentConfig::group, "C<n> (regular) or S<n> (point stabilizer)");
    omega.options->add("--m", &ExperimentConfig::m, "m");

    auto& catalog = make(ExperimentKind::catalog, "exponent bounds for Delta_K^m", false);
    catalog.options->add("--n", &ExperimentConfig::n, "field degree");
    catalog.options->add("--m", &ExperimentConfig::m, "m");
    catalog.options->add_converted("--beta", "discriminant exponent for the uniform bound",
                                   [](ExperimentConfig& c, const std::string& s) {
                                       try {
                                           c.beta = std::stod(s);
                                       } catch (const std::exception&) {
                                           fail(ErrorCode::InvalidConfig, "bad --beta '" + s + "'");
                                       }
                                   });

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n\n";
        const CLI::App* shown = &app;
        for (const auto* s : app.get_subcommands()) shown = s;
        std::cerr << shown->help();
        return 1;
    }

    if (selftest->parsed()) return run_selftest();

    for (auto& sub : subs) {
        if (!sub.app->parsed()) continue;
        ExperimentConfig config;
        try {
            if (!sub.config_path->empty()) config = load_config(*sub.config_path);
            config.kind = sub.kind;
            sub.options->apply(config);
            validate(config);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n\n" << sub.app->help();
            return 1;
        }
        try {
            if (config.threads > 0) omp_set_num_threads(config.threads);
            const ExperimentReport report = run_experiment(config);
            if (!config.out.empty()) {
                std::ofstream out(config.out, std::ios::binary);
                require(static_cast<bool>(out), ErrorCode::Io, "cannot write '" + config.out + "'");
                write_report(out, report, config.format);
                require(static_cast<bool>(out), ErrorCode::Io, "write to '" + config.out + "' failed");
            }
            std::cout << report.summary << '\n';
            return 0;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    std::cerr << app.help();
    return 1;
}

}  // namespace piltz
