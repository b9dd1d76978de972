#include "piltz/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "piltz/analytic.hpp"
#include "piltz/error.hpp"
#include "piltz/field_io.hpp"
#include "piltz/sieve.hpp"
#include "piltz/stats.hpp"
#include "piltz/table_cache.hpp"

namespace piltz {

namespace {

using nlohmann::json;

constexpr std::int64_t kMaxX = std::int64_t{1} << 31;

constexpr const char* kKindNames[] = {"delta", "rprime", "convexity", "expsum", "atkinson", "omega", "catalog"};

ExperimentKind parse_kind(const std::string& s) {
    for (int i = 0; i < 7; ++i)
        if (s == kKindNames[i]) return static_cast<ExperimentKind>(i);
    fail(ErrorCode::InvalidConfig, "unknown experiment kind '" + s + "'");
}

FitMethod parse_method(const std::string& s) {
    if (s == "running_max") return FitMethod::running_max;
    if (s == "all_points") return FitMethod::all_points;
    fail(ErrorCode::InvalidConfig, "unknown fit method '" + s + "'");
}

Trig parse_trig(const std::string& s) {
    if (s == "cos") return Trig::cos;
    if (s == "sin") return Trig::sin;
    fail(ErrorCode::InvalidConfig, "tau must be cos or sin, got '" + s + "'");
}

template <class T>
void read_key(const json& obj, const char* key, T& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    try {
        out = it->get<T>();
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidConfig, std::string("bad value for '") + key + "': " + e.what());
    }
}

std::string rational_text(const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

json fit_json(const FitResult& f) {
    return json{{"theta_hat", f.theta_hat}, {"intercept", f.intercept}, {"rms", f.rms},
                {"window", json::array({f.x_lo, f.x_hi})}, {"method", to_string(f.method)},
                {"points", f.points}};
}

FieldDescriptor config_field(const ExperimentConfig& c) { return find_field(c.field, c.fields_file); }

std::string bounds_summary(const std::vector<ExponentBound>& bounds) {
    std::string out;
    for (const auto& b : bounds) {
        if (!out.empty()) out += ' ';
        out += to_string(b.source) + "=" + rational_text(b.theta);
        if (b.best) out += "*";
    }
    return out;
}

std::vector<std::vector<json>> delta_rows(const std::vector<DeltaSample>& samples) {
    std::vector<std::vector<json>> rows;
    rows.reserve(samples.size());
    for (const auto& s : samples) rows.push_back({s.x, to_decimal(s.count), s.main, s.delta});
    return rows;
}

double window_lo(const ExperimentConfig& c) {
    const double hi = std::log(static_cast<double>(c.x_max));
    const double lo = std::log(c.x_min);
    return std::exp(hi - c.window * (hi - lo)) * (1 - 1e-12);
}

}  // namespace

std::string to_string(ExperimentKind kind) { return kKindNames[static_cast<int>(kind)]; }

std::string to_string(FitMethod method) { return method == FitMethod::running_max ? "running_max" : "all_points"; }

ExperimentConfig config_from_json(const json& obj) {
    require(obj.is_object(), ErrorCode::InvalidConfig, "configuration must be a JSON object");
    static const std::vector<std::string> known = {
        "kind",   "field",     "fields_file", "m",         "r",        "l",     "x_max",   "x_min",
        "points", "window",    "fit_method",  "zeta_tolerance", "beta", "sigma", "t_min",  "t_max",
        "t_points", "y",       "A",           "B",         "tau",      "instances", "M",   "N",
        "X",      "exp_alpha", "exp_beta",    "unit_coefficients", "group", "n", "seed", "out",
        "format", "threads"};
    for (auto it = obj.begin(); it != obj.end(); ++it)
        require(std::find(known.begin(), known.end(), it.key()) != known.end(), ErrorCode::InvalidConfig,
                "unknown key '" + it.key() + "'");
    ExperimentConfig c;
    std::string s;
    if (obj.contains("kind")) {
        read_key(obj, "kind", s);
        c.kind = parse_kind(s);
    }
    if (obj.contains("fit_method")) {
        read_key(obj, "fit_method", s);
        c.fit_method = parse_method(s);
    }
    if (obj.contains("tau")) {
        read_key(obj, "tau", s);
        c.tau = parse_trig(s);
    }
    if (obj.contains("beta") && !obj["beta"].is_null()) {
        double b = 0;
        read_key(obj, "beta", b);
        c.beta = b;
    }
    read_key(obj, "field", c.field);
    read_key(obj, "fields_file", c.fields_file);
    read_key(obj, "m", c.m);
    read_key(obj, "r", c.r);
    read_key(obj, "l", c.l);
    read_key(obj, "x_max", c.x_max);
    read_key(obj, "x_min", c.x_min);
    read_key(obj, "points", c.points);
    read_key(obj, "window", c.window);
    read_key(obj, "zeta_tolerance", c.zeta_tolerance);
    read_key(obj, "sigma", c.sigma);
    read_key(obj, "t_min", c.t_min);
    read_key(obj, "t_max", c.t_max);
    read_key(obj, "t_points", c.t_points);
    read_key(obj, "y", c.y);
    read_key(obj, "A", c.A);
    read_key(obj, "B", c.B);
    read_key(obj, "instances", c.instances);
    read_key(obj, "M", c.M);
    read_key(obj, "N", c.N);
    read_key(obj, "X", c.X);
    read_key(obj, "exp_alpha", c.exp_alpha);
    read_key(obj, "exp_beta", c.exp_beta);
    read_key(obj, "unit_coefficients", c.unit_coefficients);
    read_key(obj, "group", c.group);
    read_key(obj, "n", c.n);
    read_key(obj, "seed", c.seed);
    read_key(obj, "out", c.out);
    read_key(obj, "format", c.format);
    read_key(obj, "threads", c.threads);
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open config '" + path + "'");
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidConfig, "config '" + path + "': " + e.what());
    }
    return config_from_json(obj);
}

json config_to_json(const ExperimentConfig& c) {
    json j{{"kind", to_string(c.kind)}, {"seed", c.seed}};
    const auto field_keys = [&] {
        j["field"] = c.field;
        if (!c.fields_file.empty()) j["fields_file"] = c.fields_file;
    };
    const auto grid_keys = [&] {
        j["x_max"] = c.x_max;
        j["x_min"] = c.x_min;
        j["points"] = c.points;
        j["window"] = c.window;
        j["fit_method"] = to_string(c.fit_method);
    };
    switch (c.kind) {
        case ExperimentKind::delta:
            field_keys();
            j["m"] = c.m;
            grid_keys();
            break;
        case ExperimentKind::rprime:
            field_keys();
            j["r"] = c.r;
            j["l"] = c.l;
            j["zeta_tolerance"] = c.zeta_tolerance;
            grid_keys();
            break;
        case ExperimentKind::convexity:
            field_keys();
            j["sigma"] = c.sigma;
            j["t_min"] = c.t_min;
            j["t_max"] = c.t_max;
            j["t_points"] = c.t_points;
            break;
        case ExperimentKind::atkinson:
            j["y"] = c.y;
            j["A"] = c.A;
            j["B"] = c.B;
            j["tau"] = c.tau == Trig::cos ? "cos" : "sin";
            break;
        case ExperimentKind::expsum:
            j["instances"] = c.instances;
            j["M"] = c.M;
            j["N"] = c.N;
            j["X"] = c.X;
            j["exp_alpha"] = c.exp_alpha;
            j["exp_beta"] = c.exp_beta;
            j["unit_coefficients"] = c.unit_coefficients;
            break;
        case ExperimentKind::omega:
            j["group"] = c.group;
            j["m"] = c.m;
            break;
        case ExperimentKind::catalog:
            j["n"] = c.n;
            j["m"] = c.m;
            if (c.beta) j["beta"] = *c.beta;
            break;
    }
    return j;
}

void validate(const ExperimentConfig& c) {
    const auto check = [](bool ok, const std::string& what) { require(ok, ErrorCode::InvalidConfig, what); };
    check(c.format == "json" || c.format == "csv", "format must be csv or json");
    check(c.threads >= 0, "threads must be non-negative");
    check(c.m >= 1, "m must be positive");
    switch (c.kind) {
        case ExperimentKind::delta:
        case ExperimentKind::rprime:
            check(c.x_max >= 2 && c.x_max <= kMaxX, "x_max must lie in [2, 2^31]");
            check(c.x_min >= 1 && c.x_min < static_cast<double>(c.x_max), "need 1 <= x_min < x_max");
            check(c.points >= 8, "fitting experiments need at least 8 grid points");
            check(c.window > 0 && c.window <= 1, "window must lie in (0, 1]");
            check(c.r >= 1 && c.l >= 1, "r and l must be positive");
            check(c.zeta_tolerance > 0, "zeta_tolerance must be positive");
            break;
        case ExperimentKind::convexity:
            check(c.t_points >= 1, "t_points must be positive");
            check(c.t_min > 0 && c.t_min <= c.t_max, "need 0 < t_min <= t_max");
            break;
        case ExperimentKind::expsum:
            check(c.instances >= 1, "instances must be positive");
            check(c.M >= 1 && c.N >= 1 && c.M <= (1 << 16) && c.N <= (1 << 16), "M and N must lie in [1, 65536]");
            break;
        case ExperimentKind::omega:
            check(c.group.size() >= 2 && (c.group[0] == 'C' || c.group[0] == 'S') &&
                      std::all_of(c.group.begin() + 1, c.group.end(), [](char ch) { return ch >= '0' && ch <= '9'; }),
                  "group must be C<n> or S<n>");
            break;
        case ExperimentKind::catalog:
            check(c.n >= 1, "n must be positive");
            break;
        case ExperimentKind::atkinson:
            break;
    }
}

std::vector<double> geometric_grid(double x_min, double x_max, int points) {
    require(points >= 1, ErrorCode::EmptyGrid, "grid needs at least one point");
    require(x_min >= 1 && x_min <= x_max, ErrorCode::InvalidRange, "need 1 <= x_min <= x_max");
    std::vector<double> xs;
    if (points == 1) return {std::round(x_max)};
    const double ratio = std::log(x_max / x_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double x = i == points - 1 ? std::round(x_max) : std::round(x_min * std::exp(ratio * i));
        if (xs.empty() || x > xs.back()) xs.push_back(x);
    }
    return xs;
}

FitResult fit_exponent(const std::vector<DeltaSample>& samples, double x_lo, double x_hi, FitMethod method) {
    std::vector<DeltaSample> in;
    for (const auto& s : samples)
        if (s.x >= x_lo && s.x <= x_hi) in.push_back(s);
    std::sort(in.begin(), in.end(), [](const DeltaSample& a, const DeltaSample& b) { return a.x < b.x; });
    require(in.size() >= 8, ErrorCode::InsufficientPoints,
            "fit needs at least 8 samples in the window, got " + std::to_string(in.size()));
    std::vector<double> mag(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) mag[i] = std::abs(in[i].delta);
    require(std::any_of(mag.begin(), mag.end(), [](double v) { return v > 0; }), ErrorCode::DegenerateFit,
            "every delta in the window is zero");
    if (method == FitMethod::running_max) mag = running_max(mag);
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (mag[i] <= 0 || !std::isfinite(mag[i])) continue;
        lx.push_back(std::log(in[i].x));
        ly.push_back(std::log(mag[i]));
    }
    require(lx.size() >= 8, ErrorCode::InsufficientPoints,
            "fit needs at least 8 nonzero samples, got " + std::to_string(lx.size()));
    const LineFit line = least_squares(lx, ly);
    require(std::isfinite(line.rms), ErrorCode::DegenerateFit, "non-finite residual");
    FitResult out;
    out.theta_hat = line.slope;
    out.intercept = line.intercept;
    out.rms = line.rms;
    out.x_lo = std::exp(lx.front());
    out.x_hi = std::exp(lx.back());
    out.method = method;
    out.points = static_cast<int>(lx.size());
    return out;
}

DeltaRun run_delta(const ExperimentConfig& c, const DeltaOverride& override) {
    validate(c);
    const auto xs = geometric_grid(c.x_min, static_cast<double>(c.x_max), c.points);
    DeltaRun run;
    run.samples.resize(xs.size());
    ExperimentReport& rep = run.report;
    rep.config = c;
    if (override) {
        rep.field_label = "synthetic";
        for (std::size_t i = 0; i < xs.size(); ++i) run.samples[i] = {xs[i], 0, 0, override(xs[i])};
    } else {
        const FieldDescriptor field = config_field(c);
        rep.field_label = field.label();
        const LaurentSeries series = laurent_of_zeta_K(field, c.m - 1);
        std::vector<std::int64_t> counts;
        if (c.m == 1) {
            counts = count_ideals_streamed(field, xs);
        } else {
            const CoefficientTable table = cached_table(field.label(), TableKind::piltz, c.m, c.x_max,
                                                        [&] { return piltz_table(field, c.m, c.x_max); });
            const SummatoryTable sums(table);
            counts.resize(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) counts[i] = sums.at(xs[i]);
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double main = residue_main_term(series, c.m, xs[i]);
            run.samples[i] = {xs[i], static_cast<u128>(counts[i]), main, static_cast<double>(counts[i]) - main};
        }
    }
    run.fit = fit_exponent(run.samples, window_lo(c), static_cast<double>(c.x_max), c.fit_method);

    const int n = override ? 1 : config_field(c).degree();
    const auto bounds = exponent_catalog(n, c.m);
    rep.columns = {"x", "count", "main", "delta"};
    rep.rows = delta_rows(run.samples);
    rep.fit = run.fit;
    rep.bounds = catalog_to_json(bounds);
    rep.extra["conjecture"] = json{{"theta", 0.5}};
    rep.extra["degree"] = n;
    rep.summary = rep.field_label + " delta m=" + std::to_string(c.m) + " theta_hat=" + short_fmt(run.fit.theta_hat) +
                  " vs " + bounds_summary(bounds) + " conjecture=1/2";
    return run;
}

DeltaRun run_rprime(const ExperimentConfig& c) {
    validate(c);
    require(c.r * c.l >= 2, ErrorCode::PoleAt1, "r * l must be at least 2, zeta_K has a pole at 1");
    const FieldDescriptor field = config_field(c);
    const auto xs = geometric_grid(c.x_min, static_cast<double>(c.x_max), c.points);
    const double rho = laurent_of_zeta_K(field, 0)[-1];
    const double zeta_rl = zeta_K_value(field, {static_cast<double>(c.r * c.l), 0}, c.zeta_tolerance).real();
    const auto dk = cached_table(field.label(), TableKind::piltz, 1, c.x_max, [&] { return sieve_dk(field, c.x_max); });
    const auto q_max = static_cast<std::int64_t>(iroot(static_cast<std::uint64_t>(c.x_max), static_cast<unsigned>(c.r)));
    const auto mobius = sieve_mobius(field, std::max<std::int64_t>(q_max, 1));
    const SummatoryTable ideals(dk);

    DeltaRun run;
    run.samples.resize(xs.size());
    std::vector<double> ratios(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const u128 v = count_rprime(c.r, c.l, xs[i], ideals, mobius);
        const double main = std::pow(rho * xs[i], c.l) / zeta_rl;
        const double vd = static_cast<double>(v);
        run.samples[i] = {xs[i], v, main, vd - main};
        ratios[i] = vd / main;
    }
    run.fit = fit_exponent(run.samples, window_lo(c), static_cast<double>(c.x_max), c.fit_method);

    ExperimentReport& rep = run.report;
    rep.config = c;
    rep.field_label = field.label();
    rep.columns = {"x", "count", "main", "delta", "ratio"};
    rep.rows = delta_rows(run.samples);
    for (std::size_t i = 0; i < xs.size(); ++i) rep.rows[i].push_back(ratios[i]);
    rep.fit = run.fit;
    const auto bounds = rprime_exponents(field.degree(), c.r, c.l, 0);
    rep.bounds = catalog_to_json(bounds);
    rep.extra["rho"] = rho;
    rep.extra["zeta_rl"] = zeta_rl;
    rep.summary = rep.field_label + " rprime r=" + std::to_string(c.r) + " l=" + std::to_string(c.l) +
                  " ratio=" + short_fmt(ratios.back()) + " theta_hat=" + short_fmt(run.fit.theta_hat) + " vs " +
                  bounds_summary(bounds);
    return run;
}

namespace {

ExperimentReport run_convexity(const ExperimentConfig& c) {
    const FieldDescriptor field = config_field(c);
    std::vector<double> ts;
    for (int i = 0; i < c.t_points; ++i)
        ts.push_back(c.t_points == 1 ? c.t_min : c.t_min * std::pow(c.t_max / c.t_min, double(i) / (c.t_points - 1)));
    const ConvexityScan scan = convexity_scan(field, c.sigma, ts);
    ExperimentReport rep;
    rep.config = c;
    rep.field_label = field.label();
    rep.columns = {"t", "re", "im", "modulus", "theory_exponent"};
    for (const auto& r : scan.rows) rep.rows.push_back({r.t, r.re, r.im, r.modulus, r.theory_exponent});
    rep.extra["fitted_exponent"] = scan.fitted_exponent;
    const double theory = scan.rows.empty() ? 0 : scan.rows.front().theory_exponent;
    rep.extra["theory_exponent"] = theory;
    rep.summary = rep.field_label + " convexity sigma=" + short_fmt(c.sigma) + " fitted=" +
                  short_fmt(scan.fitted_exponent) + " vs convexity=" + short_fmt(theory);
    return rep;
}

ExperimentReport run_atkinson(const ExperimentConfig& c) {
    const AtkinsonResult res = atkinson_integral(c.y, c.A, c.B, c.tau);
    ExperimentReport rep;
    rep.config = c;
    rep.field_label = "-";
    rep.columns = {"y", "re", "im", "prediction", "residual_budget"};
    rep.rows.push_back({c.y, res.value.real(), res.value.imag(), res.prediction, res.residual_budget});
    const double diff = std::abs(res.value - cplx(res.prediction, 0));
    rep.extra["deviation"] = diff;
    rep.summary = std::string("- atkinson y=") + short_fmt(c.y) + " value=" + short_fmt(res.value.real()) +
                  " prediction=" + short_fmt(res.prediction) + " deviation=" + short_fmt(diff) +
                  " budget=" + short_fmt(res.residual_budget);
    return rep;
}

ExperimentReport run_expsum(const ExperimentConfig& c) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto phase = [&] {
        return c.unit_coefficients ? cplx(1, 0) : std::polar(1.0, 2 * std::numbers::pi * unit(rng));
    };
    std::vector<BilinearInstance> instances(static_cast<std::size_t>(c.instances));
    for (auto& in : instances) {
        in.X = c.X;
        in.alpha = c.exp_alpha;
        in.beta = c.exp_beta;
        in.M = c.M;
        in.N = c.N;
        in.a.resize(static_cast<std::size_t>(c.M));
        in.b.resize(static_cast<std::size_t>(c.N));
        for (auto& v : in.a) v = phase();
        for (auto& v : in.b) v = phase();
    }
    const auto rows = wu_bordelles_report(instances);
    ExperimentReport rep;
    rep.config = c;
    rep.field_label = "-";
    rep.columns = {"instance",      "abs_s",         "wu_lhs",          "wu_rhs",     "wu_ratio",
                   "bordelles_lhs", "bordelles_rhs", "bordelles_ratio", "x_at_most_m"};
    double worst = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        rep.rows.push_back({static_cast<int>(i), r.abs_s, r.wu_lhs, r.wu_rhs, r.wu_ratio, r.bordelles_lhs,
                            r.bordelles_rhs, r.bordelles_ratio, r.x_at_most_m});
        worst = std::max({worst, r.wu_ratio, r.bordelles_ratio});
    }
    rep.extra["max_ratio"] = worst;
    rep.summary = "- expsum instances=" + std::to_string(c.instances) + " max_ratio=" + short_fmt(worst);
    return rep;
}

ExperimentReport run_omega(const ExperimentConfig& c) {
    const int order = std::stoi(c.group.substr(1));
    const GaloisData data = c.group[0] == 'C' ? cyclic_galois_data(order) : symmetric_galois_data(order);
    const OmegaConstants oc = omega_constants(data, c.m);
    ExperimentReport rep;
    rep.config = c;
    rep.field_label = c.group;
    rep.columns = {"nu", "delta_num", "delta_den"};
    std::string deltas;
    for (std::size_t i = 0; i < oc.delta.size(); ++i) {
        rep.rows.push_back({static_cast<int>(i + 1), oc.delta[i].numerator(), oc.delta[i].denominator()});
        deltas += (i ? "," : "") + rational_text(oc.delta[i]);
    }
    rep.extra["R"] = oc.R;
    rep.extra["kappa"] = oc.kappa;
    rep.extra["lambda"] = oc.lambda;
    rep.summary = c.group + " omega m=" + std::to_string(c.m) + " delta=(" + deltas + ") R=" + std::to_string(oc.R) +
                  " kappa=" + short_fmt(oc.kappa) + " lambda=" + short_fmt(oc.lambda);
    return rep;
}

ExperimentReport run_catalog(const ExperimentConfig& c) {
    std::optional<Rational> beta;
    if (c.beta) {
        // beta is given as a decimal; keep it exact to 1e-6
        beta = Rational(static_cast<std::int64_t>(std::llround(*c.beta * 1000000)), 1000000);
    }
    const auto bounds = exponent_catalog(c.n, c.m, beta);
    ExperimentReport rep;
    rep.config = c;
    rep.field_label = "n=" + std::to_string(c.n);
    rep.columns = {"source", "theta", "log_power", "epsilon", "conditional", "lower_bound", "best"};
    const ExponentBound* best = nullptr;
    for (const auto& b : bounds) {
        rep.rows.push_back({to_string(b.source), rational_text(b.theta), b.log_power, b.epsilon, b.conditional,
                            b.lower_bound, b.best});
        if (b.best) best = &b;
    }
    rep.bounds = catalog_to_json(bounds);
    rep.summary = "n=" + std::to_string(c.n) + " catalog m=" + std::to_string(c.m) + " best=" +
                  (best ? rational_text(best->theta) + " (" + to_string(best->source) + ")" : std::string("none")) +
                  " all: " + bounds_summary(bounds);
    return rep;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& c) {
    validate(c);
    switch (c.kind) {
        case ExperimentKind::delta: return run_delta(c).report;
        case ExperimentKind::rprime: return run_rprime(c).report;
        case ExperimentKind::convexity: return run_convexity(c);
        case ExperimentKind::expsum: return run_expsum(c);
        case ExperimentKind::atkinson: return run_atkinson(c);
        case ExperimentKind::omega: return run_omega(c);
        case ExperimentKind::catalog: return run_catalog(c);
    }
    fail(ErrorCode::InvalidConfig, "unknown experiment kind");
}

void write_report(std::ostream& out, const ExperimentReport& rep, const std::string& format) {
    if (format == "csv") {
        for (std::size_t i = 0; i < rep.columns.size(); ++i) out << (i ? "," : "") << rep.columns[i];
        out << '\n';
        for (const auto& row : rep.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                const json& v = row[i];
                if (i) out << ',';
                if (v.is_string())
                    out << v.get<std::string>();
                else if (v.is_number_float())
                    out << fmt(v.get<double>());
                else
                    out << v.dump();
            }
            out << '\n';
        }
        return;
    }
    require(format == "json", ErrorCode::InvalidConfig, "format must be csv or json");
    json j;
    j["schema"] = 1;
    j["experiment"] = to_string(rep.config.kind);
    j["field"] = rep.field_label;
    j["config"] = config_to_json(rep.config);
    j["columns"] = rep.columns;
    j["rows"] = rep.rows;
    j["fit"] = rep.fit ? fit_json(*rep.fit) : json(nullptr);
    j["bounds"] = rep.bounds;
    for (auto it = rep.extra.begin(); it != rep.extra.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << '\n';
}

std::string render_report(const ExperimentReport& rep, const std::string& format) {
    std::ostringstream os;
    write_report(os, rep, format);
    return os.str();
}

}  // namespace piltz
