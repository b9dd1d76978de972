#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>
#include <omp.h>

#include "piltz/error.hpp"
#include "piltz/experiment.hpp"

using namespace piltz;
using doctest::Approx;
using nlohmann::json;

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

ExperimentConfig small_delta() {
    ExperimentConfig c;
    c.kind = ExperimentKind::delta;
    c.field = "Qi";
    c.x_min = 100;
    c.x_max = 20000;
    c.points = 24;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "piltz");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("piltz_test_" + name);
}

}  // namespace

TEST_CASE("geometric grid") {
    const auto xs = geometric_grid(1, 10, 10);
    std::vector<double> expected;
    for (int i = 0; i < 10; ++i) {
        const double x = std::round(std::pow(10.0, i / 9.0));
        if (expected.empty() || x > expected.back()) expected.push_back(x);
    }
    CHECK(xs == expected);
    const auto ys = geometric_grid(1000, 1e6, 64);
    CHECK(ys.front() == 1000);
    CHECK(ys.back() == 1e6);
    CHECK(ys.size() == 64);
    for (std::size_t i = 1; i < ys.size(); ++i) {
        CHECK(ys[i] > ys[i - 1]);
        CHECK(ys[i] == std::round(ys[i]));
    }
    CHECK(geometric_grid(1, 3, 50).size() == 3);
    CHECK(code_of([] { geometric_grid(1, 3, 0); }) == ErrorCode::EmptyGrid);
    CHECK(code_of([] { geometric_grid(5, 3, 4); }) == ErrorCode::InvalidRange);
}

TEST_CASE("exponent fit on synthetic data") {
    auto c = small_delta();
    c.x_min = 1000;
    c.x_max = 2000000000;
    c.points = 200;

    const auto pure = run_delta(c, [](double x) { return std::pow(x, 0.3); });
    CHECK(pure.fit.theta_hat == Approx(0.3).epsilon(1e-9));
    CHECK(pure.fit.rms < 1e-9);
    CHECK(pure.report.field_label == "synthetic");

    const auto scaled = run_delta(c, [](double x) { return -5 * std::pow(x, 0.42); });
    CHECK(scaled.fit.theta_hat == Approx(0.42).epsilon(1e-9));
    CHECK(scaled.fit.intercept == Approx(std::log(5.0)).epsilon(1e-7));

    const auto wavy = run_delta(c, [](double x) { return std::pow(x, 0.3) * std::sin(std::log(x)); });
    CHECK(wavy.fit.theta_hat >= 0.28);
    CHECK(wavy.fit.theta_hat <= 0.32);

    c.fit_method = FitMethod::all_points;
    const auto direct = run_delta(c, [](double x) { return 2 * std::pow(x, 0.25); });
    CHECK(direct.fit.theta_hat == Approx(0.25).epsilon(1e-9));
    CHECK(direct.fit.method == FitMethod::all_points);

    // the window keeps only the upper part of the grid in log x
    c.fit_method = FitMethod::running_max;
    c.window = 0.5;
    const auto half = run_delta(c, [](double x) { return x < 1e6 ? 1e9 : std::pow(x, 0.3); });
    CHECK(half.fit.theta_hat == Approx(0.3).epsilon(1e-9));
    CHECK(half.fit.x_lo >= std::sqrt(1000.0 * 2e9) * (1 - 1e-9));
    CHECK(half.fit.x_hi == Approx(2e9).epsilon(1e-12));
}

TEST_CASE("fit preconditions") {
    std::vector<DeltaSample> seven;
    for (int i = 1; i <= 7; ++i) seven.push_back({i * 10.0, 0, 0, std::pow(i * 10.0, 0.3)});
    CHECK(code_of([&] { fit_exponent(seven, 0, 1e9, FitMethod::running_max); }) == ErrorCode::InsufficientPoints);
    seven.push_back({80, 0, 0, 1});
    CHECK(fit_exponent(seven, 0, 1e9, FitMethod::running_max).points == 8);
    CHECK(code_of([&] { fit_exponent(seven, 15, 1e9, FitMethod::running_max); }) == ErrorCode::InsufficientPoints);

    std::vector<DeltaSample> zeros;
    for (int i = 1; i <= 10; ++i) zeros.push_back({i * 10.0, 0, 0, 0});
    CHECK(code_of([&] { fit_exponent(zeros, 0, 1e9, FitMethod::running_max); }) == ErrorCode::DegenerateFit);

    // over the rationals the count at an integer is exact and the error vanishes
    auto c = small_delta();
    c.field = "Q";
    CHECK(code_of([&] { run_delta(c); }) == ErrorCode::DegenerateFit);
}

TEST_CASE("delta rows add up") {
    const auto run = run_delta(small_delta());
    REQUIRE(run.samples.size() == 24);
    for (const auto& s : run.samples) {
        CHECK(static_cast<double>(s.count) == Approx(s.main + s.delta).epsilon(1e-12));
        CHECK(s.main == Approx(std::numbers::pi / 4 * s.x).epsilon(1e-12));
    }
    CHECK(run.report.columns == std::vector<std::string>{"x", "count", "main", "delta"});
    CHECK(run.fit.theta_hat > 0);
    CHECK(run.fit.theta_hat < 0.6);
    CHECK(run.report.extra["conjecture"]["theta"] == 0.5);

    auto c = small_delta();
    c.field = "Q";
    c.m = 2;
    const auto d2 = run_delta(c);
    // the divisor problem: sum_{n <= x} d(n) = x log x + (2 gamma - 1) x + O(x^{1/3})
    for (const auto& s : d2.samples)
        CHECK(s.main == Approx(s.x * std::log(s.x) + (2 * 0.5772156649015329 - 1) * s.x).epsilon(1e-12));
    std::int64_t dirichlet = 0;
    for (std::int64_t k = 1; k <= 20000; ++k) dirichlet += 20000 / k;
    CHECK(static_cast<std::int64_t>(d2.samples.back().count) == dirichlet);
}

TEST_CASE("r-prime tuples") {
    ExperimentConfig c;
    c.kind = ExperimentKind::rprime;
    c.field = "Q";
    c.r = 1;
    c.l = 2;
    c.x_min = 1;
    c.x_max = 10;
    c.points = 10;
    const auto run = run_rprime(c);
    REQUIRE(run.samples.back().x == 10);
    CHECK(run.samples.back().count == 63);  // coprime pairs in [1,10]^2
    CHECK(run.samples.back().main == Approx(600 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-9));
    CHECK(run.samples.front().count == 1);
    CHECK(run.report.columns.back() == "ratio");

    c.l = 1;
    CHECK(code_of([&] { run_rprime(c); }) == ErrorCode::PoleAt1);
}

TEST_CASE("configuration") {
    const auto c = config_from_json(json{{"kind", "rprime"}, {"field", "Qsqrt5"}, {"r", 2}, {"l", 1}, {"x_max", 5000}});
    CHECK(c.kind == ExperimentKind::rprime);
    CHECK(c.field == "Qsqrt5");
    CHECK(c.r == 2);
    CHECK(c.x_max == 5000);
    CHECK(c.points == 64);

    const auto back = config_from_json(config_to_json(c));
    CHECK(config_to_json(back) == config_to_json(c));
    CHECK_FALSE(config_to_json(c).contains("out"));
    CHECK_FALSE(config_to_json(c).contains("threads"));
    CHECK_FALSE(config_to_json(c).contains("format"));

    CHECK(code_of([] { config_from_json(json{{"bogus", 1}}); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { config_from_json(json{{"kind", "nope"}}); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { config_from_json(json{{"x_max", "big"}}); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { config_from_json(json::array()); }) == ErrorCode::InvalidConfig);

    auto bad = small_delta();
    bad.points = 7;
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvalidConfig);
    bad = small_delta();
    bad.x_min = 30000;
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvalidConfig);
    bad = small_delta();
    bad.window = 0;
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvalidConfig);
    bad = small_delta();
    bad.format = "xml";
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvalidConfig);
    bad = small_delta();
    bad.kind = ExperimentKind::omega;
    bad.group = "D4";
    CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvalidConfig);

    const auto path = temp_file("config.json");
    std::ofstream(path) << R"({"kind": "delta", "field": "Qsqrtm3", "x_max": 30000})";
    CHECK(load_config(path.string()).field == "Qsqrtm3");
    CHECK(code_of([] { load_config("/nonexistent/config.json"); }) != ErrorCode::PreconditionViolated);
}

TEST_CASE("report formats") {
    const auto run = run_delta(small_delta());
    const json j = json::parse(render_report(run.report, "json"));
    CHECK(j["schema"] == 1);
    CHECK(j["experiment"] == "delta");
    CHECK(j["field"] == "Qi");
    CHECK(j["rows"].size() == run.samples.size());
    CHECK(j["rows"][0][1].is_string());
    CHECK(j["fit"]["theta_hat"].get<double>() == run.fit.theta_hat);
    CHECK(j["bounds"].is_array());
    CHECK(j["config"]["x_max"] == 20000);

    const std::string csv = render_report(run.report, "csv");
    std::istringstream lines(csv);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "x,count,main,delta");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(run.samples.size()) + 1);
    // %.17g round-trips doubles
    const auto last_comma = first.rfind(',');
    CHECK(std::stod(first.substr(last_comma + 1)) == run.samples[0].delta);
    CHECK(code_of([&] { render_report(run.report, "xml"); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("other experiments") {
    ExperimentConfig c;
    c.kind = ExperimentKind::convexity;
    c.field = "Q";
    c.sigma = 1;
    c.t_points = 8;
    auto rep = run_experiment(c);
    CHECK(rep.rows.size() == 8);
    CHECK(rep.columns.front() == "t");

    c.kind = ExperimentKind::expsum;
    c.instances = 3;
    rep = run_experiment(c);
    CHECK(rep.rows.size() == 3);

    c.kind = ExperimentKind::atkinson;
    rep = run_experiment(c);
    CHECK(rep.rows.size() == 1);

    c.kind = ExperimentKind::omega;
    c.group = "C2";
    c.m = 1;
    rep = run_experiment(c);
    CHECK_FALSE(rep.summary.empty());

    c.kind = ExperimentKind::catalog;
    c.n = 4;
    rep = run_experiment(c);
    CHECK(rep.summary.find("best=5/9 (cub)") != std::string::npos);
}

TEST_CASE("command line") {
    auto r = run_cli({"catalog", "--n", "4", "--m", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5/9 (cub)") != std::string::npos);

    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"delta", "--points", "3"}).code == 1);
    CHECK(run_cli({"delta", "--x-max", "lots"}).code == 1);
    CHECK(run_cli({"delta", "--field", "Q", "--x-max", "5000", "--x-min", "10"}).code == 2);
    CHECK(run_cli({"rprime", "--field", "Q", "--r", "1", "--l", "1"}).code == 2);
    CHECK(run_cli({"delta", "--field", "Qnope"}).code != 0);

    const auto path = temp_file("out.json");
    r = run_cli({"delta", "--field", "Qi", "--x-max", "20000", "--x-min", "100", "--points", "24", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("theta_hat") != std::string::npos);
    const json j = json::parse(slurp(path));
    CHECK(j["rows"].size() == 24);
    CHECK(json::parse(render_report(run_delta(small_delta()).report, "json")) == j);

    const auto cfg = temp_file("cli_config.json");
    std::ofstream(cfg) << R"({"field": "Qsqrt5", "x_max": 20000, "x_min": 100, "points": 24})";
    r = run_cli({"delta", "--config", cfg.string(), "--field", "Qsqrtm3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(json::parse(slurp(path))["field"] == "Qsqrtm3");
}

TEST_CASE("thread count does not change output") {
    const int saved = omp_get_max_threads();
    for (const char* format : {"json", "csv"}) {
        auto c = small_delta();
        c.format = format;
        ExperimentConfig r;
        r.kind = ExperimentKind::rprime;
        r.field = "Qi";
        r.x_max = 3000;
        r.x_min = 10;
        r.points = 20;
        ExperimentConfig e;
        e.kind = ExperimentKind::expsum;
        for (const auto& cfg : {c, r, e}) {
            omp_set_num_threads(1);
            const std::string one = render_report(run_experiment(cfg), format);
            omp_set_num_threads(4);
            const std::string four = render_report(run_experiment(cfg), format);
            CHECK(one == four);
        }
    }
    omp_set_num_threads(saved);
}
