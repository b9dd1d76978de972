#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "piltz/analytic.hpp"
#include "piltz/arith.hpp"
#include "piltz/bounds.hpp"
#include "piltz/field.hpp"

namespace piltz {

enum class ExperimentKind { delta, rprime, convexity, expsum, atkinson, omega, catalog };
enum class FitMethod { running_max, all_points };

std::string to_string(ExperimentKind kind);
std::string to_string(FitMethod method);

/// Every experiment reads the keys it needs and ignores the rest. Loaded
/// from a JSON object whose keys are the member names; unknown keys are
/// rejected.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::delta;
    std::string field = "Qi";
    std::string fields_file;  // empty: built-in fields
    int m = 1;
    int r = 1;
    int l = 2;
    std::int64_t x_max = 1000000;
    double x_min = 1000;
    int points = 64;
    double window = 1;  // fit on the upper fraction of the grid, in log x
    FitMethod fit_method = FitMethod::running_max;
    double zeta_tolerance = 1e-10;
    std::optional<double> beta;  // uniform-in-K exponent parameter
    // convexity
    double sigma = 0.5;
    double t_min = 16;
    double t_max = 4096;
    int t_points = 64;
    // atkinson
    double y = 40;
    double A = 2;
    double B = 50;
    Trig tau = Trig::cos;
    // expsum
    int instances = 8;
    std::int64_t M = 32;
    std::int64_t N = 32;
    double X = 100;
    double exp_alpha = 0.5;
    double exp_beta = 0.5;
    bool unit_coefficients = false;  // all ones instead of random phases
    // omega and catalog
    std::string group = "S3";
    int n = 4;
    std::uint64_t seed = 1;
    // output, not part of the echoed configuration
    std::string out;
    std::string format = "json";
    int threads = 0;
};

ExperimentConfig config_from_json(const nlohmann::json& obj);
ExperimentConfig load_config(const std::string& path);
/// The experiment-defining keys only; output path, format and thread count
/// are left out so that reports do not depend on them.
nlohmann::json config_to_json(const ExperimentConfig& config);
/// Throws InvalidConfig.
void validate(const ExperimentConfig& config);

/// Integer points x_min .. x_max, geometric, duplicates removed.
std::vector<double> geometric_grid(double x_min, double x_max, int points);

struct DeltaSample {
    double x = 0;
    u128 count = 0;
    double main = 0;
    double delta = 0;
};

struct FitResult {
    double theta_hat = 0;
    double intercept = 0;
    double rms = 0;
    double x_lo = 0;
    double x_hi = 0;
    FitMethod method = FitMethod::running_max;
    int points = 0;
};

/// Least squares of log |delta| (or of its running maximum) on log x over
/// samples with x_lo <= x <= x_hi. Throws InsufficientPoints below 8 usable
/// samples and DegenerateFit when every delta is zero.
FitResult fit_exponent(const std::vector<DeltaSample>& samples, double x_lo, double x_hi, FitMethod method);

struct ExperimentReport {
    ExperimentConfig config;
    std::string field_label;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
    std::optional<FitResult> fit;
    nlohmann::json bounds = nlohmann::json::array();
    nlohmann::json extra = nlohmann::json::object();
    std::string summary;  // one line for the terminal
};

using DeltaOverride = std::function<double(double)>;

struct DeltaRun {
    std::vector<DeltaSample> samples;
    FitResult fit;
    ExperimentReport report;
};

/// Delta_K^m on the grid. With an override the samples carry count 0,
/// main 0 and delta = override(x).
DeltaRun run_delta(const ExperimentConfig& config, const DeltaOverride& override = {});

/// V_l^r(x, K) minus rho_K^l x^l / zeta_K(r l), with the ratio column.
DeltaRun run_rprime(const ExperimentConfig& config);

ExperimentReport run_experiment(const ExperimentConfig& config);

void write_report(std::ostream& out, const ExperimentReport& report, const std::string& format);
std::string render_report(const ExperimentReport& report, const std::string& format);

/// Command-line entry point: 0 success, 1 usage error, 2 computation error.
int cli_main(int argc, const char* const* argv);

}  // namespace piltz
