#pragma once

#include <span>
#include <vector>

namespace piltz {

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double rms = 0;  // root mean square of the residuals
};

/// Ordinary least squares y ~ slope * x + intercept. Needs two distinct x.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

/// out[i] = max(v[0..i]).
std::vector<double> running_max(std::span<const double> v);

}  // namespace piltz
