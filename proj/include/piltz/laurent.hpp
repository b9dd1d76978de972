#pragma once

#include <vector>

namespace piltz {

/// Truncated Laurent expansion sum_{k=-pole}^{top} c_k (s-1)^k. Coefficients
/// beyond top are unknown, and every operation keeps track of how far its
/// result is known.
class LaurentSeries {
public:
    LaurentSeries() = default;
    /// coeffs[i] is c_{i - pole_order}.
    LaurentSeries(int pole_order, std::vector<double> coeffs);

    static LaurentSeries constant(double c, int top);

    int pole_order() const { return pole_; }
    /// Highest known index.
    int top() const { return static_cast<int>(coeffs_.size()) - 1 - pole_; }
    /// Number of known coefficients with index >= 0, i.e. top() + 1.
    int truncation() const { return top() + 1; }
    /// c_k; zero below the pole, InsufficientTruncation above top().
    double operator[](int k) const;
    const std::vector<double>& coefficients() const { return coeffs_; }

    LaurentSeries operator+(const LaurentSeries& other) const;
    LaurentSeries operator*(const LaurentSeries& other) const;
    /// m-fold product, m >= 1.
    LaurentSeries pow(int m) const;

private:
    int pole_ = 0;
    std::vector<double> coeffs_;
};

}  // namespace piltz
