#include <algorithm>

#include "piltz/error.hpp"
#include "piltz/laurent.hpp"

namespace piltz {

LaurentSeries::LaurentSeries(int pole_order, std::vector<double> coeffs) : pole_(pole_order), coeffs_(std::move(coeffs)) {
    require(pole_order >= 0, ErrorCode::PreconditionViolated, "pole order must be non-negative");
}

LaurentSeries LaurentSeries::constant(double c, int top) {
    std::vector<double> v(static_cast<std::size_t>(std::max(top, -1) + 1), 0.0);
    if (!v.empty()) v[0] = c;
    return LaurentSeries(0, std::move(v));
}

double LaurentSeries::operator[](int k) const {
    if (k < -pole_) return 0;
    require(k <= top(), ErrorCode::InsufficientTruncation,
            "coefficient " + std::to_string(k) + " requested, known up to " + std::to_string(top()));
    return coeffs_[static_cast<std::size_t>(k + pole_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& other) const {
    const int pole = std::max(pole_, other.pole_);
    const int hi = std::min(top(), other.top());
    std::vector<double> v(static_cast<std::size_t>(std::max(hi + pole + 1, 0)), 0.0);
    for (int k = -pole; k <= hi; ++k) v[static_cast<std::size_t>(k + pole)] = (*this)[k] + other[k];
    return LaurentSeries(pole, std::move(v));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& other) const {
    const int pole = pole_ + other.pole_;
    const int hi = std::min(top() - other.pole_, other.top() - pole_);
    std::vector<double> v(static_cast<std::size_t>(std::max(hi + pole + 1, 0)), 0.0);
    for (int k = -pole; k <= hi; ++k) {
        double sum = 0;
        for (int i = -pole_; i <= k + other.pole_; ++i) sum += (*this)[i] * other[k - i];
        v[static_cast<std::size_t>(k + pole)] = sum;
    }
    return LaurentSeries(pole, std::move(v));
}

LaurentSeries LaurentSeries::pow(int m) const {
    require(m >= 1, ErrorCode::PreconditionViolated, "power must be >= 1");
    LaurentSeries out = *this;
    for (int i = 1; i < m; ++i) out = out * *this;
    return out;
}

}  // namespace piltz
