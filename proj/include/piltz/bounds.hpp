#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "piltz/coeff_table.hpp"
#include "piltz/field.hpp"
#include "piltz/special.hpp"

namespace piltz {

using Rational = boost::rational<std::int64_t>;

enum class BoundSource {
    huxley,
    muller,
    bordelles,
    lao,
    nowak,
    cub,
    lindelof,
    omega,
    dirichlet_m2,
    cubi_uniform,
    rprime_uniform,
    rprime_lindelof,
};

std::string to_string(BoundSource source);

/// Delta_K^m(x) = O(x^theta (log x)^log_power), with an extra x^eps when
/// `epsilon` is set. Omega entries are lower bounds, Lindelof entries assume
/// the Lindelof hypothesis.
struct ExponentBound {
    BoundSource source = BoundSource::cub;
    Rational theta;
    double log_power = 0;
    bool epsilon = false;
    bool valid = false;  // whether (n, m, beta) lies in the stated range
    bool conditional = false;
    bool lower_bound = false;
    bool best = false;
};

/// Every catalogued statement evaluated at (n, m, beta), valid or not.
/// The uniform-in-K entry appears only when beta is given.
std::vector<ExponentBound> evaluate_catalog(int n, int m, std::optional<Rational> beta = std::nullopt);

/// The valid entries of evaluate_catalog, with the smallest unconditional
/// upper bound flagged best (first in catalog order on ties).
std::vector<ExponentBound> exponent_catalog(int n, int m, std::optional<Rational> beta = std::nullopt);

/// [{source, theta_num, theta_den, log_power, epsilon, valid, conditional, lower_bound, best}]
nlohmann::json catalog_to_json(const std::vector<ExponentBound>& bounds);

/// Exponents for E_l^r(x, K): the uniform bound for degree <= n with
/// D_K <= C x^beta, and the bound under the Lindelof hypothesis.
std::vector<ExponentBound> rprime_exponents(int n, int r, int l, Rational beta = 0);

/// Largest admissible beta is 8/(2n+5) minus epsilon; beta must be below it.
Rational beta_limit(int n);

using Permutation = std::vector<int>;  // images of 0..N-1

struct GaloisData {
    std::vector<Permutation> group;
    std::vector<Permutation> subgroup;
    /// [G : H]
    int degree() const { return subgroup.empty() ? 0 : static_cast<int>(group.size() / subgroup.size()); }
};

/// Regular action of the cyclic group of order n; H trivial, so K is Galois.
GaloisData cyclic_galois_data(int n);
/// S_N with H the stabilizer of one point: a degree-N field with full Galois group.
GaloisData symmetric_galois_data(int N);
/// Throws NotAGroup or NotASubgroup.
void validate(const GaloisData& data);

struct OmegaConstants {
    std::vector<Rational> delta;  // delta_1 .. delta_n
    int R = 0;
    double kappa = 0;
    double lambda = 0;
};

OmegaConstants omega_constants(const GaloisData& data, int m);

struct BalanceTerm {
    double coefficient = 0;
    double exponent = 0;
};

struct BalanceResult {
    double q = 0;
    double achieved = 0;
    double bound = 0;
};

/// Minimizes sum A_n q^{u_n} + sum B_p q^{-v_p} over [max(Q1, 1), Q2] and
/// returns the bound with constant N + P.
BalanceResult srinivasan_balance(const std::vector<BalanceTerm>& growing, const std::vector<BalanceTerm>& shrinking,
                                 double Q1, double Q2);

/// sum_{M<m<=M1} a_m sum_{N<n<=N1} b_n e(X (m/M)^alpha (n/N)^beta), with
/// M1 = M + a.size() and N1 = N + b.size().
struct BilinearInstance {
    double X = 0;
    double alpha = 0.5;
    double beta = 0.5;
    std::int64_t M = 1;
    std::vector<cplx> a;
    std::int64_t N = 1;
    std::vector<cplx> b;
};

cplx bilinear_expsum(const BilinearInstance& instance);

struct PropWindow {
    std::int64_t S = 1;
    /// dyadic M, N <= S are admissible when S / ratio <= M N <= S * ratio
    double ratio = 2;
};

struct PropSumResult {
    double value = 0;  // S^{-(mn+1)/(2mn)} max |inner sum|
    double max_abs = 0;
    std::int64_t M = 0, M1 = 0, N = 0, N1 = 0;
    int windows = 0;
};

/// Bilinear sum of F_K against e(mn (x l k / D_K^m)^{1/mn}), maximized over
/// the admissible dyadic windows and all endpoints M1, N1.
PropSumResult prop_ideal_sum(const FieldDescriptor& field, int m, double x, const PropWindow& window,
                             const CoefficientTable& f_table);

struct ExpsumReportRow {
    double abs_s = 0;
    double wu_lhs = 0;
    double wu_rhs = 0;
    double wu_ratio = 0;
    double bordelles_lhs = 0;
    double bordelles_rhs = 0;
    double bordelles_ratio = 0;
    bool x_at_most_m = false;
};

ExpsumReportRow wu_bordelles_row(const BilinearInstance& instance);
std::vector<ExpsumReportRow> wu_bordelles_report(const std::vector<BilinearInstance>& instances);
void write_expsum_csv(std::ostream& out, const std::vector<ExpsumReportRow>& rows);

}  // namespace piltz
