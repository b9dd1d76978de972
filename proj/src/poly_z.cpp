#include <algorithm>

#include "piltz/error.hpp"
#include "piltz/poly_z.hpp"

namespace piltz::zpoly {

namespace {

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Poly derivative(const Poly& f) {
    Poly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
    trim(out);
    return out;
}

// Positive multiple of the remainder of a by b.
Poly positive_pseudo_remainder(Poly r, const Poly& b) {
    const int db = degree(b);
    const BigInt lead = b.back();
    const BigInt scale = abs(lead);
    const int lead_sign = sign(lead);
    while (degree(r) >= db && !r.empty()) {
        const int shift = degree(r) - db;
        const BigInt top = r.back();
        for (auto& c : r) c *= scale;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(shift + j)] -= lead_sign * top * b[static_cast<std::size_t>(j)];
        }
        trim(r);
    }
    return r;
}

void divide_by_content(Poly& f) {
    BigInt g = 0;
    for (const auto& c : f) g = gcd(g, abs(c));
    if (g > 1) {
        for (auto& c : f) c /= g;
    }
}

int sign_variations(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

Poly from_int64(std::span<const std::int64_t> coeffs) {
    Poly out;
    out.reserve(coeffs.size());
    for (auto c : coeffs) out.emplace_back(c);
    trim(out);
    return out;
}

BigInt resultant(const Poly& f, const Poly& g) {
    const int m = degree(f);
    const int n = degree(g);
    require(m >= 0 && n >= 0, ErrorCode::PreconditionViolated, "resultant of a zero polynomial");
    if (m == 0 && n == 0) return 1;
    const int size = m + n;
    std::vector<std::vector<BigInt>> mat(static_cast<std::size_t>(size), std::vector<BigInt>(static_cast<std::size_t>(size), 0));
    // rows 0..n-1 hold shifted f, rows n..n+m-1 shifted g; columns run from the leading coefficient down
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) mat[r][r + k] = f[static_cast<std::size_t>(m - k)];
    }
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) mat[n + r][r + k] = g[static_cast<std::size_t>(n - k)];
    }
    BigInt prev = 1;
    int swaps = 0;
    for (int k = 0; k < size - 1; ++k) {
        if (mat[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < size; ++r) {
                if (mat[r][k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(mat[k], mat[pivot]);
            ++swaps;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    BigInt det = mat[size - 1][size - 1];
    return (swaps % 2 == 0) ? det : BigInt(-det);
}

BigInt discriminant(const Poly& f) {
    const int n = degree(f);
    require(n >= 1, ErrorCode::PreconditionViolated, "discriminant needs degree >= 1");
    if (n == 1) return 1;
    BigInt res = resultant(f, derivative(f));
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    return res / f.back();
}

int count_real_roots(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    trim(chain[0]);
    while (degree(chain.back()) > 0) {
        Poly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        divide_by_content(r);
        chain.push_back(std::move(r));
    }
    std::vector<int> at_pos;
    std::vector<int> at_neg;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        const int s = sign(p.back());
        at_pos.push_back(s);
        at_neg.push_back(degree(p) % 2 == 0 ? s : -s);
    }
    return sign_variations(at_neg) - sign_variations(at_pos);
}

BigInt evaluate(const Poly& f, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<BigInt> integer_roots(const Poly& f) {
    std::vector<BigInt> roots;
    if (f.empty()) return roots;
    if (f[0] == 0) roots.emplace_back(0);
    std::size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    if (low >= f.size()) return roots;
    const BigInt a0 = abs(f[low]);
    for (BigInt d = 1; d * d <= a0; ++d) {
        if (a0 % d != 0) continue;
        for (const BigInt& cand : {d, BigInt(a0 / d)}) {
            for (const BigInt& signed_cand : {cand, BigInt(-cand)}) {
                if (evaluate(f, signed_cand) == 0 &&
                    std::find(roots.begin(), roots.end(), signed_cand) == roots.end()) {
                    roots.push_back(signed_cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace piltz::zpoly
