#include <algorithm>

#include "piltz/arith.hpp"
#include "piltz/error.hpp"
#include "piltz/poly_zp.hpp"

namespace piltz::zp {

namespace {

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return piltz::powmod(a, p - 2, p); }

Poly monomial_x() { return Poly{0, 1}; }

std::uint64_t seed_for(const Poly& f, std::uint64_t p) {
    // FNV-1a over p and the coefficients
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(p);
    for (auto c : f) mix(c);
    return h;
}

Poly random_poly(int below_degree, std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    Poly a(static_cast<std::size_t>(below_degree));
    for (auto& c : a) c = dist(rng);
    trim(a);
    return a;
}

}  // namespace

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(std::span<const std::int64_t> coeffs, std::uint64_t p) {
    Poly out(coeffs.size());
    const auto sp = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::int64_t r = coeffs[i] % sp;
        if (r < 0) r += sp;
        out[i] = static_cast<std::uint64_t>(r);
    }
    trim(out);
    return out;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + piltz::mulmod(a[i], b[j], p)) % p;
        }
    }
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
    require(!b.empty(), ErrorCode::PreconditionViolated, "polynomial division by zero");
    Poly r = a;
    const int db = degree(b);
    if (degree(r) < db) return {Poly{}, r};
    const std::uint64_t lead_inv = inverse(b.back(), p);
    Poly q(static_cast<std::size_t>(degree(r) - db + 1), 0);
    for (int k = degree(r); k >= db; --k) {
        const std::uint64_t coef = piltz::mulmod(r[static_cast<std::size_t>(k)], lead_inv, p);
        q[static_cast<std::size_t>(k - db)] = coef;
        if (coef == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(k - db + j)];
            slot = (slot + p - piltz::mulmod(coef, b[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    trim(q);
    trim(r);
    return {q, r};
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) { return mod(mul(a, b, p), m, p); }

Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
    Poly result = mod(Poly{1}, m, p);
    base = mod(base, m, p);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m, p);
        exp >>= 1;
        if (exp > 0) base = mulmod(base, base, m, p);
    }
    return result;
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = piltz::mulmod(a[i], i % p, p);
    trim(out);
    return out;
}

Poly make_monic(const Poly& a, std::uint64_t p) {
    if (a.empty()) return a;
    const std::uint64_t inv = inverse(a.back(), p);
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = piltz::mulmod(a[i], inv, p);
    return out;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    if (degree(f) < 1) return out;
    Poly c = gcd(f, derivative(f, p), p);
    Poly w = divmod(f, c, p).first;
    int i = 1;
    while (degree(w) > 0) {
        Poly y = gcd(w, c, p);
        Poly fac = divmod(w, y, p).first;
        if (degree(fac) > 0) out.emplace_back(make_monic(fac, p), i);
        w = std::move(y);
        c = divmod(c, w, p).first;
        ++i;
    }
    if (degree(c) > 0) {
        // c is a polynomial in x^p; its p-th root over F_p just drops the gaps
        Poly root;
        for (std::size_t k = 0; k < c.size(); k += p) root.push_back(c[k]);
        for (auto& [g, mult] : squarefree_decomposition(make_monic(root, p), p)) {
            out.emplace_back(std::move(g), mult * static_cast<int>(p));
        }
    }
    return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    Poly g = make_monic(f, p);
    Poly h = monomial_x();
    int d = 1;
    while (degree(g) >= 2 * d) {
        h = powmod(h, p, g, p);
        Poly common = gcd(sub(h, monomial_x(), p), g, p);
        if (degree(common) > 0) {
            out.emplace_back(common, d);
            g = divmod(g, common, p).first;
            h = mod(h, g, p);
        }
        ++d;
    }
    if (degree(g) > 0) out.emplace_back(g, degree(g));
    return out;
}

std::vector<Poly> equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng) {
    const int n = degree(f);
    if (n <= d) return {make_monic(f, p)};
    for (;;) {
        Poly a = random_poly(n, p, rng);
        if (degree(a) < 1) continue;
        Poly b;
        if (p == 2) {
            // absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2 on each component
            Poly term = mod(a, f, p);
            b = term;
            for (int j = 1; j < d; ++j) {
                term = mulmod(term, term, f, p);
                b = add(b, term, p);
            }
        } else {
            // a^((p^d - 1)/2) = prod_{j<d} (a^((p-1)/2))^(p^j)
            Poly u = powmod(a, (p - 1) / 2, f, p);
            b = u;
            for (int j = 1; j < d; ++j) {
                u = powmod(u, p, f, p);
                b = mulmod(b, u, f, p);
            }
            b = sub(b, Poly{1}, p);
        }
        Poly g = gcd(b, f, p);
        const int dg = degree(g);
        if (dg > 0 && dg < n) {
            auto left = equal_degree(g, d, p, rng);
            auto right = equal_degree(divmod(f, g, p).first, d, p, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<Factor> factor(const Poly& f, std::uint64_t p) {
    require(degree(f) >= 0, ErrorCode::PreconditionViolated, "cannot factor the zero polynomial");
    std::mt19937_64 rng(seed_for(f, p));
    std::vector<Factor> out;
    for (const auto& [part, mult] : squarefree_decomposition(make_monic(f, p), p)) {
        for (const auto& [block, d] : distinct_degree(part, p)) {
            for (auto& irreducible : equal_degree(block, d, p, rng)) {
                out.push_back({std::move(irreducible), mult});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        if (a.poly != b.poly) return a.poly < b.poly;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

int count_distinct_roots(const Poly& f, std::uint64_t p) {
    if (degree(f) < 1) return 0;
    Poly g = make_monic(f, p);
    Poly h = powmod(monomial_x(), p, g, p);
    return std::max(0, degree(gcd(sub(h, monomial_x(), p), g, p)));
}

}  // namespace piltz::zp
