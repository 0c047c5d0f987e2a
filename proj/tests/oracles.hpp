#pragma once
// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms; only the BiPoly/QPoly containers are shared.

#include "approxjac/bipoly.hpp"
#include "approxjac/core.hpp"
#include "approxjac/qpoly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using approxjac::BiPoly;
using approxjac::QPoly;

inline mpq_class random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline mpq_class random_nonzero(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
    for (;;) {
        mpq_class q = random_rational(rng, num_bound, den_bound);
        if (q != 0) return q;
    }
}

// Random polynomial with up to `terms` monomials of degree <= max_deg in
// each variable. With `through_origin` the constant term is omitted.
inline BiPoly random_poly(std::mt19937_64& rng, int terms, int max_deg, bool through_origin = false) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    BiPoly::TermMap m;
    for (int t = 0; t < terms; ++t) {
        int i = deg(rng), j = deg(rng);
        if (through_origin && i == 0 && j == 0) continue;
        m[{i, j}] += random_nonzero(rng);
        if (m[{i, j}] == 0) m.erase({i, j});
    }
    return BiPoly(m);
}

// Evaluation by Horner-free direct summation.
inline mpq_class eval(const BiPoly& p, const mpq_class& x, const mpq_class& y) {
    mpq_class s = 0;
    for (const auto& [mono, c] : p.terms()) {
        mpq_class t = c;
        for (int i = 0; i < mono.x; ++i) t *= x;
        for (int j = 0; j < mono.y; ++j) t *= y;
        s += t;
    }
    return s;
}

// Term-wise formal derivative.
inline BiPoly derivative(const BiPoly& p, bool in_x) {
    BiPoly::TermMap m;
    for (const auto& [mono, c] : p.terms()) {
        const int e = in_x ? mono.x : mono.y;
        if (e == 0) continue;
        approxjac::Monomial d = mono;
        (in_x ? d.x : d.y) -= 1;
        m[d] = c * e;
    }
    return BiPoly(m);
}

// Determinant over Q by fraction-exact Gaussian elimination.
inline mpq_class determinant(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Coefficients of p(x0, y) in y, lowest first.
inline std::vector<mpq_class> specialize_x(const BiPoly& p, const mpq_class& x0) {
    std::vector<mpq_class> c;
    for (const auto& [mono, coef] : p.terms()) {
        if (static_cast<int>(c.size()) <= mono.y) c.resize(static_cast<std::size_t>(mono.y) + 1, 0);
        mpq_class t = coef;
        for (int i = 0; i < mono.x; ++i) t *= x0;
        c[static_cast<std::size_t>(mono.y)] += t;
    }
    return c;
}

// Sylvester determinant of two univariate polynomials given with formal
// degrees m and n (coefficient vectors lowest first, padded as needed).
inline mpq_class sylvester_resultant(std::vector<mpq_class> f, std::vector<mpq_class> g, int m, int n) {
    f.resize(static_cast<std::size_t>(m) + 1, 0);
    g.resize(static_cast<std::size_t>(n) + 1, 0);
    const int size = m + n;
    std::vector<std::vector<mpq_class>> s(static_cast<std::size_t>(size), std::vector<mpq_class>(static_cast<std::size_t>(size), 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f[static_cast<std::size_t>(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g[static_cast<std::size_t>(n - i)];
    return determinant(s);
}

// ord_x of h(x, p(x)): the intersection multiplicity with the smooth branch
// y = p(x), p(0) = 0. Returns nullopt when the substitution vanishes.
inline std::optional<int> order_on_graph(const BiPoly& h, const QPoly& p) {
    QPoly total;
    std::map<int, QPoly> powers;
    powers[0] = QPoly(mpq_class(1));
    for (const auto& [mono, c] : h.terms()) {
        if (!powers.count(mono.y)) powers[mono.y] = p.pow(static_cast<unsigned>(mono.y));
        total = total + powers[mono.y].shifted(mono.x).scaled(c);
    }
    if (total.is_zero()) return std::nullopt;
    return total.order();
}

// ord_t of h(t^n, t^m): intersection multiplicity with y^n - x^m, gcd(n,m) = 1.
inline std::optional<std::int64_t> order_on_monomial_curve(const BiPoly& h, std::int64_t n, std::int64_t m) {
    std::map<std::int64_t, mpq_class> by_power;
    for (const auto& [mono, c] : h.terms()) by_power[mono.x * n + mono.y * m] += c;
    for (const auto& [e, c] : by_power)
        if (c != 0) return e;
    return std::nullopt;
}

// Numerical semigroup membership table up to `limit`.
inline std::vector<bool> semigroup_members(const std::vector<std::int64_t>& gens, std::int64_t limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
    in[0] = true;
    for (std::int64_t v = 1; v <= limit; ++v)
        for (auto g : gens)
            if (g <= v && in[static_cast<std::size_t>(v - g)]) {
                in[static_cast<std::size_t>(v)] = true;
                break;
            }
    return in;
}

// Conductor: least c with every integer >= c in the semigroup. For a branch
// semigroup this equals the Milnor number.
inline std::int64_t conductor(const std::vector<std::int64_t>& gens) {
    std::int64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    if (g != 1) throw std::invalid_argument("conductor: generators not coprime");
    if (std::find(gens.begin(), gens.end(), 1) != gens.end()) return 0;
    const std::int64_t smallest = *std::min_element(gens.begin(), gens.end());
    std::int64_t limit = 64;
    for (;;) {
        // A run of `smallest` consecutive members means everything above is in.
        const auto in = semigroup_members(gens, limit);
        std::int64_t v = limit;
        while (v >= 0 && in[static_cast<std::size_t>(v)]) --v;
        if (limit - v >= smallest) return v + 1;
        limit *= 2;
    }
}

// Random branch semigroup built directly from its defining conditions:
// b0bar = l_0, l_k = l_{k-1}/n_k, b_kbar = l_k * t with gcd(t, n_k) = 1 and
// b_kbar > n_{k-1} b_{k-1}bar. Returns an empty vector when the bound is
// exceeded.
inline std::vector<std::int64_t> random_branch_semigroup(std::mt19937_64& rng, int g, std::int64_t max_gen) {
    std::uniform_int_distribution<int> ndist(2, 3);
    std::vector<std::int64_t> n(static_cast<std::size_t>(g) + 1, 1);
    std::int64_t b0 = 1;
    for (int k = 1; k <= g; ++k) {
        n[static_cast<std::size_t>(k)] = ndist(rng);
        b0 *= n[static_cast<std::size_t>(k)];
    }
    std::vector<std::int64_t> gens{b0};
    std::int64_t l = b0;
    for (int k = 1; k <= g; ++k) {
        const std::int64_t nk = n[static_cast<std::size_t>(k)];
        l /= nk;
        const std::int64_t floor_value = k == 1 ? b0 : n[static_cast<std::size_t>(k - 1)] * gens.back();
        std::int64_t t = floor_value / l + 1;
        std::uniform_int_distribution<std::int64_t> bump(0, 6);
        t += bump(rng);
        while (std::gcd(t, nk) != 1) ++t;
        const std::int64_t v = l * t;
        if (v > max_gen) return {};
        gens.push_back(v);
    }
    return gens;
}

// Random Puiseux characteristic from the same gcd-chain construction.
inline std::vector<std::int64_t> random_characteristic(std::mt19937_64& rng, int g, std::int64_t max_value) {
    std::uniform_int_distribution<int> ndist(2, 4);
    std::vector<std::int64_t> n(static_cast<std::size_t>(g) + 1, 1);
    std::int64_t b0 = 1;
    for (int k = 1; k <= g; ++k) {
        n[static_cast<std::size_t>(k)] = ndist(rng);
        b0 *= n[static_cast<std::size_t>(k)];
    }
    std::vector<std::int64_t> b{b0};
    std::int64_t l = b0;
    for (int k = 1; k <= g; ++k) {
        const std::int64_t nk = n[static_cast<std::size_t>(k)];
        l /= nk;
        std::int64_t t = b.back() / l + 1;
        std::uniform_int_distribution<std::int64_t> bump(0, 5);
        t += bump(rng);
        while (std::gcd(t, nk) != 1) ++t;
        if (l * t > max_value) return {};
        b.push_back(l * t);
    }
    return b;
}

}  // namespace oracle
