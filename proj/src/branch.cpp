#include "approxjac/branch.hpp"

#include "approxjac/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace approxjac {

namespace {

std::string join(const std::vector<std::int64_t>& v, char open, char close) {
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << close;
    return os.str();
}

// Shared by both sequence types: gcd chain strictly decreasing to 1.
std::vector<std::int64_t> gcd_chain(const std::vector<std::int64_t>& v, const char* what) {
    if (v.empty()) throw ValidationError(std::string(what) + ": empty sequence");
    std::vector<std::int64_t> l;
    l.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) throw ValidationError(std::string(what) + ": entries must be positive");
        l.push_back(i == 0 ? v[0] : std::gcd(l.back(), v[i]));
        if (i > 0 && l[i] >= l[i - 1])
            throw ValidationError(std::string(what) + ": gcd chain does not strictly decrease at index " +
                                  std::to_string(i));
    }
    if (l.back() != 1) throw ValidationError(std::string(what) + ": gcd of all entries is not 1");
    return l;
}

}  // namespace

CharSequence::CharSequence(std::vector<std::int64_t> b) : b_(std::move(b)) {
    gcd_chain(b_, "characteristic");
    for (std::size_t i = 1; i < b_.size(); ++i)
        if (b_[i] <= b_[i - 1]) throw ValidationError("characteristic: entries must strictly increase");
}

std::string CharSequence::to_string() const { return join(b_, '(', ')'); }

Semigroup::Semigroup(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
    l_ = gcd_chain(gens_, "semigroup");
    if (gens_.size() >= 2 && gens_[1] <= gens_[0])
        throw ValidationError("semigroup: b1bar must exceed b0bar (transversality)");
    for (int q = 1; q + 1 < static_cast<int>(gens_.size()); ++q)
        if (gens_[static_cast<std::size_t>(q + 1)] <= n(q) * gens_[static_cast<std::size_t>(q)])
            throw ValidationError("semigroup: b" + std::to_string(q + 1) + "bar must exceed n" +
                                  std::to_string(q) + "*b" + std::to_string(q) + "bar");
}

std::int64_t Semigroup::n(int k) const {
    if (k < 1 || k > g()) throw std::out_of_range("Semigroup::n index");
    return l(k - 1) / l(k);
}

std::int64_t Semigroup::mbar(int k) const {
    if (k < 0 || k >= g()) throw std::out_of_range("Semigroup::mbar index");
    return gen(k + 1) / l(k + 1);
}

std::string Semigroup::to_string() const { return join(gens_, '<', '>'); }

BiPoly approximate_root(const BiPoly& f, int p) {
    if (!f.is_monic_in_y()) throw ValidationError("approximate_root: polynomial is not monic in y");
    const int d = f.deg_y();
    if (p <= 0 || d % p != 0) throw ValidationError("approximate_root: p must divide deg_y f");
    const int e = d / p;
    const std::vector<QPoly> fc = f.y_coeffs();

    // Coefficient j of g (of y^{e-j}) is fixed by the y^{d-j} coefficient of
    // g^p, which is p*c_j plus terms in c_1..c_{j-1}.
    std::vector<QPoly> gc(static_cast<std::size_t>(e) + 1);
    gc[static_cast<std::size_t>(e)] = QPoly(mpq_class(1));
    const mpq_class inv_p(1, p);
    for (int j = 1; j <= e; ++j) {
        const BiPoly current = BiPoly::from_y_coeffs(gc);
        const BiPoly diff = f - current.pow(p);
        gc[static_cast<std::size_t>(e - j)] = diff.y_coeff(d - j).scaled(inv_p);
    }
    return BiPoly::from_y_coeffs(gc);
}

BranchAnalysis analyze_branch(const BiPoly& f) {
    auto reject = [](const std::string& why) {
        return ValidationError("input not an irreducible branch transverse to x=0: " + why);
    };
    if (f.is_zero()) throw reject("zero polynomial");
    if (!f.is_monic_in_y()) throw reject("polynomial is not monic in y");
    const int d = f.deg_y();
    if (d < 1) throw reject("polynomial has no y-degree");
    if (f.at_x0() != QPoly::monomial(1, d)) throw reject("not a Weierstrass polynomial (f(0,y) != y^d)");
    if (d == 1) return {Semigroup({1}), {}};

    std::vector<std::int64_t> gens{d};
    std::vector<BiPoly> roots;
    std::int64_t l = d;
    while (l > 1) {
        BiPoly root = approximate_root(f, static_cast<int>(l));
        const ExtInt b = intersection_multiplicity(f, root);
        if (b.is_infinite()) throw reject("infinite intersection with an approximate root (reducible input)");
        if (gens.size() == 1 && b.value() < d)
            throw reject("(f, f^(0))_0 = " + std::to_string(b.value()) + " < deg_y f = " + std::to_string(d) +
                         "; x = 0 is tangent to the curve, try swapping x and y");
        const std::int64_t next = std::gcd(l, b.value());
        if (next == l)
            throw reject("gcd chain stalls at l = " + std::to_string(l) + " with b" + std::to_string(gens.size()) +
                         "bar = " + std::to_string(b.value()));
        gens.push_back(b.value());
        roots.push_back(std::move(root));
        l = next;
    }
    try {
        return {Semigroup(std::move(gens)), std::move(roots)};
    } catch (const ValidationError& e) {
        throw reject(e.what());
    }
}

Semigroup semigroup_of(const BiPoly& f) { return analyze_branch(f).semigroup; }

std::vector<BiPoly> characteristic_roots(const BiPoly& f) { return analyze_branch(f).roots; }

Semigroup char_to_semigroup(const CharSequence& c) {
    const auto& b = c.values();
    std::vector<std::int64_t> gens(b.begin(), b.begin() + std::min<std::size_t>(2, b.size()));
    std::int64_t l_prev = std::gcd(b[0], b.size() > 1 ? b[1] : b[0]);
    for (std::size_t q = 2; q < b.size(); ++q) {
        const std::int64_t l_prevprev = q == 2 ? b[0] : std::gcd(b[0], std::gcd(b[1], b[q - 2]));
        (void)l_prevprev;
        std::int64_t lqm2 = b[0];
        for (std::size_t i = 1; i + 1 < q; ++i) lqm2 = std::gcd(lqm2, b[i]);
        const std::int64_t n_prev = lqm2 / l_prev;
        gens.push_back(n_prev * gens[q - 1] + b[q] - b[q - 1]);
        l_prev = std::gcd(l_prev, b[q]);
    }
    return Semigroup(std::move(gens));
}

CharSequence semigroup_to_char(const Semigroup& s) {
    const auto& g = s.gens();
    std::vector<std::int64_t> b(g.begin(), g.begin() + std::min<std::size_t>(2, g.size()));
    for (int q = 2; q <= s.g(); ++q)
        b.push_back(g[static_cast<std::size_t>(q)] - s.n(q - 1) * g[static_cast<std::size_t>(q - 1)] +
                    b[static_cast<std::size_t>(q - 1)]);
    return CharSequence(std::move(b));
}

std::int64_t milnor_from_semigroup(const Semigroup& s) {
    std::int64_t mu = 1 - s.gen(0);
    for (int q = 1; q <= s.g(); ++q) mu += (s.n(q) - 1) * s.gen(q);
    return mu;
}

Semigroup approximate_root_semigroup(const Semigroup& s, int k) {
    if (k < 0 || k > s.g() - 1)
        throw ValidationError("approximate_root_semigroup: k must lie in 0.." + std::to_string(s.g() - 1));
    std::vector<std::int64_t> gens;
    for (int i = 0; i <= k; ++i) gens.push_back(s.gen(i) / s.l(k));
    return Semigroup(std::move(gens));
}

std::vector<std::int64_t> semigroup_representation(const Semigroup& s, int k) {
    if (k < 1 || k > s.g()) throw std::out_of_range("semigroup_representation: k");
    std::vector<std::int64_t> a(static_cast<std::size_t>(k), 0);
    std::int64_t v = s.n(k) * s.gen(k);
    for (int j = k - 1; j >= 1; --j) {
        // solve v/l_j - a_j (b_j/l_j) = 0 mod n_j
        const std::int64_t nj = s.n(j);
        const std::int64_t unit = (s.gen(j) / s.l(j)) % nj;
        const std::int64_t target = (v / s.l(j)) % nj;
        std::int64_t aj = 0;
        while ((aj * unit - target) % nj != 0) ++aj;
        a[static_cast<std::size_t>(j)] = aj;
        v -= aj * s.gen(j);
    }
    if (v < 0 || v % s.gen(0) != 0)
        throw ValidationError("semigroup_representation: n_k b_k is not in the semigroup of the earlier generators");
    a[0] = v / s.gen(0);
    return a;
}

BiPoly build_test_branch(const CharSequence& c, std::mt19937_64& rng, const BranchGeneratorOptions& opts) {
    const Semigroup target = char_to_semigroup(c);
    if (target.g() == 0) return BiPoly::y();

    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<int> coeffs{1, -1, 2, -2, 3, -3};
    std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);

    std::vector<std::vector<std::int64_t>> reps;
    for (int k = 1; k <= target.g(); ++k) reps.push_back(semigroup_representation(target, k));
    const int d = static_cast<int>(target.gen(0));

    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        BiPoly f0 = BiPoly::y();
        if (attempt > 0 && coin(rng)) f0 = f0 + BiPoly::monomial(coeffs[pick(rng)], 1 + coin(rng), 0);
        std::vector<BiPoly> fs{f0};
        for (int k = 1; k <= target.g(); ++k) {
            const auto& a = reps[static_cast<std::size_t>(k - 1)];
            BiPoly mono = BiPoly::monomial(attempt == 0 ? 1 : coeffs[pick(rng)], static_cast<int>(a[0]), 0);
            for (int j = 1; j < k; ++j) mono = mono * fs[static_cast<std::size_t>(j - 1)].pow(static_cast<int>(a[static_cast<std::size_t>(j)]));
            fs.push_back(fs.back().pow(static_cast<int>(target.n(k))) - mono);
        }
        BiPoly f = fs.back();
        if (attempt > 0 && unit(rng) < opts.perturb_probability) {
            // terms above the last monomial in the (b0bar, b1bar) weighting
            const std::int64_t bound = target.n(target.g()) * target.gen(target.g());
            std::uniform_int_distribution<int> jy(0, d - 1);
            const int terms = 1 + coin(rng);
            for (int t = 0; t < terms; ++t) {
                const int j = jy(rng);
                const std::int64_t need = bound - j * target.gen(1);
                int i = static_cast<int>(std::max<std::int64_t>(1, need / target.gen(0) + 1));
                f = f + BiPoly::monomial(coeffs[pick(rng)], i, j);
            }
        }
        try {
            if (semigroup_of(f) == target) return f;
        } catch (const ValidationError&) {
        }
    }
    throw ValidationError("build_test_branch: no candidate realized " + target.to_string());
}

Semigroup random_semigroup(std::mt19937_64& rng, int max_g, std::int64_t max_gen, std::int64_t max_b0) {
    std::uniform_int_distribution<int> gdist(1, max_g);
    for (;;) {
        const int g = gdist(rng);
        std::vector<std::int64_t> n(static_cast<std::size_t>(g) + 1, 1);
        std::int64_t b0 = 1;
        std::uniform_int_distribution<std::int64_t> ndist(2, 4);
        for (int k = 1; k <= g; ++k) {
            n[static_cast<std::size_t>(k)] = ndist(rng);
            b0 *= n[static_cast<std::size_t>(k)];
        }
        if (b0 > max_b0) continue;
        std::vector<std::int64_t> l(static_cast<std::size_t>(g) + 1);
        l[static_cast<std::size_t>(g)] = 1;
        for (int k = g - 1; k >= 0; --k) l[static_cast<std::size_t>(k)] = l[static_cast<std::size_t>(k + 1)] * n[static_cast<std::size_t>(k + 1)];

        std::vector<std::int64_t> gens{b0};
        bool ok = true;
        for (int k = 1; k <= g && ok; ++k) {
            const std::int64_t lk = l[static_cast<std::size_t>(k)];
            const std::int64_t nk = n[static_cast<std::size_t>(k)];
            // lower bound: b1bar > b0bar, b_kbar > n_{k-1} b_{k-1}bar
            const std::int64_t floor_val = k == 1 ? gens[0] : n[static_cast<std::size_t>(k - 1)] * gens.back();
            std::int64_t t = floor_val / lk + 1;
            std::int64_t span = std::max<std::int64_t>(1, (max_gen / lk - t) / (2 * (g - k + 1)));
            if (span <= 0 || t > max_gen / lk) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<std::int64_t> extra(0, std::min<std::int64_t>(span, 6 * nk));
            t += extra(rng);
            while (std::gcd(t, nk) != 1) ++t;
            if (t * lk > max_gen) {
                ok = false;
                break;
            }
            gens.push_back(t * lk);
        }
        if (!ok) continue;
        try {
            return Semigroup(std::move(gens));
        } catch (const ValidationError&) {
        }
    }
}

}  // namespace approxjac
