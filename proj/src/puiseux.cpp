#include "approxjac/puiseux.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace approxjac {

namespace {

namespace mp = boost::multiprecision;

// Precision tiers. zero_tol is the relative threshold (against the
// accumulated magnitude) under which a computed coefficient counts as zero;
// cluster_tol is the relative threshold for vanishing derivatives at a
// multiple root.
struct Tier0 {
    using R = double;
    using C = std::complex<double>;
    static constexpr double zero_tol = 1e-9;
    static constexpr double cluster_tol = 1e-8;
    static constexpr double eps = 1e-15;
    static constexpr int max_iter = 400;
};

struct Tier1 {
    using R = mp::cpp_bin_float_50;
    using C = mp::cpp_complex_50;
    static constexpr double zero_tol = 1e-30;
    static constexpr double cluster_tol = 1e-25;
    static constexpr double eps = 1e-48;
    static constexpr int max_iter = 800;
};

struct Tier2 {
    using R = mp::cpp_bin_float_100;
    using C = mp::cpp_complex_100;
    static constexpr double zero_tol = 1e-60;
    static constexpr double cluster_tol = 1e-50;
    static constexpr double eps = 1e-97;
    static constexpr int max_iter = 1600;
};

template <class R>
R from_mpq(const mpq_class& q) {
    if constexpr (std::is_same_v<R, double>) {
        return q.get_d();
    } else {
        return R(q.get_num().get_str()) / R(q.get_den().get_str());
    }
}

template <class C>
auto cabs(const C& z) {
    using std::abs;
    return abs(z);
}

template <class C>
std::complex<double> to_dcomplex(const C& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::string describe(const std::vector<std::complex<double>>& coeffs) {
    std::ostringstream os;
    os << std::setprecision(10);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << " + ";
        os << "(" << coeffs[i].real() << (coeffs[i].imag() < 0 ? "" : "+") << coeffs[i].imag() << "i)*c^" << i;
    }
    return os.str();
}

template <class T>
struct Coef {
    typename T::C v;
    typename T::R mag;
};

template <class T>
using XSeries = std::map<Rational, Coef<T>>;

template <class T>
using Poly = std::vector<XSeries<T>>;

template <class T>
class Expander {
public:
    using R = typename T::R;
    using C = typename T::C;
    using Prefix = std::vector<std::pair<Rational, C>>;

    Expander(Rational depth, double band) : depth_(depth), band_(band) {}

    std::vector<Prefix> run(const BiPoly& h, int m) {
        const int d = h.deg_y();
        Poly<T> P(static_cast<std::size_t>(d) + 1);
        for (const auto& [mono, c] : h.terms()) {
            const R v = from_mpq<R>(c);
            P[static_cast<std::size_t>(mono.y)][Rational(mono.x)] = Coef<T>{C(v), cabs(C(v))};
        }
        stage(std::move(P), m, {}, Rational(0));
        return std::move(out_);
    }

private:
    Rational depth_;
    double band_;
    std::vector<Prefix> out_;

    // true when the value is nonzero; throws on the ambiguity band
    bool nonzero(const C& v, const R& mag) const {
        const R a = cabs(v);
        if (a <= R(T::zero_tol) * mag) return false;
        if (a <= R(T::zero_tol * band_) * mag)
            throw NumericalError("coefficient " + std::to_string(static_cast<double>(a)) +
                                 " is within the ambiguity band of magnitude " +
                                 std::to_string(static_cast<double>(mag)));
        return true;
    }

    void emit(const Prefix& prefix, int count) {
        for (int i = 0; i < count; ++i) out_.push_back(prefix);
    }

    void stage(Poly<T> P, int m, const Prefix& prefix, const Rational& level) {
        const Rational remaining = depth_ - level;
        const Rational cut = remaining * m;
        for (auto& row : P)
            for (auto it = row.begin(); it != row.end();)
                it = it->first >= cut ? row.erase(it) : std::next(it);

        std::vector<std::optional<Rational>> ord(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m && j < static_cast<int>(P.size()); ++j)
            if (!P[static_cast<std::size_t>(j)].empty()) ord[static_cast<std::size_t>(j)] = P[static_cast<std::size_t>(j)].begin()->first;
        if (!ord[static_cast<std::size_t>(m)] || *ord[static_cast<std::size_t>(m)] != Rational(0))
            throw NumericalError("lost the unit coefficient of y^" + std::to_string(m));

        int a = 0;
        while (!ord[static_cast<std::size_t>(a)]) ++a;
        emit(prefix, a);

        while (a < m) {
            // next lower-hull vertex: steepest descent, furthest on ties
            int b = -1;
            Rational q;
            for (int j = a + 1; j <= m; ++j) {
                if (!ord[static_cast<std::size_t>(j)]) continue;
                const Rational s = (*ord[static_cast<std::size_t>(a)] - *ord[static_cast<std::size_t>(j)]) / Rational(j - a);
                if (b < 0 || s >= q) {
                    b = j;
                    q = s;
                }
            }
            if (q >= remaining) {
                emit(prefix, b - a);
            } else {
                solve_edge(P, a, b, q, m, prefix, level);
            }
            a = b;
        }
    }

    void solve_edge(const Poly<T>& P, int a, int b, const Rational& q, int m, const Prefix& prefix,
                    const Rational& level) {
        (void)m;
        const Rational M = P[static_cast<std::size_t>(a)].begin()->first + q * a;
        std::vector<C> edge(static_cast<std::size_t>(b - a) + 1, C(0));
        int step = 0;
        for (int j = a; j <= b; ++j) {
            const auto& row = P[static_cast<std::size_t>(j)];
            if (row.empty()) continue;
            const auto& [e, c] = *row.begin();
            if (e + q * j == M) {
                edge[static_cast<std::size_t>(j - a)] = c.v;
                step = std::gcd(step, j - a);
            }
        }
        // solve in w = c^step
        std::vector<C> w_poly;
        for (std::size_t t = 0; t < edge.size(); t += static_cast<std::size_t>(step)) w_poly.push_back(edge[t]);

        std::vector<std::pair<C, int>> w_roots;
        try {
            w_roots = roots_with_multiplicity(w_poly);
        } catch (const NumericalError& e) {
            std::vector<std::complex<double>> d;
            for (const auto& c : edge) d.push_back(to_dcomplex(c));
            throw NumericalError(std::string(e.what()) + " for edge polynomial " + describe(d));
        }

        const R pi = boost::math::constants::pi<R>();
        for (const auto& [w, mult] : w_roots) {
            using std::atan2;
            using std::cos;
            using std::pow;
            using std::sin;
            const R rad = pow(R(cabs(w)), R(1) / R(step));
            const R ang = atan2(w.imag(), w.real());
            for (int t = 0; t < step; ++t) {
                const R th = (ang + 2 * pi * R(t)) / R(step);
                const C c(rad * cos(th), rad * sin(th));
                Poly<T> Q = substitute(P, q, c, M, (depth_ - level - q) * mult);
                int r = 0;
                while (r < static_cast<int>(Q.size()) &&
                       (Q[static_cast<std::size_t>(r)].empty() || Q[static_cast<std::size_t>(r)].begin()->first != Rational(0)))
                    ++r;
                if (r != mult) {
                    std::vector<std::complex<double>> d;
                    for (const auto& x : edge) d.push_back(to_dcomplex(x));
                    throw NumericalError("multiplicity mismatch (" + std::to_string(r) + " vs " +
                                         std::to_string(mult) + ") for edge polynomial " + describe(d));
                }
                Prefix next = prefix;
                next.emplace_back(level + q, c);
                stage(std::move(Q), mult, next, level + q);
            }
        }
    }

    Poly<T> substitute(const Poly<T>& P, const Rational& q, const C& c, const Rational& M, const Rational& cutoff) {
        const int deg = static_cast<int>(P.size()) - 1;
        std::vector<C> cp(static_cast<std::size_t>(deg) + 1);
        std::vector<R> ap(static_cast<std::size_t>(deg) + 1);
        cp[0] = C(1);
        ap[0] = R(1);
        const R ac = cabs(c);
        for (int p = 1; p <= deg; ++p) {
            cp[static_cast<std::size_t>(p)] = cp[static_cast<std::size_t>(p - 1)] * c;
            ap[static_cast<std::size_t>(p)] = ap[static_cast<std::size_t>(p - 1)] * ac;
        }
        std::vector<std::vector<R>> binom(static_cast<std::size_t>(deg) + 1);
        for (int j = 0; j <= deg; ++j) {
            binom[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(j) + 1, R(1));
            for (int i = 1; i < j; ++i)
                binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    binom[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] +
                    binom[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
        }

        Poly<T> Q(P.size());
        for (int j = 0; j <= deg; ++j) {
            for (const auto& [e, coef] : P[static_cast<std::size_t>(j)]) {
                const Rational ne = e + q * j - M;
                if (ne >= cutoff) continue;
                for (int i = 0; i <= j; ++i) {
                    const R bn = binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    const C v = coef.v * cp[static_cast<std::size_t>(j - i)] * C(bn);
                    const R mg = coef.mag * ap[static_cast<std::size_t>(j - i)] * bn;
                    auto [it, fresh] = Q[static_cast<std::size_t>(i)].try_emplace(ne, Coef<T>{v, mg});
                    if (!fresh) {
                        it->second.v += v;
                        it->second.mag += mg;
                    }
                }
            }
        }
        for (auto& row : Q) {
            for (auto it = row.begin(); it != row.end();) {
                if (it->first < Rational(0)) throw NumericalError("negative exponent after substitution");
                it = nonzero(it->second.v, it->second.mag) ? std::next(it) : row.erase(it);
            }
        }
        return Q;
    }

    // ----- univariate root finding -----

    static C horner(const std::vector<C>& p, const C& z) {
        C acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    static std::vector<C> derivative(const std::vector<C>& p) {
        std::vector<C> d;
        for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * C(R(static_cast<double>(i))));
        return d;
    }

    static R scale_at(const std::vector<C>& p, const R& az) {
        R acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * az + R(cabs(*it));
        return acc;
    }

    static std::vector<C> aberth(const std::vector<C>& p) {
        const int n = static_cast<int>(p.size()) - 1;
        if (n == 1) return {-p[0] / p[1]};
        const std::vector<C> dp = derivative(p);
        // initial circle from the Fujiwara bound
        R radius(0);
        for (int i = 0; i < n; ++i) {
            using std::pow;
            const R ratio = R(cabs(p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(n)]));
            if (ratio > 0) radius = std::max(radius, R(pow(ratio, R(1) / R(n - i))));
        }
        if (radius == 0) radius = R(1);
        const R pi = boost::math::constants::pi<R>();
        std::vector<C> z(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            using std::cos;
            using std::sin;
            const R th = 2 * pi * R(k) / R(n) + R(0.4);
            z[static_cast<std::size_t>(k)] = C(radius * cos(th), radius * sin(th));
        }
        int quiet = 0;
        for (int it = 0; it < T::max_iter && quiet < 3; ++it) {
            R worst(0);
            for (int k = 0; k < n; ++k) {
                C& zk = z[static_cast<std::size_t>(k)];
                const C pv = horner(p, zk);
                if (cabs(pv) == 0) continue;
                const C dv = horner(dp, zk);
                C s(0);
                for (int j = 0; j < n; ++j)
                    if (j != k) {
                        const C diff = zk - z[static_cast<std::size_t>(j)];
                        if (cabs(diff) != 0) s += C(1) / diff;
                    }
                C ratio = cabs(dv) == 0 ? C(R(1e-3) * (R(1) + R(cabs(zk)))) : pv / dv;
                const C denom = C(1) - ratio * s;
                const C w = cabs(denom) == 0 ? ratio : ratio / denom;
                zk -= w;
                const R rel = R(cabs(w)) / (R(1) + R(cabs(zk)));
                if (rel > worst) worst = rel;
            }
            quiet = worst <= R(T::eps) * 16 ? quiet + 1 : 0;
        }
        return z;
    }

    // Newton iteration on p starting at z.
    static C polish(const std::vector<C>& p, C z) {
        if (p.size() < 2) return z;
        const std::vector<C> dp = derivative(p);
        for (int it = 0; it < 100; ++it) {
            const C dv = horner(dp, z);
            if (cabs(dv) == 0) break;
            const C step = horner(p, z) / dv;
            z -= step;
            if (R(cabs(step)) <= R(T::eps) * (R(1) + R(cabs(z)))) break;
        }
        return z;
    }

    // Derivatives p, p', ..., p^(r-1) all vanish at z (relative test).
    static bool vanishing_derivatives(const std::vector<C>& p, const C& z, int r) {
        std::vector<C> d = p;
        const R az = cabs(z);
        for (int s = 0; s < r; ++s) {
            if (d.empty()) return false;
            const R sc = scale_at(d, az);
            if (R(cabs(horner(d, z))) > R(T::cluster_tol) * sc) return false;
            d = derivative(d);
        }
        return true;
    }

    static std::vector<std::pair<C, int>> roots_with_multiplicity(const std::vector<C>& p) {
        const int n = static_cast<int>(p.size()) - 1;
        if (n < 1) return {};
        const std::vector<C> z = aberth(p);

        // Kruskal-style merging of nearby approximations; a merged cluster
        // of size r is kept only if p..p^(r-1) vanish at its polished centre.
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
        std::vector<C> centre(z);
        for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = {i};
        auto find = [&](int i) {
            while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
            return i;
        };
        std::vector<std::tuple<R, int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs.emplace_back(R(cabs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)])), i, j);
        std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
        for (const auto& [dist, i, j] : pairs) {
            const int ri = find(i), rj = find(j);
            if (ri == rj) continue;
            std::vector<int> merged = members[static_cast<std::size_t>(ri)];
            merged.insert(merged.end(), members[static_cast<std::size_t>(rj)].begin(), members[static_cast<std::size_t>(rj)].end());
            const int r = static_cast<int>(merged.size());
            C mean(0);
            for (int idx : merged) mean += z[static_cast<std::size_t>(idx)];
            mean /= C(R(r));
            std::vector<C> d = p;
            for (int s = 0; s < r - 1; ++s) d = derivative(d);
            const C c = polish(d, mean);
            if (!vanishing_derivatives(p, c, r)) continue;
            parent[static_cast<std::size_t>(rj)] = ri;
            members[static_cast<std::size_t>(ri)] = std::move(merged);
            members[static_cast<std::size_t>(rj)].clear();
            centre[static_cast<std::size_t>(ri)] = c;
        }
        std::vector<std::pair<C, int>> out;
        for (int i = 0; i < n; ++i) {
            if (find(i) != i) continue;
            const int r = static_cast<int>(members[static_cast<std::size_t>(i)].size());
            C c = r == 1 ? polish(p, centre[static_cast<std::size_t>(i)]) : centre[static_cast<std::size_t>(i)];
            if (!vanishing_derivatives(p, c, 1)) throw NumericalError("root finder did not converge");
            out.emplace_back(c, r);
        }
        return out;
    }
};

std::complex<double> clean(std::complex<double> z) {
    const double a = std::abs(z);
    double re = z.real(), im = z.imag();
    if (std::abs(re) <= 1e-12 * a) re = 0.0;
    if (std::abs(im) <= 1e-12 * a) im = 0.0;
    return {re, im};
}

template <class T>
std::vector<PuiseuxSeries> expand_at_tier(const BiPoly& h, int m, const Rational& depth, double band) {
    Expander<T> ex(depth, band);
    auto prefixes = ex.run(h, m);
    std::vector<PuiseuxSeries> out;
    out.reserve(prefixes.size());
    for (const auto& pre : prefixes) {
        PuiseuxSeries s;
        s.truncation_order = depth;
        for (const auto& [e, c] : pre) s.terms.push_back({e, clean(to_dcomplex(c))});
        out.push_back(std::move(s));
    }
    return out;
}

using SortKey = std::vector<std::tuple<Rational, long long, long long>>;

SortKey sort_key(const PuiseuxSeries& s) {
    SortKey k;
    for (const auto& t : s.terms) {
        double arg = std::arg(t.coeff);
        if (arg <= -M_PI + 1e-12) arg = M_PI;
        k.emplace_back(t.exponent, std::llround(arg * 1e8), std::llround(std::abs(t.coeff) * 1e8));
    }
    return k;
}

bool key_less(const SortKey& a, const SortKey& b) {
    // the zero series and shorter prefixes sort after longer ones at the
    // first exponent where one of them stops
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() > b.size();
}

std::string fmt_exponent(const Rational& e) {
    if (e.denominator() == 1) return e.numerator() == 1 ? "x" : "x^" + std::to_string(e.numerator());
    return "x^(" + to_string(e) + ")";
}

}  // namespace

std::int64_t PuiseuxSeries::ramification() const {
    std::int64_t r = 1;
    for (const auto& t : terms) r = std::lcm(r, t.exponent.denominator());
    return r;
}

std::optional<Rational> PuiseuxSeries::leading_exponent() const {
    if (terms.empty()) return std::nullopt;
    return terms.front().exponent;
}

std::complex<double> PuiseuxSeries::coefficient(const Rational& e) const {
    for (const auto& t : terms)
        if (t.exponent == e) return t.coeff;
    return {0.0, 0.0};
}

std::string PuiseuxSeries::to_string(int digits) const {
    std::ostringstream os;
    os << std::setprecision(digits);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& c = terms[i].coeff;
        if (i) os << " + ";
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)*" << fmt_exponent(terms[i].exponent);
    }
    if (!terms.empty()) os << " + ";
    os << "O(" << fmt_exponent(truncation_order) << ")";
    return os.str();
}

PuiseuxExpansion puiseux_expansion(const BiPoly& f, const Rational& depth, const PuiseuxOptions& opts) {
    if (f.is_zero()) throw std::invalid_argument("puiseux_expand: zero polynomial");
    if (depth <= Rational(0)) throw std::invalid_argument("puiseux_expand: depth must be positive");
    PuiseuxExpansion res;
    res.x_power = f.x_content();
    const BiPoly h = f.unshifted(res.x_power, 0);
    const int m = h.y_order_at_x0();
    if (m <= 0) {
        res.tier = opts.min_tier;
        return res;
    }
    std::string last;
    for (int tier = std::max(0, opts.min_tier); tier <= std::min(2, opts.max_tier); ++tier) {
        try {
            switch (tier) {
                case 0: res.roots = expand_at_tier<Tier0>(h, m, depth, opts.ambiguity_factor); break;
                case 1: res.roots = expand_at_tier<Tier1>(h, m, depth, opts.ambiguity_factor); break;
                default: res.roots = expand_at_tier<Tier2>(h, m, depth, opts.ambiguity_factor); break;
            }
            if (static_cast<int>(res.roots.size()) != m)
                throw NumericalError("expected " + std::to_string(m) + " roots, found " + std::to_string(res.roots.size()));
            res.tier = tier;
            std::vector<std::pair<SortKey, PuiseuxSeries>> keyed;
            for (auto& r : res.roots) keyed.emplace_back(sort_key(r), std::move(r));
            std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return key_less(a.first, b.first); });
            res.roots.clear();
            for (auto& [k, r] : keyed) res.roots.push_back(std::move(r));
            return res;
        } catch (const NumericalError& e) {
            last = e.what();
        }
    }
    throw NumericalError("puiseux_expand: " + last);
}

std::vector<PuiseuxSeries> puiseux_expand(const BiPoly& f, const Rational& depth, const PuiseuxOptions& opts) {
    return puiseux_expansion(f, depth, opts).roots;
}

std::optional<Rational> try_contact(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxOptions& opts) {
    const Rational limit = std::min(a.truncation_order, b.truncation_order);
    std::size_t i = 0, j = 0;
    for (;;) {
        const bool more_a = i < a.terms.size() && a.terms[i].exponent < limit;
        const bool more_b = j < b.terms.size() && b.terms[j].exponent < limit;
        if (!more_a && !more_b) return std::nullopt;
        Rational e;
        std::complex<double> ca, cb;
        if (more_a && (!more_b || a.terms[i].exponent <= b.terms[j].exponent)) e = a.terms[i].exponent;
        else e = b.terms[j].exponent;
        if (more_a && a.terms[i].exponent == e) ca = a.terms[i++].coeff;
        if (more_b && b.terms[j].exponent == e) cb = b.terms[j++].coeff;
        const double scale = std::max(std::abs(ca), std::abs(cb));
        if (scale == 0.0) continue;
        const double rel = std::abs(ca - cb) / scale;
        if (rel <= opts.contact_tolerance) continue;
        if (rel > opts.contact_tolerance * opts.ambiguity_factor) return e;
        throw AmbiguousContact("ambiguous coefficient comparison at exponent " + to_string(e) +
                               " (relative difference " + std::to_string(rel) + ")");
    }
}

Rational contact(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxOptions& opts) {
    const auto c = try_contact(a, b, opts);
    if (!c) throw UndecidableContact("undecidable at current depth " + to_string(std::min(a.truncation_order, b.truncation_order)));
    return *c;
}

Rational contact(const std::vector<PuiseuxSeries>& a, const std::vector<PuiseuxSeries>& b, const PuiseuxOptions& opts) {
    if (a.empty() || b.empty()) throw std::invalid_argument("contact: empty root set");
    std::optional<Rational> best;
    for (const auto& x : a)
        for (const auto& y : b) {
            const Rational c = contact(x, y, opts);
            if (!best || c > *best) best = c;
        }
    return *best;
}

Rational substitution_order(const BiPoly& h, const PuiseuxSeries& s, double tolerance) {
    using Series = std::map<Rational, std::pair<std::complex<double>, double>>;
    const Rational limit = s.truncation_order;
    auto mul = [&](const Series& a, const Series& b) {
        Series r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                const Rational e = ea + eb;
                if (e >= limit) continue;
                auto& slot = r[e];
                slot.first += ca.first * cb.first;
                slot.second += ca.second * cb.second;
            }
        return r;
    };
    Series sigma;
    for (const auto& t : s.terms)
        if (t.exponent < limit) sigma[t.exponent] = {t.coeff, std::abs(t.coeff)};
    std::vector<Series> powers{Series{{Rational(0), {1.0, 1.0}}}};
    for (int j = 1; j <= h.deg_y(); ++j) powers.push_back(mul(powers.back(), sigma));

    Series total;
    for (const auto& [mono, c] : h.terms()) {
        const double v = c.get_d();
        for (const auto& [e, cv] : powers[static_cast<std::size_t>(mono.y)]) {
            const Rational ne = e + mono.x;
            if (ne >= limit) continue;
            auto& slot = total[ne];
            slot.first += v * cv.first;
            slot.second += std::abs(v) * cv.second;
        }
    }
    for (const auto& [e, cv] : total)
        if (std::abs(cv.first) > tolerance * cv.second) return e;
    return limit;
}

}  // namespace approxjac
