#include "approxjac/resultant.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace approxjac {

namespace {

// Polynomial in y with coefficients in Q[x]; index is the power of y.
using YPoly = std::vector<QPoly>;

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

const QPoly& lc(const YPoly& p) { return p.back(); }

YPoly scale(const YPoly& p, const QPoly& s) {
    YPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(c * s);
    trim(r);
    return r;
}

YPoly divexact(const YPoly& p, const QPoly& d) {
    YPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(c.divexact(d));
    trim(r);
    return r;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
YPoly prem(YPoly a, const YPoly& b) {
    const int delta = deg(a) - deg(b);
    const QPoly& lb = lc(b);
    int steps = 0;
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        const QPoly la = lc(a);
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= deg(b); ++i)
            a[static_cast<std::size_t>(i + shift)] = a[static_cast<std::size_t>(i + shift)] - la * b[static_cast<std::size_t>(i)];
        trim(a);
        ++steps;
    }
    if (steps < delta + 1) a = scale(a, lb.pow(static_cast<unsigned>(delta + 1 - steps)));
    return a;
}

// Subresultant PRS resultant (Collins / Brown), contents not removed.
QPoly subresultant(YPoly a, YPoly b) {
    if (a.empty() || b.empty()) return {};
    int sign = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = -1;
    }
    if (deg(b) == 0) return lc(b).pow(static_cast<unsigned>(deg(a))).scaled(sign);

    QPoly g(mpq_class(1));
    QPoly h(mpq_class(1));
    for (;;) {
        const int delta = deg(a) - deg(b);
        if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = -sign;
        YPoly r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return {};
        b = divexact(r, g * h.pow(static_cast<unsigned>(delta)));
        g = lc(a);
        if (delta == 0) {
            // h^(1-0) g^0 = h
        } else {
            h = g.pow(static_cast<unsigned>(delta)).divexact(h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (deg(b) == 0) break;
    }
    const int da = deg(a);
    QPoly res = lc(b).pow(static_cast<unsigned>(da));
    if (da > 1) res = res.divexact(h.pow(static_cast<unsigned>(da - 1)));
    return res.scaled(sign);
}

YPoly to_ypoly(const BiPoly& p) {
    YPoly v = p.y_coeffs();
    trim(v);
    return v;
}

QPoly shift_down(const QPoly& p, int m) {
    const auto& c = p.coeffs();
    if (static_cast<int>(c.size()) <= m) return {};
    for (int i = 0; i < m; ++i)
        if (sgn(c[static_cast<std::size_t>(i)]) != 0) throw std::logic_error("shift_down: not divisible");
    return QPoly(std::vector<mpq_class>(c.begin() + m, c.end()));
}

// 1 / v mod t^m for v(0) != 0.
QPoly series_inverse(const QPoly& v, int m) {
    std::vector<mpq_class> inv(static_cast<std::size_t>(m));
    const mpq_class v0inv = 1 / v.coeff(0);
    for (int i = 0; i < m; ++i) {
        mpq_class acc = i == 0 ? mpq_class(1) : mpq_class(0);
        for (int j = 1; j <= i; ++j) acc -= v.coeff(j) * inv[static_cast<std::size_t>(i - j)];
        inv[static_cast<std::size_t>(i)] = acc * v0inv;
    }
    return QPoly(std::move(inv));
}

}  // namespace

QPoly resultant_y(const BiPoly& f, const BiPoly& h) {
    if (f.deg_y() < 1 && h.deg_y() < 1)
        throw std::invalid_argument("resultant_y: both polynomials are constant in y");
    return subresultant(to_ypoly(f), to_ypoly(h));
}

bool is_weierstrass_type(const BiPoly& h) {
    const int d = h.deg_y();
    if (d < 1) return false;
    if (h.y_order_at_x0() != d) return false;
    return h.lc_y().degree() == 0;
}

BiPoly weierstrass_factor(const BiPoly& h, int precision) {
    if (h.x_content() > 0) throw std::invalid_argument("weierstrass_factor: x divides h");
    const QPoly h0 = h.at_x0();
    const int m = h0.order();
    if (m <= 0) throw std::invalid_argument("weierstrass_factor: h(0,0) != 0");

    // h = sum_t x^t H_t(y)
    const int dx = h.deg_x();
    std::vector<QPoly> H(static_cast<std::size_t>(dx) + 1);
    {
        std::vector<std::vector<mpq_class>> raw(H.size());
        for (const auto& [mono, c] : h.terms()) {
            auto& v = raw[static_cast<std::size_t>(mono.x)];
            if (v.size() <= static_cast<std::size_t>(mono.y)) v.resize(static_cast<std::size_t>(mono.y) + 1);
            v[static_cast<std::size_t>(mono.y)] = c;
        }
        for (std::size_t t = 0; t < H.size(); ++t) H[t] = QPoly(std::move(raw[t]));
    }

    const QPoly v0 = shift_down(h0, m);
    const QPoly tinv = series_inverse(v0, m);
    const QPoly w0 = QPoly::monomial(1, m);

    std::vector<QPoly> W{w0};
    std::vector<QPoly> V{v0};
    for (int r = 1; r < precision; ++r) {
        QPoly e = r <= dx ? H[static_cast<std::size_t>(r)] : QPoly();
        for (int a = 1; a < r; ++a) e = e - W[static_cast<std::size_t>(a)] * V[static_cast<std::size_t>(r - a)];
        QPoly wr = (e * tinv).truncated(m);
        QPoly vr = shift_down(e - wr * v0, m);
        W.push_back(std::move(wr));
        V.push_back(std::move(vr));
    }

    BiPoly::TermMap terms;
    for (std::size_t t = 0; t < W.size(); ++t) {
        const auto& cs = W[t].coeffs();
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (sgn(cs[j]) != 0) terms.emplace(Monomial{static_cast<int>(t), static_cast<int>(j)}, cs[j]);
    }
    return BiPoly(std::move(terms));
}

ExtInt intersection_multiplicity(const BiPoly& f, const BiPoly& h) {
    if (f.is_zero() || h.is_zero()) throw std::invalid_argument("intersection_multiplicity: zero polynomial");
    const int a = f.x_content();
    const int b = h.x_content();
    if (a > 0 && b > 0) return ExtInt::infinity();

    const BiPoly fp = f.unshifted(a, 0);
    const BiPoly hp = h.unshifted(b, 0);
    const int mf = fp.y_order_at_x0();
    const int mh = hp.y_order_at_x0();
    std::int64_t total = static_cast<std::int64_t>(a) * mh + static_cast<std::int64_t>(b) * mf;
    if (mf == 0 || mh == 0) return ExtInt(total);

    const QPoly res = resultant_y(fp, hp);
    if (res.is_zero()) return ExtInt::infinity();

    int local = 0;
    if (is_weierstrass_type(fp) || is_weierstrass_type(hp)) {
        local = res.order();
    } else {
        // ord Res_y(f', h') bounds the local term from above: it sums the
        // multiplicities over the whole fibre x = 0.
        int precision = res.order() + 1;
        for (;;) {
            const BiPoly w = weierstrass_factor(fp, precision);
            const QPoly r = resultant_y(w, hp);
            if (!r.is_zero() && r.order() < precision) {
                local = r.order();
                break;
            }
            precision *= 2;
        }
    }
    return ExtInt(total + local);
}

std::int64_t milnor_number(const BiPoly& f) {
    const BiPoly fx = f.derivative(Var::X);
    const BiPoly fy = f.derivative(Var::Y);
    auto unit_at_origin = [](const BiPoly& p) { return sgn(p.coeff(0, 0)) != 0; };
    if (fx.is_zero() || fy.is_zero()) {
        const BiPoly& other = fx.is_zero() ? fy : fx;
        if (!other.is_zero() && unit_at_origin(other)) return 0;
        throw ValidationError("milnor_number: singularity is not isolated");
    }
    const ExtInt mu = intersection_multiplicity(fx, fy);
    if (mu.is_infinite()) throw ValidationError("milnor_number: singularity is not isolated");
    return mu.value();
}

}  // namespace approxjac
