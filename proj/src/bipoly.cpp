#include "approxjac/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace approxjac {

BiPoly::BiPoly(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly::BiPoly(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.x < 0 || it->first.y < 0) throw std::invalid_argument("BiPoly: negative exponent");
        if (sgn(it->second) == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

BiPoly BiPoly::x() { return monomial(1, 1, 0); }
BiPoly BiPoly::y() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const mpq_class& c, int i, int j) {
    TermMap t;
    t.emplace(Monomial{i, j}, c);
    return BiPoly(std::move(t));
}

BiPoly BiPoly::from_y_coeffs(const std::vector<QPoly>& coeffs) {
    TermMap t;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const auto& cs = coeffs[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (sgn(cs[i]) != 0) t.emplace(Monomial{static_cast<int>(i), static_cast<int>(j)}, cs[i]);
    }
    return BiPoly(std::move(t));
}

mpq_class BiPoly::coeff(int i, int j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
}

int BiPoly::deg_x() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.x;
}

int BiPoly::x_content() const {
    return terms_.empty() ? 0 : terms_.begin()->first.x;
}

int BiPoly::y_content() const {
    if (terms_.empty()) return 0;
    int a = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) a = std::min(a, m.y);
    return a;
}

int BiPoly::y_order_at_x0() const {
    for (const auto& [m, c] : terms_) {
        if (m.x != 0) break;
        return m.y;  // map order: first x==0 term has the lowest y
    }
    return -1;
}

std::vector<QPoly> BiPoly::y_coeffs() const {
    const int dy = deg_y();
    if (dy < 0) return {};
    std::vector<std::vector<mpq_class>> raw(static_cast<std::size_t>(dy) + 1);
    for (const auto& [m, c] : terms_) {
        auto& v = raw[static_cast<std::size_t>(m.y)];
        if (v.size() <= static_cast<std::size_t>(m.x)) v.resize(static_cast<std::size_t>(m.x) + 1);
        v[static_cast<std::size_t>(m.x)] = c;
    }
    std::vector<QPoly> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
}

QPoly BiPoly::y_coeff(int j) const {
    std::vector<mpq_class> v;
    for (const auto& [m, c] : terms_) {
        if (m.y != j) continue;
        if (v.size() <= static_cast<std::size_t>(m.x)) v.resize(static_cast<std::size_t>(m.x) + 1);
        v[static_cast<std::size_t>(m.x)] = c;
    }
    return QPoly(std::move(v));
}

QPoly BiPoly::lc_y() const { return y_coeff(deg_y()); }

QPoly BiPoly::at_x0() const {
    std::vector<mpq_class> v;
    for (const auto& [m, c] : terms_) {
        if (m.x != 0) break;
        if (v.size() <= static_cast<std::size_t>(m.y)) v.resize(static_cast<std::size_t>(m.y) + 1);
        v[static_cast<std::size_t>(m.y)] = c;
    }
    return QPoly(std::move(v));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly::TermMap t = a.terms_;
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = t.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) t.erase(it);
        }
    }
    BiPoly r;
    r.terms_ = std::move(t);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly::TermMap t;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.x + mb.x, ma.y + mb.y};
            auto [it, inserted] = t.emplace(m, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    return BiPoly(std::move(t));
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly result(1);
    BiPoly base = *this;
    auto n = static_cast<unsigned>(e);
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

BiPoly BiPoly::scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    BiPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

BiPoly BiPoly::shifted(int a, int b) const {
    TermMap t;
    for (const auto& [m, c] : terms_) t.emplace_hint(t.end(), Monomial{m.x + a, m.y + b}, c);
    return BiPoly(std::move(t));
}

BiPoly BiPoly::unshifted(int a, int b) const {
    TermMap t;
    for (const auto& [m, c] : terms_) {
        if (m.x < a || m.y < b) throw std::invalid_argument("BiPoly::unshifted: monomial not divisible");
        t.emplace_hint(t.end(), Monomial{m.x - a, m.y - b}, c);
    }
    return BiPoly(std::move(t));
}

BiPoly BiPoly::derivative(Var v) const {
    TermMap t;
    for (const auto& [m, c] : terms_) {
        const int e = v == Var::X ? m.x : m.y;
        if (e == 0) continue;
        Monomial d = v == Var::X ? Monomial{m.x - 1, m.y} : Monomial{m.x, m.y - 1};
        t.emplace(d, c * e);
    }
    return BiPoly(std::move(t));
}

mpq_class BiPoly::eval(const mpq_class& xv, const mpq_class& yv) const {
    mpq_class acc = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < m.x; ++i) term *= xv;
        for (int j = 0; j < m.y; ++j) term *= yv;
        acc += term;
    }
    return acc;
}

bool BiPoly::is_monic_in_y() const {
    const int d = deg_y();
    if (d < 0) return false;
    for (const auto& [m, c] : terms_)
        if (m.y == d && !(m.x == 0 && c == 1)) return false;
    return true;
}

namespace {

void append_factor(std::ostringstream& os, char var, int e, bool& need_star) {
    if (e == 0) return;
    if (need_star) os << '*';
    os << var;
    if (e > 1) os << '^' << e;
    need_star = true;
}

}  // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool is_const = m.x == 0 && m.y == 0;
        mpq_class mag = abs(c);
        if (sgn(c) < 0)
            os << '-';
        else if (!first)
            os << '+';
        bool need_star = false;
        if (is_const || mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        append_factor(os, 'x', m.x, need_star);
        append_factor(os, 'y', m.y, need_star);
        first = false;
    }
    return os.str();
}

BiPoly partial_derivative(const BiPoly& f, Var v) { return f.derivative(v); }

BiPoly jacobian_det(const BiPoly& g, const BiPoly& f) {
    return g.derivative(Var::X) * f.derivative(Var::Y) - g.derivative(Var::Y) * f.derivative(Var::X);
}

}  // namespace approxjac
