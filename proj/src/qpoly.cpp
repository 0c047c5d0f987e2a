#include "approxjac/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace approxjac {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const mpq_class& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const mpq_class& c, int power) {
    if (sgn(c) == 0) return {};
    std::vector<mpq_class> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int QPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return -1;
}

const mpq_class& QPoly::lc() const {
    if (c_.empty()) throw std::logic_error("QPoly::lc of zero polynomial");
    return c_.back();
}

mpq_class QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    QPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

QPoly QPoly::shifted(int power) const {
    if (is_zero() || power == 0) return *this;
    std::vector<mpq_class> v(static_cast<std::size_t>(power));
    v.insert(v.end(), c_.begin(), c_.end());
    return QPoly(std::move(v));
}

QPoly QPoly::truncated(int n) const {
    if (n >= static_cast<int>(c_.size())) return *this;
    if (n <= 0) return {};
    return QPoly(std::vector<mpq_class>(c_.begin(), c_.begin() + n));
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return QPoly(std::move(v));
}

QPoly QPoly::pow(unsigned e) const {
    QPoly result(mpq_class(1));
    QPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

mpq_class QPoly::eval(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("QPoly::divmod by zero");
    if (degree() < d.degree()) return {QPoly(), *this};
    std::vector<mpq_class> rem = c_;
    std::vector<mpq_class> quo(c_.size() - d.c_.size() + 1);
    const mpq_class inv_lc = 1 / d.lc();
    for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
        const auto top = static_cast<std::size_t>(i) + d.c_.size() - 1;
        if (sgn(rem[top]) == 0) continue;
        mpq_class q = rem[top] * inv_lc;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * d.c_[j];
        quo[static_cast<std::size_t>(i)] = q;
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::divexact(const QPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("QPoly::divexact: nonzero remainder");
    return q;
}

std::string QPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << (sgn(c_[i]) > 0 ? "+" : "");
        os << c_[i].get_str();
        if (i > 0) os << '*' << var << '^' << i;
        first = false;
    }
    return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.lc());
}

}  // namespace approxjac
