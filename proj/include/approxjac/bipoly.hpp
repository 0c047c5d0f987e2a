#pragma once

#include "approxjac/qpoly.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace approxjac {

// Exponent pair of x^x * y^y. Ordered lexicographically by (x, y), which is
// also the canonical term order for printing and serialization.
struct Monomial {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Var { X, Y };

// Bivariate polynomial over Q. Immutable value type: every operation returns
// a new polynomial. Zero coefficients are never stored.
class BiPoly {
public:
    using TermMap = std::map<Monomial, mpq_class>;

    BiPoly() = default;
    BiPoly(const mpq_class& c);  // NOLINT: constants convert implicitly
    BiPoly(int c) : BiPoly(mpq_class(c)) {}  // NOLINT
    explicit BiPoly(TermMap terms);

    static BiPoly x();
    static BiPoly y();
    static BiPoly monomial(const mpq_class& c, int i, int j);
    // Builds sum_j coeffs[j](x) * y^j.
    static BiPoly from_y_coeffs(const std::vector<QPoly>& coeffs);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(int i, int j) const;

    int deg_y() const;  // -1 for zero
    int deg_x() const;  // -1 for zero
    // Largest a with x^a dividing the polynomial (0 for zero).
    int x_content() const;
    int y_content() const;
    // ord_y of h(0, y); -1 when h(0, y) vanishes identically.
    int y_order_at_x0() const;

    // Coefficients as a polynomial in y over Q[x]: result[j] is the x-polynomial
    // multiplying y^j.
    std::vector<QPoly> y_coeffs() const;
    // Coefficient of y^j as a polynomial in x.
    QPoly y_coeff(int j) const;
    // Leading coefficient in y.
    QPoly lc_y() const;
    // h(0, y) as a polynomial in y.
    QPoly at_x0() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    // Throws std::invalid_argument for a negative exponent.
    BiPoly pow(int e) const;
    BiPoly scaled(const mpq_class& s) const;
    // Multiply by x^a y^b.
    BiPoly shifted(int a, int b) const;
    // Divide by x^a y^b; every term must be divisible.
    BiPoly unshifted(int a, int b) const;
    BiPoly derivative(Var v) const;
    mpq_class eval(const mpq_class& x, const mpq_class& y) const;

    bool is_monic_in_y() const;

    // Grammar-compatible rendering, e.g. "y^4-2*x^3*y^2-x^5*y+x^6".
    std::string to_string() const;

private:
    TermMap terms_;
};

BiPoly partial_derivative(const BiPoly& f, Var v);

// jac(g, f) = dg/dx * df/dy - dg/dy * df/dx
BiPoly jacobian_det(const BiPoly& g, const BiPoly& f);

}  // namespace approxjac
