#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace approxjac {

// Dense univariate polynomial over Q. Index i holds the coefficient of t^i.
// Trailing zeros are always trimmed, so the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);
    QPoly(const mpq_class& c);  // NOLINT: constants convert implicitly

    static QPoly monomial(const mpq_class& c, int power);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    // Lowest power with a nonzero coefficient; -1 for zero.
    int order() const;
    const mpq_class& lc() const;
    mpq_class coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly scaled(const mpq_class& s) const;
    QPoly shifted(int power) const;  // multiply by t^power
    QPoly truncated(int n) const;    // drop powers >= n
    QPoly derivative() const;
    QPoly pow(unsigned e) const;
    mpq_class eval(const mpq_class& t) const;

    // Euclidean division; throws on a zero divisor.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    // Quotient that must be exact; throws std::logic_error otherwise.
    QPoly divexact(const QPoly& d) const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);

}  // namespace approxjac
