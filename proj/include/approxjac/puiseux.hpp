#pragma once

#include "approxjac/bipoly.hpp"
#include "approxjac/core.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace approxjac {

struct PuiseuxTerm {
    Rational exponent;
    std::complex<double> coeff;
};

// Truncated fractional power series sum c_e x^e. Exponents are exact and
// strictly increasing; every exponent below truncation_order is determined
// (absent exponents have coefficient zero).
struct PuiseuxSeries {
    std::vector<PuiseuxTerm> terms;
    Rational truncation_order{0};

    // lcm of the exponent denominators (1 for the zero series).
    std::int64_t ramification() const;
    // Exponent of the first term; empty for the zero series.
    std::optional<Rational> leading_exponent() const;
    std::complex<double> coefficient(const Rational& e) const;
    // "(1+0i)*x^(4/3) + ... + O(x^(7/3))"
    std::string to_string(int digits = 6) const;
};

struct PuiseuxOptions {
    // Precision tiers: 0 = double, 1 = 50 decimal digits, 2 = 100 digits.
    int min_tier = 0;
    int max_tier = 2;
    // Relative coefficient tolerance for contact decisions.
    double contact_tolerance = 1e-9;
    // Differences within this factor of the tolerance are ambiguous.
    double ambiguity_factor = 1e3;
};

struct PuiseuxExpansion {
    int x_power = 0;  // N in f = x^N h
    std::vector<PuiseuxSeries> roots;
    int tier = 0;  // precision tier that produced the roots
};

// Newton-Puiseux roots of f through the origin (positive order), i.e.
// ord_y h(0, y) roots of h = f / x^N, each determined up to exponent `depth`.
// Roots are sorted by leading exponent, then argument and modulus of the
// coefficients. Throws NumericalError when every tier fails; the message
// carries the offending edge polynomial.
PuiseuxExpansion puiseux_expansion(const BiPoly& f, const Rational& depth, const PuiseuxOptions& opts = {});
std::vector<PuiseuxSeries> puiseux_expand(const BiPoly& f, const Rational& depth, const PuiseuxOptions& opts = {});

class AmbiguousContact : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class UndecidableContact : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Smallest exponent where a and b differ; nullopt when they agree on every
// exponent below both truncation orders. Throws AmbiguousContact when a
// relative difference falls within ambiguity_factor of the tolerance.
std::optional<Rational> try_contact(const PuiseuxSeries& a, const PuiseuxSeries& b,
                                    const PuiseuxOptions& opts = {});

// As try_contact, but throws UndecidableContact("undecidable at current
// depth") instead of returning nullopt.
Rational contact(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxOptions& opts = {});
// Maximum over pairs.
Rational contact(const std::vector<PuiseuxSeries>& a, const std::vector<PuiseuxSeries>& b,
                 const PuiseuxOptions& opts = {});

// First exponent below s.truncation_order where h(x, s(x)) has a
// non-negligible coefficient; returns truncation_order when there is none.
Rational substitution_order(const BiPoly& h, const PuiseuxSeries& s, double tolerance = 1e-9);

}  // namespace approxjac
