#include "approxjac/bipoly.hpp"
#include "approxjac/parse.hpp"
#include "approxjac/resultant.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace approxjac;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

const BiPoly kCusp4 = BiPoly::y().pow(4) - BiPoly::monomial(2, 3, 2) - BiPoly::monomial(1, 5, 1) +
                      BiPoly::monomial(1, 6, 0);

}  // namespace

TEST_CASE("ring operations on fixtures") {
    const BiPoly c = P("y^2-x^3");
    CHECK(c * c == P("y^4-2*x^3*y^2+x^6"));
    CHECK(c + BiPoly() == c);
    CHECK(P("(y^2-x^3)^2-x^5*y") == kCusp4);
    CHECK(kCusp4.to_string() == "y^4-2*x^3*y^2-x^5*y+x^6");
    CHECK_THROWS_AS(c.pow(-1), std::invalid_argument);
    CHECK(c.pow(0) == BiPoly(1));
    CHECK((c - c).is_zero());
    CHECK(c.deg_y() == 2);
    CHECK(c.deg_x() == 3);
    CHECK(P("x^3*y+x^5").x_content() == 3);
}

TEST_CASE("ring operations agree with evaluation at random rational points") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly a = oracle::random_poly(rng, 6, 4);
        const BiPoly b = oracle::random_poly(rng, 6, 4);
        const int e = static_cast<int>(rng() % 4);
        for (int pt = 0; pt < 3; ++pt) {
            const mpq_class x = oracle::random_rational(rng), y = oracle::random_rational(rng);
            const mpq_class va = oracle::eval(a, x, y), vb = oracle::eval(b, x, y);
            CHECK(oracle::eval(a + b, x, y) == va + vb);
            CHECK(oracle::eval(a - b, x, y) == va - vb);
            CHECK(oracle::eval(a * b, x, y) == va * vb);
            mpq_class pw = 1;
            for (int i = 0; i < e; ++i) pw *= va;
            CHECK(oracle::eval(a.pow(e), x, y) == pw);
            CHECK(a.eval(x, y) == va);
        }
        const BiPoly prod = a * b;
        for (const auto& [m, c] : prod.terms()) CHECK(c != 0);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("y^2-x^3"), Var::Y) == P("2*y"));
    CHECK(partial_derivative(P("y^2-x^3"), Var::X) == P("-3*x^2"));
    CHECK(partial_derivative(kCusp4, Var::X) == P("-6*x^2*(y^2-x^3)-5*x^4*y"));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly a = oracle::random_poly(rng, 7, 5);
        const BiPoly b = oracle::random_poly(rng, 7, 5);
        CHECK(partial_derivative(a, Var::X) == oracle::derivative(a, true));
        CHECK(partial_derivative(a, Var::Y) == oracle::derivative(a, false));
        // Leibniz rule
        CHECK(partial_derivative(a * b, Var::X) ==
              partial_derivative(a, Var::X) * b + a * partial_derivative(b, Var::X));
    }
}

TEST_CASE("jacobian determinant") {
    const BiPoly f1 = P("y^2-x^3");
    CHECK(jacobian_det(f1, kCusp4) == P("x^4*(10*y^2+3*x^3)"));
    const BiPoly ex1 = P("(y^3-6*x^3*y-x^4)^2-9*x^9");
    CHECK(jacobian_det(P("y^3-6*x^3*y-x^4"), ex1) == P("243*x^8*(y^2-2*x^3)"));
    const BiPoly g = P("(y^3-x^4)^2+x^9-x^7*y^2");
    CHECK(jacobian_det(P("y^3-x^4"), g) == P("x^6*y*(21*y^3-27*x^2*y+8*x^4)"));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const BiPoly a = oracle::random_poly(rng, 5, 4);
        const BiPoly b = oracle::random_poly(rng, 5, 4);
        CHECK(jacobian_det(BiPoly::y(), a) == -partial_derivative(a, Var::X));
        CHECK(jacobian_det(a, b) == -jacobian_det(b, a));
        CHECK(jacobian_det(a, b) ==
              oracle::derivative(a, true) * oracle::derivative(b, false) -
                  oracle::derivative(a, false) * oracle::derivative(b, true));
    }
}

TEST_CASE("resultant fixtures") {
    const QPoly r1 = resultant_y(P("y^2-x^3"), P("y"));
    CHECK(r1.order() == 3);
    CHECK(r1.degree() == 3);
    const QPoly r2 = resultant_y(P("y-x"), P("y+x"));
    CHECK(r2.order() == 1);
    CHECK(r2.degree() == 1);
    CHECK(abs(r2.coeff(1)) == 2);
    CHECK(resultant_y(kCusp4, P("y^2-x^3")).order() == 13);
    CHECK_THROWS_AS(resultant_y(P("x^2+1"), P("x")), std::invalid_argument);
}

TEST_CASE("resultant equals the Sylvester determinant up to a fixed sign") {
    std::mt19937_64 rng(14);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const BiPoly f = oracle::random_poly(rng, 6, 3) + BiPoly::y().pow(1 + static_cast<int>(rng() % 3));
        const BiPoly h = oracle::random_poly(rng, 6, 3) + BiPoly::y();
        const int m = f.deg_y(), n = h.deg_y();
        const QPoly r = resultant_y(f, h);
        std::optional<mpq_class> ratio;
        for (int pt = 0; pt < 6; ++pt) {
            const mpq_class x0 = oracle::random_rational(rng);
            const mpq_class syl =
                oracle::sylvester_resultant(oracle::specialize_x(f, x0), oracle::specialize_x(h, x0), m, n);
            const mpq_class val = r.eval(x0);
            if (syl == 0) {
                CHECK(val == 0);
                continue;
            }
            const mpq_class q = val / syl;
            CHECK(abs(q) == 1);
            if (ratio) CHECK(q == *ratio);
            ratio = q;
            ++compared;
        }
    }
    CHECK(compared > 200);
}

TEST_CASE("intersection multiplicity fixtures") {
    CHECK(intersection_multiplicity(P("x"), P("y")) == ExtInt(1));
    CHECK(intersection_multiplicity(kCusp4, P("y")) == ExtInt(6));
    CHECK(intersection_multiplicity(kCusp4, P("y^2-x^3")) == ExtInt(13));
    CHECK(intersection_multiplicity(kCusp4, kCusp4).is_infinite());
    CHECK(intersection_multiplicity(P("x*y"), P("x^2")).is_infinite());
    CHECK(intersection_multiplicity(P("y-1"), P("x")) == ExtInt(0));
    CHECK_THROWS_AS(intersection_multiplicity(BiPoly(), P("y")), std::invalid_argument);
    // Teissier identity, example with k = 1: 2 + 13 - 1 on the left.
    const BiPoly J = jacobian_det(P("y^2-x^3"), kCusp4);
    CHECK(intersection_multiplicity(P("y^2-x^3"), J) == ExtInt(14));
    CHECK(intersection_multiplicity(P("y^2-x^3"), P("10*y^2+3*x^3")) == ExtInt(6));
}

TEST_CASE("intersection with a smooth graph y = p(x) is the order of h(x, p(x))") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<mpq_class> pc{0};
        const int deg = 1 + static_cast<int>(rng() % 4);
        for (int i = 1; i <= deg; ++i) pc.push_back(oracle::random_rational(rng));
        const QPoly p(pc);
        std::vector<QPoly> yc{-p, QPoly(mpq_class(1))};
        const BiPoly graph = BiPoly::from_y_coeffs(yc);
        const BiPoly h = oracle::random_poly(rng, 5, 4, trial % 3 != 0);
        if (h.is_zero()) continue;
        const auto expect = oracle::order_on_graph(h, p);
        const ExtInt got = intersection_multiplicity(graph, h);
        if (expect) CHECK(got == ExtInt(*expect));
        else CHECK(got.is_infinite());
    }
}

TEST_CASE("intersection with y^n - x^m is ord_t h(t^n, t^m)") {
    std::mt19937_64 rng(16);
    const std::vector<std::pair<int, int>> curves{{2, 3}, {3, 4}, {2, 5}, {3, 5}, {4, 7}, {5, 6}};
    for (int trial = 0; trial < 150; ++trial) {
        const auto [n, m] = curves[static_cast<std::size_t>(trial) % curves.size()];
        const BiPoly c = BiPoly::y().pow(n) - BiPoly::x().pow(m);
        const BiPoly h = oracle::random_poly(rng, 5, 5, true);
        if (h.is_zero()) continue;
        const auto expect = oracle::order_on_monomial_curve(h, n, m);
        const ExtInt got = intersection_multiplicity(c, h);
        if (expect) CHECK(got == ExtInt(*expect));
        else CHECK(got.is_infinite());
    }
}

TEST_CASE("intersection multiplicity is symmetric and additive") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly f = oracle::random_poly(rng, 5, 4, true);
        const BiPoly h = oracle::random_poly(rng, 5, 4, true);
        if (f.is_zero() || h.is_zero()) continue;
        CHECK(intersection_multiplicity(f, h) == intersection_multiplicity(h, f));
    }
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const BiPoly f = oracle::random_poly(rng, 4, 3, true);
        const BiPoly h1 = oracle::random_poly(rng, 4, 3, true);
        const BiPoly h2 = oracle::random_poly(rng, 4, 3, true);
        if (f.is_zero() || h1.is_zero() || h2.is_zero()) continue;
        const ExtInt a = intersection_multiplicity(f, h1), b = intersection_multiplicity(f, h2);
        if (a.is_infinite() || b.is_infinite()) continue;
        CHECK(intersection_multiplicity(f, h1 * h2) == a + b);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("milnor number") {
    CHECK(milnor_number(P("y^2-x^3")) == 2);
    CHECK(milnor_number(P("y")) == 0);
    CHECK(milnor_number(kCusp4) == 16);
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b)
            CHECK(milnor_number(BiPoly::x().pow(a) + BiPoly::y().pow(b)) == (a - 1) * (b - 1));
    CHECK_THROWS_AS(milnor_number(P("y^2")), ValidationError);
    CHECK_THROWS_AS(milnor_number(P("x^2*y^2")), ValidationError);
}

TEST_CASE("parser examples and errors") {
    CHECK(P("y") == BiPoly::y());
    CHECK(P(" ( y ^ 2 - x ^ 3 ) ^ 2 - x ^ 5 * y ") == kCusp4);
    CHECK(P("-y+x^2") == BiPoly::x().pow(2) - BiPoly::y());
    CHECK(P("3/6*x") == BiPoly::x().scaled(mpq_class(1, 2)));
    CHECK(P("x^0") == BiPoly(1));

    struct Bad {
        const char* text;
        int line;
        int column;
    };
    for (const Bad& b : {Bad{"y^-1", 1, 3}, Bad{"x^1/2", 1, 4}, Bad{"2x", 1, 2}, Bad{"x+", 1, 3}, Bad{"1/0", 1, 4},
                         Bad{"x^99999", 1, 8}, Bad{"x+\n y*)", 2, 4}, Bad{"", 1, 1}, Bad{"x**2", 1, 3}}) {
        CAPTURE(b.text);
        try {
            (void)P(b.text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == b.line);
            CHECK(e.column() == b.column);
        }
    }
    std::string deep(300, '(');
    deep += "x" + std::string(300, ')');
    CHECK_THROWS_AS(P(deep.c_str()), ParseError);
}

TEST_CASE("printer and parser round trip") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 500; ++trial) {
        const BiPoly p = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 8), 9);
        const BiPoly q = parse_poly(p.to_string());
        CHECK(q == p);
        CHECK(parse_poly(q.to_string()) == q);
    }
}
