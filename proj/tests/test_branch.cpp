#include "approxjac/branch.hpp"
#include "approxjac/parse.hpp"
#include "approxjac/resultant.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace approxjac;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

struct Fixture {
    const char* text;
    std::vector<std::int64_t> semigroup;
    std::vector<const char*> roots;
};

const std::vector<Fixture> kFixtures{
    {"(y^2-x^3)^2-x^5*y", {4, 6, 13}, {"y", "y^2-x^3"}},
    {"(y^3-6*x^3*y-x^4)^2-9*x^9", {6, 8, 27}, {"y", "y^3-6*x^3*y-x^4"}},
    {"(y^3-x^4)^2+x^9-x^7*y^2", {6, 8, 27}, {"y", "y^3-x^4"}},
    {"y^2-x^3", {2, 3}, {"y"}},
    {"y^3-x^7", {3, 7}, {"y"}},
    {"y+x^2", {1}, {}},
    {"y", {1}, {}},
};

}  // namespace

TEST_CASE("semigroup and approximate roots of fixtures") {
    for (const auto& fx : kFixtures) {
        CAPTURE(fx.text);
        const BiPoly f = P(fx.text);
        const Semigroup s = semigroup_of(f);
        CHECK(s.gens() == fx.semigroup);
        const auto roots = characteristic_roots(f);
        REQUIRE(roots.size() == fx.roots.size());
        for (std::size_t k = 0; k < roots.size(); ++k) CHECK(roots[k] == P(fx.roots[k]));
    }
    CHECK(approximate_root(P("(y^2-x^3)^2-x^5*y"), 2) == P("y^2-x^3"));
    CHECK(approximate_root(P("(y^3-6*x^3*y-x^4)^2-9*x^9"), 2) == P("y^3-6*x^3*y-x^4"));
}

TEST_CASE("approximate root definition holds") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 8);
        BiPoly f = BiPoly::y().pow(d) + oracle::random_poly(rng, 8, d - 1);
        // keep f monic of degree d in y
        BiPoly::TermMap m;
        for (const auto& [mono, c] : f.terms())
            if (mono.y < d || mono.x == 0) m[mono] = c;
        f = BiPoly(m);
        for (int p = 1; p <= d; ++p) {
            if (d % p != 0) continue;
            const BiPoly g = approximate_root(f, p);
            CHECK(g.is_monic_in_y());
            CHECK(g.deg_y() == d / p);
            CHECK((f - g.pow(p)).deg_y() < d - d / p);
        }
        CHECK(approximate_root(f, 1) == f);
    }
    CHECK_THROWS_AS(approximate_root(P("y^3-x"), 2), ValidationError);
    CHECK_THROWS_AS(approximate_root(P("2*y^2-x"), 2), ValidationError);
}

TEST_CASE("approximate roots of branches satisfy the degree bound") {
    for (const auto& fx : kFixtures) {
        const BiPoly f = P(fx.text);
        const Semigroup s = semigroup_of(f);
        const auto roots = characteristic_roots(f);
        const std::int64_t b0 = s.gen(0);
        for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
            CHECK(roots[static_cast<std::size_t>(k)].deg_y() == b0 / s.l(k));
            CHECK((f - roots[static_cast<std::size_t>(k)].pow(static_cast<int>(s.l(k)))).deg_y() < b0 - b0 / s.l(k));
        }
    }
}

TEST_CASE("semigroup definition round trips through intersection numbers") {
    for (const auto& fx : kFixtures) {
        const BiPoly f = P(fx.text);
        const Semigroup s = semigroup_of(f);
        CHECK(intersection_multiplicity(f, BiPoly::x()) == ExtInt(s.gen(0)));
        const auto roots = characteristic_roots(f);
        for (int k = 1; k <= s.g(); ++k)
            CHECK(intersection_multiplicity(f, roots[static_cast<std::size_t>(k - 1)]) == ExtInt(s.gen(k)));
    }
}

TEST_CASE("intersection numbers with random curves lie in the semigroup") {
    std::mt19937_64 rng(32);
    for (const auto& fx : kFixtures) {
        const BiPoly f = P(fx.text);
        const Semigroup s = semigroup_of(f);
        const auto in = oracle::semigroup_members(s.gens(), 400);
        for (int trial = 0; trial < 25; ++trial) {
            const BiPoly h = oracle::random_poly(rng, 4, 5, true);
            if (h.is_zero()) continue;
            const ExtInt v = intersection_multiplicity(f, h);
            if (v.is_infinite()) {
                // only a smooth branch can divide a random polynomial this small
                CHECK(f.deg_y() == 1);
                continue;
            }
            if (v.value() <= 400) CHECK(in[static_cast<std::size_t>(v.value())]);
        }
    }
}

TEST_CASE("rejections") {
    CHECK_THROWS_WITH_AS(semigroup_of(P("y^3-x^2")), doctest::Contains("swapping x and y"), ValidationError);
    for (const char* bad : {"y^2-x^2", "y^2-x^4", "2*y^2-x^3", "y^2+x^3+1", "y^2", "x", "(y^2-x^3)^2"}) {
        CAPTURE(bad);
        CHECK_THROWS_WITH_AS(semigroup_of(P(bad)), doctest::Contains("input not an irreducible branch transverse to x=0"),
                             ValidationError);
    }
}

TEST_CASE("characteristic and semigroup conversions") {
    CHECK(char_to_semigroup(CharSequence({6, 8, 11})).gens() == std::vector<std::int64_t>{6, 8, 27});
    CHECK(char_to_semigroup(CharSequence({4, 6, 7})).gens() == std::vector<std::int64_t>{4, 6, 13});
    CHECK(char_to_semigroup(CharSequence({1})).gens() == std::vector<std::int64_t>{1});
    CHECK(semigroup_to_char(Semigroup({6, 8, 27})).to_string() == "(6,8,11)");
    CHECK(Semigroup({4, 6, 13}).to_string() == "<4,6,13>");
    CHECK_THROWS_AS(CharSequence({2}), ValidationError);
    CHECK_THROWS_AS(CharSequence({4, 6, 8}), ValidationError);
    CHECK_THROWS_AS(CharSequence({4, 2, 7}), ValidationError);
    CHECK_THROWS_AS(Semigroup({4, 6}), ValidationError);
    CHECK_THROWS_AS(Semigroup({4, 6, 11}), ValidationError);
    CHECK_THROWS_AS(Semigroup({6, 4, 27}), ValidationError);

    const Semigroup s({4, 6, 13});
    CHECK(s.l(0) == 4);
    CHECK(s.l(1) == 2);
    CHECK(s.l(2) == 1);
    CHECK(s.n(1) == 2);
    CHECK(s.n(2) == 2);
    CHECK(s.mbar(0) == 3);
    CHECK(s.mbar(1) == 13);
}

TEST_CASE("characteristic to semigroup round trip on random characteristics") {
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 500) {
        const int g = 1 + static_cast<int>(rng() % 4);
        const auto b = oracle::random_characteristic(rng, g, 100000);
        if (b.empty()) continue;
        const CharSequence c(b);
        const Semigroup s = char_to_semigroup(c);
        CHECK(semigroup_to_char(s) == c);
        CHECK(s.gen(0) == b[0]);
        CHECK(s.gen(1) == b[1]);
        for (int q = 2; q <= g; ++q) CHECK(s.gen(q) == s.n(q - 1) * s.gen(q - 1) + b[static_cast<std::size_t>(q)] - b[static_cast<std::size_t>(q - 1)]);
        ++done;
    }
}

TEST_CASE("milnor number from the semigroup") {
    CHECK(milnor_from_semigroup(Semigroup({2, 3})) == 2);
    CHECK(milnor_from_semigroup(Semigroup({4, 6, 13})) == 16);
    CHECK(milnor_from_semigroup(Semigroup({1})) == 0);

    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 300) {
        const auto gens = oracle::random_branch_semigroup(rng, 1 + static_cast<int>(rng() % 3), 400);
        if (gens.empty()) continue;
        CHECK(milnor_from_semigroup(Semigroup(gens)) == oracle::conductor(gens));
        ++done;
    }
    for (const auto& fx : kFixtures) {
        const BiPoly f = P(fx.text);
        CHECK(milnor_from_semigroup(semigroup_of(f)) == milnor_number(f));
    }
}

TEST_CASE("semigroup of an approximate root") {
    CHECK(approximate_root_semigroup(Semigroup({4, 6, 13}), 1).gens() == std::vector<std::int64_t>{2, 3});
    CHECK(approximate_root_semigroup(Semigroup({6, 10, 31}), 1).gens() == std::vector<std::int64_t>{3, 5});
    CHECK(approximate_root_semigroup(Semigroup({6, 10, 31}), 0).gens() == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(approximate_root_semigroup(Semigroup({4, 6, 13}), 2), ValidationError);
    for (const auto& fx : kFixtures) {
        const BiPoly f = P(fx.text);
        const Semigroup s = semigroup_of(f);
        const auto roots = characteristic_roots(f);
        for (int k = 0; k < s.g(); ++k)
            CHECK(semigroup_of(roots[static_cast<std::size_t>(k)]) == approximate_root_semigroup(s, k));
    }
}

TEST_CASE("semigroup representation") {
    std::mt19937_64 rng(35);
    int done = 0;
    while (done < 200) {
        const auto gens = oracle::random_branch_semigroup(rng, 2 + static_cast<int>(rng() % 3), 10000);
        if (gens.empty()) continue;
        const Semigroup s(gens);
        for (int k = 1; k <= s.g(); ++k) {
            const auto a = semigroup_representation(s, k);
            REQUIRE(a.size() == static_cast<std::size_t>(k));
            std::int64_t sum = 0;
            for (int j = 0; j < k; ++j) {
                CHECK(a[static_cast<std::size_t>(j)] >= 0);
                if (j >= 1) CHECK(a[static_cast<std::size_t>(j)] < s.n(j));
                sum += a[static_cast<std::size_t>(j)] * s.gen(j);
            }
            CHECK(sum == s.n(k) * s.gen(k));
        }
        ++done;
    }
}

TEST_CASE("generated test branches have the requested semigroup") {
    std::mt19937_64 rng(36);
    int built = 0;
    for (int trial = 0; trial < 60 && built < 20; ++trial) {
        const auto b = oracle::random_characteristic(rng, 1 + static_cast<int>(rng() % 2), 40);
        if (b.empty() || b[0] > 12) continue;
        const CharSequence c(b);
        const BiPoly f = build_test_branch(c, rng);
        CAPTURE(f.to_string());
        CHECK(f.is_monic_in_y());
        CHECK(f.deg_y() == b[0]);
        CHECK(semigroup_of(f) == char_to_semigroup(c));
        CHECK(milnor_number(f) == milnor_from_semigroup(char_to_semigroup(c)));
        ++built;
    }
    CHECK(built >= 10);
    for (int trial = 0; trial < 50; ++trial) {
        const Semigroup s = random_semigroup(rng, 4, 2000, 64);
        CHECK(s.g() >= 1);
        CHECK(s.gen(0) <= 64);
        CHECK(Semigroup(s.gens()) == s);
    }
}
