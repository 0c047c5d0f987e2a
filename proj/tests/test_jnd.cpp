#include "approxjac/jnd.hpp"
#include "approxjac/json_io.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace approxjac;

namespace {

ElementarySegment seg(std::int64_t l, std::int64_t m) { return ElementarySegment(ExtInt(l), ExtInt(m)); }

NewtonDiagram D(std::initializer_list<std::pair<std::int64_t, std::int64_t>> s) {
    std::vector<ElementarySegment> v;
    for (auto [l, m] : s) v.push_back(seg(l, m));
    return NewtonDiagram(v);
}

std::vector<std::int64_t> random_gens(std::mt19937_64& rng, int max_g, std::int64_t max_gen) {
    for (;;) {
        const auto gens = oracle::random_branch_semigroup(rng, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_g)), max_gen);
        if (!gens.empty()) return gens;
    }
}

// Milnor number of f^(k) from the conductor of <b0bar/l_k, ..., b_kbar/l_k>.
std::int64_t root_milnor(const std::vector<std::int64_t>& gens, int k) {
    std::int64_t l = 0;
    for (int i = 0; i <= k; ++i) l = std::gcd(l, gens[static_cast<std::size_t>(i)]);
    std::vector<std::int64_t> sub;
    for (int i = 0; i <= k; ++i) sub.push_back(gens[static_cast<std::size_t>(i)] / l);
    return oracle::conductor(sub);
}

}  // namespace

TEST_CASE("closed formula fixtures") {
    CHECK(jnd_formula(Semigroup({4, 6, 13}), 0) == D({{8, 2}, {13, 3}}));
    CHECK(jnd_formula(Semigroup({4, 6, 13}), 1) == D({{28, 14}}));
    CHECK(jnd_formula(Semigroup({4, 14, 31}), 1) == D({{72, 36}}));
    CHECK(jnd_formula(Semigroup({4, 6, 35}), 1) == D({{72, 36}}));
    CHECK(jnd_formula(Semigroup({4, 6, 37}), 1) == D({{76, 38}}));
    CHECK(jnd_formula(Semigroup({6, 10, 31}), 1) == D({{76, 38}}));
    CHECK(jnd_formula(Semigroup({6, 8, 27}), 1) == D({{64, 32}}));
    CHECK(jnd_formula(Semigroup({2, 3}), 0) == D({{4, 2}}));
    CHECK_THROWS_WITH_AS(jnd_formula(Semigroup({1}), 0), doctest::Contains("smooth branch has no approximate jacobian diagrams"),
                         ValidationError);
    CHECK_THROWS_AS(jnd_formula(Semigroup({4, 6, 13}), 2), ValidationError);
    CHECK_THROWS_AS(jnd_formula(Semigroup({4, 6, 13}), -1), ValidationError);
}

TEST_CASE("jacobian invariants") {
    CHECK(jacobian_invariants(Semigroup({4, 6, 13}), 0) == std::vector<Rational>{Rational(4), Rational(13, 3)});
    CHECK(jacobian_invariants(Semigroup({4, 6, 13}), 1) == std::vector<Rational>{Rational(2)});
    CHECK(jacobian_invariants(Semigroup({2, 3}), 0) == std::vector<Rational>{Rational(2)});
}

TEST_CASE("family fixtures") {
    const JndFamily fam = jnd_family(Semigroup({4, 6, 13}));
    REQUIRE(fam.diagrams.size() == 2);
    CHECK(fam.diagrams[0] == D({{8, 2}, {13, 3}}));
    CHECK(fam.diagrams[1] == D({{28, 14}}));
    CHECK(jnd_family(Semigroup({2, 3})).diagrams == std::vector<NewtonDiagram>{D({{4, 2}})});
    CHECK_THROWS_AS(jnd_family(Semigroup({1})), ValidationError);
}

TEST_CASE("formula properties on random semigroups") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto gens = random_gens(rng, 5, 10000);
        const Semigroup s(gens);
        const int g = s.g();
        for (int k = 0; k < g; ++k) {
            const NewtonDiagram d = jnd_formula(s, k);
            REQUIRE(d.segments().size() == static_cast<std::size_t>(g - k));
            // total height telescopes to mu(f^(k)) + b_{k+1}bar - 1
            CHECK(d.finite_height() == root_milnor(gens, k) + gens[static_cast<std::size_t>(k + 1)] - 1);
            const auto inc = d.inclinations();
            const auto inv = jacobian_invariants(s, k);
            REQUIRE(inc.size() == inv.size());
            for (std::size_t i = 0; i < inc.size(); ++i) CHECK(inc[i] == Inclination(inv[i]));
            for (std::size_t i = 1; i < inv.size(); ++i) CHECK(inv[i - 1] < inv[i]);
            CHECK(inv.front() == Rational(s.l(k)));
            // remaining inclinations l_{i-1} b_i bar / b_{k+1} bar
            for (int i = k + 2; i <= g; ++i)
                CHECK(inv[static_cast<std::size_t>(i - k - 1)] == Rational(s.l(i - 1) * gens[static_cast<std::size_t>(i)],
                                                                          gens[static_cast<std::size_t>(k + 1)]));
        }
    }
}

TEST_CASE("recovery inverts the family on 1000 random semigroups") {
    std::mt19937_64 rng(42);
    int bigger = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto gens = random_gens(rng, 5, 10000);
        const Semigroup s(gens);
        CHECK(recover_semigroup(jnd_family(s).diagrams) == s);
        bigger += s.g() >= 3 ? 1 : 0;
    }
    CHECK(bigger > 100);
}

TEST_CASE("recovery fixtures and rejections") {
    CHECK(recover_semigroup({D({{8, 2}, {13, 3}}), D({{28, 14}})}) == Semigroup({4, 6, 13}));
    CHECK(recover_semigroup({D({{4, 2}})}) == Semigroup({2, 3}));
    const RecoveryData rd = recovery_data({D({{8, 2}, {13, 3}}), D({{28, 14}})});
    CHECK(rd.iota == Rational(2));
    CHECK(rd.H == std::vector<std::int64_t>{3});
    CHECK(rd.Llen == 13);

    // A single diagram taken from position k = 1 of a longer family.
    CHECK_THROWS_WITH_AS(recover_semigroup(std::vector<std::pair<int, NewtonDiagram>>{{1, D({{72, 36}})}}),
                         doctest::Contains("family is not a branch jacobian family"), ValidationError);
    CHECK(recover_semigroup(std::vector<std::pair<int, NewtonDiagram>>{{0, D({{8, 2}, {13, 3}})}, {1, D({{28, 14}})}}) ==
          Semigroup({4, 6, 13}));
    for (const auto& bad : std::vector<std::vector<NewtonDiagram>>{
             {},
             {D({{8, 2}, {13, 3}}), D({{28, 14}, {13, 3}})},
             {D({{8, 2}, {13, 3}}), D({{27, 14}})},
             {D({{8, 2}, {14, 3}}), D({{28, 14}})},
             {D({{9, 2}, {13, 3}}), D({{28, 14}})},
             {D({{5, 2}})},
         }) {
        CHECK_THROWS_WITH_AS(recover_semigroup(bad), doctest::Contains("family is not a branch jacobian family"),
                             ValidationError);
    }
}

TEST_CASE("single diagrams do not determine the semigroup") {
    const std::vector<Semigroup> four{Semigroup({4, 14, 31}), Semigroup({4, 6, 35}), Semigroup({4, 6, 37}),
                                      Semigroup({6, 10, 31})};
    CHECK(jnd_formula(four[0], 1) == jnd_formula(four[1], 1));
    CHECK(jnd_formula(four[2], 1) == jnd_formula(four[3], 1));
    for (std::size_t i = 0; i < four.size(); ++i)
        for (std::size_t j = i + 1; j < four.size(); ++j) CHECK(jnd_family(four[i]).diagrams != jnd_family(four[j]).diagrams);
}

TEST_CASE("family JSON round trip") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Semigroup s(random_gens(rng, 5, 10000));
        const JndFamily fam = jnd_family(s);
        const auto j = family_to_json(fam);
        const FamilyInput in = family_from_json(nlohmann::json::parse(j.dump()));
        CHECK(in.semigroup == s.gens());
        CHECK(recover_semigroup(in.diagrams) == s);
    }
    const auto j = family_to_json(jnd_family(Semigroup({4, 6, 13})));
    CHECK(j.dump() == R"({"diagrams":[{"k":0,"segments":[[8,2],[13,3]]},{"k":1,"segments":[[28,14]]}],"semigroup":[4,6,13]})");
}
