#pragma once

#include "approxjac/bipoly.hpp"
#include "approxjac/core.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace approxjac {

// Puiseux characteristic (b_0, ..., b_g): strictly increasing, with the gcd
// chain gcd(b_0..b_k) strictly decreasing down to 1.
class CharSequence {
public:
    explicit CharSequence(std::vector<std::int64_t> b);  // throws ValidationError

    const std::vector<std::int64_t>& values() const { return b_; }
    int g() const { return static_cast<int>(b_.size()) - 1; }
    std::int64_t operator[](int i) const { return b_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const CharSequence&, const CharSequence&) = default;
    std::string to_string() const;  // "(6,8,11)"

private:
    std::vector<std::int64_t> b_;
};

// Minimal generators <b0bar, ..., bgbar> of the semigroup of a branch, with
// the derived sequences l_k = gcd(b0bar..bkbar) and n_k = l_{k-1} / l_k.
// Construction validates: l_g = 1, every n_k >= 2, b0bar < b1bar, and
// b_{q+1}bar > n_q b_qbar for 1 <= q <= g-1.
class Semigroup {
public:
    explicit Semigroup(std::vector<std::int64_t> gens);  // throws ValidationError

    const std::vector<std::int64_t>& gens() const { return gens_; }
    int g() const { return static_cast<int>(gens_.size()) - 1; }
    std::int64_t gen(int i) const { return gens_.at(static_cast<std::size_t>(i)); }
    std::int64_t l(int k) const { return l_.at(static_cast<std::size_t>(k)); }
    // n_k for 1 <= k <= g.
    std::int64_t n(int k) const;
    // b_{k+1}bar / l_{k+1} for 0 <= k <= g-1.
    std::int64_t mbar(int k) const;

    friend bool operator==(const Semigroup& a, const Semigroup& b) { return a.gens_ == b.gens_; }
    std::string to_string() const;  // "<4,6,13>"

private:
    std::vector<std::int64_t> gens_;
    std::vector<std::int64_t> l_;
};

// The p-th approximate root: the unique monic g with deg_y(f - g^p) < d - d/p.
// Throws ValidationError when f is not monic in y or p does not divide deg_y f.
BiPoly approximate_root(const BiPoly& f, int p);

struct BranchAnalysis {
    Semigroup semigroup;
    // f^(0), ..., f^(g-1); f^(-1) = x is not stored.
    std::vector<BiPoly> roots;
};

// Runs the approximate-root iteration b_{k+1}bar = (f, f^(k))_0 on an
// irreducible Weierstrass polynomial. Irreducibility is not certified; the
// semigroup validity checks act as the rejection filter. Throws
// ValidationError("input not an irreducible branch transverse to x=0: ...").
BranchAnalysis analyze_branch(const BiPoly& f);

Semigroup semigroup_of(const BiPoly& f);
std::vector<BiPoly> characteristic_roots(const BiPoly& f);

Semigroup char_to_semigroup(const CharSequence& c);
CharSequence semigroup_to_char(const Semigroup& s);

// mu = sum_{q=1}^g (n_q - 1) b_qbar - b_0bar + 1
std::int64_t milnor_from_semigroup(const Semigroup& s);

// Semigroup of f^(k): <b_0bar/l_k, ..., b_kbar/l_k>, 0 <= k <= g-1.
Semigroup approximate_root_semigroup(const Semigroup& s, int k);

// Coefficients a_0..a_{k-1} with n_k b_kbar = sum a_j b_jbar, 0 <= a_j < n_j
// for j >= 1. Throws ValidationError if a_0 would be negative.
std::vector<std::int64_t> semigroup_representation(const Semigroup& s, int k);

struct BranchGeneratorOptions {
    int max_attempts = 64;
    // Probability of adding higher-order perturbation terms to a candidate.
    double perturb_probability = 0.5;
};

// Candidate polynomials f_k = f_{k-1}^{n_k} - c_k x^{a_0} prod_j f_{j-1}^{a_j}
// with random nonzero coefficients, optional random coordinate twist of f_0
// and optional perturbation terms; a candidate is returned only if
// semigroup_of reproduces the requested semigroup.
BiPoly build_test_branch(const CharSequence& c, std::mt19937_64& rng, const BranchGeneratorOptions& opts = {});

// Uniform-ish random valid semigroup with 1 <= g <= max_g, generators bounded
// by max_gen and b_0bar bounded by max_b0.
Semigroup random_semigroup(std::mt19937_64& rng, int max_g, std::int64_t max_gen, std::int64_t max_b0);

}  // namespace approxjac
