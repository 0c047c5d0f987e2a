#pragma once

#include "approxjac/branch.hpp"
#include "approxjac/newton_diagram.hpp"
#include "approxjac/puiseux.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace approxjac {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// A group of jacobian roots sharing their contact with the branch, or the
// residual group (contact below b_{k+1}/b_0) together with the x^alpha factor
// of the jacobian.
struct ContactClass {
    int index = 0;  // i in k+1..g; k+1 is the residual class
    bool residual = false;
    // b_i/b_0; for the residual class this is the strict upper bound b_{k+1}/b_0.
    Rational class_contact{0};
    std::vector<PuiseuxSeries> roots;
    std::vector<Rational> root_contacts;  // contact of each root with the branch
    int x_power = 0;                      // alpha, residual class only
    std::int64_t f_intersection = 0;
    std::int64_t fk_intersection = 0;
    ExtInt x_intersection{0};  // infinite when the class carries x^alpha, alpha > 0
};

struct ContactAnalysis {
    Semigroup semigroup{std::vector<std::int64_t>{1}};
    int k = 0;
    BiPoly fk;
    BiPoly jacobian;
    Rational depth{0};
    int tier = 0;
    std::vector<PuiseuxSeries> f_roots;
    std::vector<PuiseuxSeries> fk_roots;
    std::vector<PuiseuxSeries> jacobian_roots;
    int jacobian_x_power = 0;
    std::vector<ContactClass> classes;  // residual first, then i = k+2..g
    // Exact references from resultants.
    ExtInt exact_f_total{0};
    ExtInt exact_fk_total{0};
    bool totals_match = false;
};

// Expands f, f^(k) and J = jac(f^(k), f), classifies the jacobian roots by
// contact with f and computes per-class intersection numbers by root sums.
// Escalates precision until the class totals agree with the exact resultant
// totals; deepens the expansion when a contact is undecidable. Throws
// VerificationError when a root has a contact that is not allowed.
// A root_candidate replaces f^(k) (any monic polynomial with the degree and
// contact properties of the characteristic approximate root).
ContactAnalysis analyze_contacts(const BiPoly& f, int k, const PuiseuxOptions& opts = {},
                                 const std::optional<BiPoly>& root_candidate = std::nullopt);

std::vector<ContactClass> contact_classes(const BiPoly& J, const BiPoly& f, const BiPoly& fk, const Semigroup& s,
                                          int k, const PuiseuxOptions& opts = {});

// Sum of {(f, G)_0 \ (f^(k), G)_0} over the contact classes G. Throws
// VerificationError on an empty class or non-increasing inclinations.
NewtonDiagram diagram_from_classes(const std::vector<ContactClass>& classes);

// Jacobian Newton diagram assembled from numerically grouped roots.
NewtonDiagram jnd_oracle(const BiPoly& f, int k, const PuiseuxOptions& opts = {});

// The roots are closed under x^(1/n) -> w x^(1/n), w = exp(2 pi i / n), and
// that action permutes them in a single cycle.
bool conjugate_closed(const std::vector<PuiseuxSeries>& roots, const PuiseuxOptions& opts = {});

// Monodromy check: the deg_y f Newton-Puiseux roots of f form one cycle.
// Stronger than the semigroup filter; requires semigroup_of(f) to succeed.
bool numerically_irreducible(const BiPoly& f, const PuiseuxOptions& opts = {});

// Properties of a replacement for f^(k) that can be checked: monic, degree
// b_0/l_k, (f, candidate)_0 = b_{k+1}bar and semigroup of the candidate.
std::vector<CheckResult> check_root_candidate(const BiPoly& f, int k, const BiPoly& candidate);

struct VerificationReport {
    std::string polynomial;
    int k = 0;
    std::vector<std::int64_t> semigroup;
    std::string formula;
    std::string oracle;
    std::vector<CheckResult> checks;

    bool pass() const;
    nlohmann::json to_json() const;
};

// Never throws for verification failures; they are report entries. Input
// that is not a branch still throws ValidationError.
VerificationReport verify_decomposition(const BiPoly& f, int k, const PuiseuxOptions& opts = {});

// Same checks with f^(k) replaced by a candidate. The closed formula is only
// established for the characteristic approximate root, so the formula
// comparison is replaced by the candidate property checks.
VerificationReport verify_decomposition(const BiPoly& f, int k, const BiPoly& root_candidate,
                                        const PuiseuxOptions& opts = {});

}  // namespace approxjac
