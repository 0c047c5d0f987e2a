#pragma once

#include "approxjac/branch.hpp"
#include "approxjac/newton_diagram.hpp"

#include <utility>
#include <vector>

namespace approxjac {

struct JndFamily {
    Semigroup semigroup;
    std::vector<NewtonDiagram> diagrams;  // index k = 0..g-1
};

struct RecoveryData {
    Rational iota;                // inclination of the last diagram
    std::vector<std::int64_t> H;  // height of the last segment of each diagram but the last
    std::int64_t Llen = 0;        // length of the last segment of diagram g-2 (0 when g = 1)
};

// Closed form of the approximate jacobian Newton diagram N_J(f^(k), f)
// computed from the semigroup alone. Throws ValidationError for g = 0 or k
// outside 0..g-1.
NewtonDiagram jnd_formula(const Semigroup& s, int k);

// Inclinations of jnd_formula(s, k), strictly increasing.
std::vector<Rational> jacobian_invariants(const Semigroup& s, int k);

JndFamily jnd_family(const Semigroup& s);

// Reads the recovery data off a family without validating it.
RecoveryData recovery_data(const std::vector<NewtonDiagram>& family);

// Inverse of jnd_family. The result is re-encoded and must reproduce the
// input exactly. Throws ValidationError("family is not a branch jacobian
// family: ...").
Semigroup recover_semigroup(const std::vector<NewtonDiagram>& family);

// Same, for diagrams labelled with their index k; the labels must be exactly
// 0..size-1 (a partial family is rejected).
Semigroup recover_semigroup(const std::vector<std::pair<int, NewtonDiagram>>& labelled);

}  // namespace approxjac
