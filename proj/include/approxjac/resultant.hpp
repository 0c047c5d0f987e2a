#pragma once

#include "approxjac/bipoly.hpp"
#include "approxjac/core.hpp"
#include "approxjac/qpoly.hpp"

namespace approxjac {

// Res_y(f, h) as a polynomial in x, computed with the subresultant PRS over
// Q[x]. Only ord_x of the result is consumed downstream, so the sign and unit
// conventions are whatever the PRS produces.
// Throws std::invalid_argument when both inputs are constant in y.
QPoly resultant_y(const BiPoly& f, const BiPoly& h);

// Local intersection multiplicity (f, h)_0 at the origin.
//
// Powers of x are split off first, f = x^a f', h = x^b h', and
//   (f, h)_0 = a (x, h')_0 + b (x, f')_0 + (f', h')_0
// with (x, p)_0 = ord_y p(0, y). The last term is ord_x Res_y(W, h') where W
// is the Weierstrass polynomial of f' (or of h') at the origin; when neither
// is already Weierstrass-type, W is obtained by Hensel lifting to sufficient
// x-adic precision. Returns infinity when f and h share a factor (zero
// resultant) or both are divisible by x.
// Throws std::invalid_argument if either input is zero.
ExtInt intersection_multiplicity(const BiPoly& f, const BiPoly& h);

// (df/dx, df/dy)_0. Throws ValidationError for a non-isolated singularity.
std::int64_t milnor_number(const BiPoly& f);

// True when all roots of h in y have positive x-order: h(0,0) = 0,
// deg_y h = ord_y h(0, y) and the leading y-coefficient is a constant.
bool is_weierstrass_type(const BiPoly& h);

// Monic Weierstrass factor of h at the origin, exact modulo x^precision.
// Requires x not dividing h and h(0,0) = 0.
BiPoly weierstrass_factor(const BiPoly& h, int precision);

}  // namespace approxjac
