"""Approximate jacobian Newton diagrams of plane branches.

Polynomials are parsed from text such as ``"(y^2-x^3)^2-x^5*y"``; semigroups
are plain lists of minimal generators.
"""

from ._core import (
    BiPoly,
    NewtonDiagram,
    NumericalError,
    ParseError,
    ValidationError,
    VerificationError,
    approximate_root,
    char_to_semigroup,
    characteristic_roots,
    diagram_difference,
    intersection_multiplicity,
    jacobian_det,
    jacobian_invariants,
    jnd_family,
    jnd_formula,
    jnd_oracle,
    milnor_from_semigroup,
    milnor_number,
    minkowski_sum,
    newton_diagram,
    numerically_irreducible,
    parse_poly,
    puiseux_expand,
    recover_semigroup,
    semigroup_of,
    semigroup_to_char,
    verify_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
