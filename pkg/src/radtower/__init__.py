"""Monogenicity of radical-iterate towers, Newton polygons, Ore dissections.

The library decides, for a prime p and integer a with x^p - a irreducible,
whether each level of the tower of fields defined by the iterates of
x^p - a has a power integral basis generated by a root -- and exposes the
underlying machinery: exact integer polynomials, p-adic valuations,
bounded-effort factorization with tri-state squarefree status, finite
field polynomial factorization, phi-adic Newton polygons with residual
polynomials, index bounds, and splitting dissections.
"""

from ._version import __version__
from .factorint import (
    DEFAULT_BUDGET,
    EFFORT_BUDGETS,
    Budget,
    CofactorStatus,
    Factorization,
    NotSquarefree,
    Squarefree,
    SquarefreeStatus,
    SquarefreeUnknown,
    factor,
    is_probable_prime,
    squarefree_status,
)
from .finitefield import (
    FqContext,
    FqElem,
    FqPoly,
    factor_mod_p,
    fq_factor,
    is_separable,
)
from .intpoly import (
    IntPoly,
    compose,
    disc_radical,
    is_irreducible_radical,
    iterate,
    orbit_constant,
    orbit_constants,
)
from .monogenic import (
    FermatCertificate,
    IterateVerdict,
    SquareDividesConstant,
    TowerReport,
    UnknownSquarefreeCertificate,
    Verdict,
    analyze_tower,
    ell_check,
    p_maximality_tower,
    radical_maximality_q,
)
from .newton import (
    DissectionReport,
    NewtonPolygon,
    OreAnalysis,
    PhiDevelopment,
    ResidualPoly,
    Side,
    analyze_at_prime,
    dedekind_maximality,
    dissect,
    ind_phi,
    is_p_maximal_ore,
    ore_index,
    phi_development,
    principal_polygon,
    residual_polynomial,
)
from .polyparse import PolyParseError, parse_poly, render_poly
from .valuation import (
    INFINITY,
    Valuation,
    fermat_valuation,
    gauss_valuation,
    perfect_power,
    vp,
)

__all__ = [
    "__version__",
    "IntPoly", "compose", "iterate", "orbit_constant", "orbit_constants",
    "is_irreducible_radical", "disc_radical",
    "Valuation", "INFINITY", "vp", "gauss_valuation", "fermat_valuation",
    "perfect_power",
    "Budget", "DEFAULT_BUDGET", "EFFORT_BUDGETS", "CofactorStatus",
    "Factorization", "factor", "is_probable_prime",
    "SquarefreeStatus", "Squarefree", "NotSquarefree", "SquarefreeUnknown",
    "squarefree_status",
    "FqContext", "FqElem", "FqPoly", "factor_mod_p", "fq_factor", "is_separable",
    "PhiDevelopment", "Side", "NewtonPolygon", "ResidualPoly", "OreAnalysis",
    "DissectionReport", "phi_development", "principal_polygon", "ind_phi",
    "residual_polynomial", "analyze_at_prime", "ore_index", "is_p_maximal_ore",
    "dissect", "dedekind_maximality",
    "Verdict", "IterateVerdict", "TowerReport",
    "FermatCertificate", "SquareDividesConstant", "UnknownSquarefreeCertificate",
    "radical_maximality_q", "p_maximality_tower", "ell_check", "analyze_tower",
    "PolyParseError", "parse_poly", "render_poly",
]
