"""Khovanov homology, the Bockstein Sq¹, and refined s-invariants."""

from .bockstein import sq1, sq1_table
from .cube import HomologyTable, build_complex, khovanov_homology
from .jones import determinant, jones_polynomial
from .links import (
    OrientedLinkDiagram,
    PDError,
    TorusLinkSpec,
    empty_link,
    hopf_link,
    parse_pd,
    serialize_pd,
    torus_link,
    trefoil,
    unknot,
)
from .refined_s import (
    SQ1,
    ZERO,
    FullnessCertificate,
    RefinedSResult,
    ThetaOperation,
    adjunction_bound,
    adjunction_check,
    disjoint_union_check,
    fullness,
    r_plus,
    refined_invariants,
    s_classical,
    s_plus,
    validate_certificate,
)
from .tables import BUILTIN_NAMES, builtin_diagram, knot_9_42

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "FullnessCertificate",
    "HomologyTable",
    "OrientedLinkDiagram",
    "PDError",
    "RefinedSResult",
    "SQ1",
    "ThetaOperation",
    "TorusLinkSpec",
    "ZERO",
    "adjunction_bound",
    "adjunction_check",
    "build_complex",
    "builtin_diagram",
    "determinant",
    "disjoint_union_check",
    "empty_link",
    "fullness",
    "hopf_link",
    "jones_polynomial",
    "khovanov_homology",
    "knot_9_42",
    "parse_pd",
    "r_plus",
    "refined_invariants",
    "s_classical",
    "s_plus",
    "serialize_pd",
    "sq1",
    "sq1_table",
    "torus_link",
    "trefoil",
    "unknot",
    "validate_certificate",
]
