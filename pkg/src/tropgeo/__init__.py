"""Exact tropical (min-plus) plane geometry.

Kernel layers: scalars (exact semiring arithmetic), linalg (tropical
determinants, Cramer, linkage trees, TP^3 lines), polynomial/subdivision/
curves/conics (plane curves dual to Newton subdivisions), intersect (stable
intersections with symbolic perturbation), trees + constructions (incidence
constructions), scene (evaluation service) and svgout (rendering).
"""

from .scalars import (
    INF,
    EpsRational,
    PlusInfinity,
    TropicalScalar,
    format_scalar,
    normalize_tp2,
    parse_scalar,
    trop_add,
    trop_mul,
)
from .linalg import (
    DetCertificate,
    LinkageTree,
    PlueckerError,
    PreconditionError,
    SingularMinorError,
    StableSolution,
    TP3Line,
    TropMatrix,
    cramer_solve,
    is_tropically_singular,
    linkage_tree,
    tp3_line,
    trop_det,
)
from .polynomial import (
    CONIC_LABELS,
    CONIC_SUPPORT,
    TropicalPolynomial,
    conic_polynomial,
    conic_row,
    line_polynomial,
    point_on_curve,
)
from .subdivision import RegularSubdivision, regular_subdivision
from .curves import (
    PlaneCurveGraph,
    build_curve,
    check_balancing,
    graph_contains_point,
)
from .conics import ConicClass, classify_conic, is_proper_conic
from .intersect import (
    NotTransversal,
    StableIntersection,
    bezout_check,
    intersection_cells,
    stable_intersect,
    transversal_intersect,
)
from .trees import LabeledTree, enumerate_trees, is_compatible, is_planar_realizable
from .constructions import (
    PappusTrace,
    PencilResult,
    conic_through_five,
    lines_concurrent,
    pappus_construct,
    pencil_through_four,
    trop_cross,
)
from .scene import Scene, evaluate_scene

__all__ = [name for name in dir() if not name.startswith("_")]
