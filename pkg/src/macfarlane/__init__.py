"""Exact quaternion-hyperboloid toolkit.

Quaternion algebras over imaginary quadratic fields with the dagger
involution, their hyperboloid models, exact model conversions, and a
trace-ordered Dirichlet-domain engine with CLI and SVG output.
"""

from .exactnum import QuadNum, format_quad, parse_quad, quad_arith, quad_compare, quad_conj
from .quatalg import (
    AlgebraDesc, GroupElem, Mat2, Quat, dagger, extend_to_K, from_matrix,
    hilbert_symbol_rational, is_macfarlane, ramification_set_rational, to_matrix,
)
from .hypmodel import (
    HypPoint, KleinPoint, UHSPoint, act, bisector, cosh_distance,
    from_klein, from_uhs, to_klein, to_uhs,
)
from .dirichlet import (
    DomainState, GroupInput, compute_domain, filter_group_points,
    frobenius_check, orbit_factor, shell_solutions, side_pairings, slope_key,
)

__version__ = "0.1.0"
