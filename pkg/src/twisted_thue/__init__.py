"""Twisted Thue inequalities |F_eps(x, y)| <= m over fields with at most one real embedding.

Exact arithmetic in Q(alpha), certified embeddings, heights, unit-lattice
constants, twisted forms, the quartic Stender family, the effective constant
chain and capped solution enumeration checked against a sympy brute force.
"""

from .algnum import NumberField, AlgElement, minpoly_integer, is_primitive_element
from .embeddings import EmbeddingSet, compute_embeddings, embed, house, is_almost_totally_imaginary
from .errors import (
    ThueError,
    ValidationError,
    PrecisionExhausted,
    DegenerateTwist,
    RealRootPresent,
    NotAlmostTotallyImaginary,
    ProviderMissing,
)
from .heights import abs_log_height, mahler_measure
from .units import ExponentVector, UnitBasis, reduce_by_units, unit_from_exponents
from .forms import BinaryForm, SearchCaps, SolutionTriple, evaluate, reciprocal_form, twist
from .fieldspec import load_field_spec, parse_field_spec
from .stender import StenderParams, coeffs_by_recurrence, coeffs_direct, family_form, solve_family
from .diophantine import (
    BoundReport,
    MatveevProvider,
    TableProvider,
    compose_bounds,
    solve_family_general,
    solve_fixed_totally_imaginary,
)

__version__ = "0.1.0"
