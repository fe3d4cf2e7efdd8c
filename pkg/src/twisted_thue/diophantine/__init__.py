"""Solving core: single forms, elimination diagnostics, the constant chain and family enumeration."""

from .bounds import BoundReport, LinFormBoundProvider, MatveevProvider, TableProvider, compose_bounds, largest_fixed_point
from .elimination import (
    ParameterProfile,
    PrivilegedEmbeddings,
    eliminate_xy,
    parameter_profile,
    select_privileged,
    siegel_residual,
    solution_data,
    third_embedding,
)
from .family import solve_family_general, solve_form_by_halves
from .imaginary import enumerate_form, lemma3_bounds, solve_fixed_totally_imaginary, x_window
