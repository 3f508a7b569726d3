"""Exact computations in the rank-r Heisenberg vertex operator algebra M(1):
mode actions, the radical J(V), degrees and the degree filtration, O_infinity
and commutants."""

__version__ = "0.1.0"

from .expr import format_state, parse_state
from .fock import (
    BosonAlgebra,
    ModuleState,
    Monomial,
    State,
    basis,
    canonicalize,
    colored_partition_count,
    graded_components,
    make_algebra,
)
from .graded import (
    GradedMatrix,
    kernel_basis,
    lemma33_decompose,
    operator_matrix,
    semi_primary_decompose,
    solve,
)
from .modes import boson_mode, check_commutator, check_commutator_grid, p_mode, vertex_mode, virasoro, zero_mode
from .radical import (
    DegreeResult,
    RadicalCertificate,
    commutant_basis,
    degree,
    degree_witness,
    filtration_member,
    j1_basis,
    module_zero_mode_matrix,
    oinfinity_member,
    radical_decompose,
    radical_member,
    tensor_factor_dim_check,
)

__all__ = [
    "__version__",
    "format_state",
    "parse_state",
    "BosonAlgebra",
    "ModuleState",
    "Monomial",
    "State",
    "basis",
    "canonicalize",
    "colored_partition_count",
    "graded_components",
    "make_algebra",
    "GradedMatrix",
    "kernel_basis",
    "lemma33_decompose",
    "operator_matrix",
    "semi_primary_decompose",
    "solve",
    "boson_mode",
    "check_commutator",
    "check_commutator_grid",
    "p_mode",
    "vertex_mode",
    "virasoro",
    "zero_mode",
    "DegreeResult",
    "RadicalCertificate",
    "commutant_basis",
    "degree",
    "degree_witness",
    "filtration_member",
    "j1_basis",
    "module_zero_mode_matrix",
    "oinfinity_member",
    "radical_decompose",
    "radical_member",
    "tensor_factor_dim_check",
]
