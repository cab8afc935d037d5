"""Quantum mechanics over the reals on Kähler space.

Complex operators are carried as real block matrices ``[[X, -Y], [Y, X]]``,
composite systems are built with the symplectic tensor product, and every
result can be checked against the complex-arithmetic formulation.
"""

from .cspace import BellOutcome, ComplexOp, bell_state, ckron, cmul, pauli
from .errors import DimensionError, StructureError, ValidationError
from .kahler import (
    KahlerOp,
    KahlerState,
    complex_structure,
    complexify_op,
    complexify_state,
    kahler_pauli,
    metric,
    realify_op,
    realify_state,
    symplectic_form,
)
from .compose import kron_doubled, symp_tensor_op, symp_tensor_state

__version__ = "0.1.0"

__all__ = [
    "BellOutcome", "ComplexOp", "bell_state", "ckron", "cmul", "pauli",
    "DimensionError", "StructureError", "ValidationError",
    "KahlerOp", "KahlerState", "complex_structure", "complexify_op", "complexify_state",
    "kahler_pauli", "metric", "realify_op", "realify_state", "symplectic_form",
    "kron_doubled", "symp_tensor_op", "symp_tensor_state",
]
