"""Composition rules on doubled spaces.

``symp_tensor_op`` / ``symp_tensor_state`` implement the symplectic tensor
product by block extraction; they never route through complexification,
so :func:`diagram_check` compares two independent computations.
``kron_doubled`` is the plain Kronecker product of doubled matrices, kept
as the contrast case.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import realmat as rm
from .cspace import ComplexOp, ckron
from .errors import StructureError
from .kahler import (
    KahlerOp,
    KahlerState,
    complex_structure,
    complexify_op,
    is_kahler_block,
    realify_op,
)

BLOCK_TOL = 1e-10


def _parts(a: KahlerOp) -> tuple[np.ndarray, np.ndarray]:
    if not is_kahler_block(a.mat, BLOCK_TOL):
        raise StructureError(
            "symplectic tensor product is defined only on realified operators "
            "(block form [[X, -Y], [Y, X]])"
        )
    a11, _, a21, _ = a.blocks()
    return a11, a21


def _compose(xa, ya, xb, yb) -> np.ndarray:
    re = rm.kron(xa, xb) - rm.kron(ya, yb)
    im = rm.kron(xa, yb) + rm.kron(ya, xb)
    return rm.kron(rm.I2, re) + rm.kron(rm.TAU, im)


def symp_tensor_op(a: KahlerOp, b: KahlerOp) -> KahlerOp:
    xa, ya = _parts(a)
    xb, yb = _parts(b)
    return KahlerOp(_compose(xa, ya, xb, yb))


def symp_tensor_state(a: KahlerState, b: KahlerState) -> KahlerState:
    a.check_pairing()
    b.check_pairing()
    na, nb = a.n, b.n
    xa, ya = a.mat[:na, :1], a.mat[na:, :1]
    xb, yb = b.mat[:nb, :1], b.mat[nb:, :1]
    re = rm.kron(xa, xb) - rm.kron(ya, yb)
    im = rm.kron(xa, yb) + rm.kron(ya, xb)
    return KahlerState(np.block([[re, -im], [im, re]]))


def kron_doubled(a: KahlerOp, b: KahlerOp) -> np.ndarray:
    """Kronecker product of the doubled matrices (side ``4 N_A N_B``)."""
    return rm.kron(a.mat, b.mat)


def diagram_check(la: ComplexOp, lb: ComplexOp) -> float:
    """Largest deviation around the commutative square, in both directions."""
    ka, kb = realify_op(la), realify_op(lb)
    composite = symp_tensor_op(ka, kb)
    up = rm.max_abs_diff(realify_op(ckron(la, lb)).mat, composite.mat)
    down = complexify_op(composite).max_abs_diff(ckron(complexify_op(ka), complexify_op(kb)))
    return max(up, down)


def j_bilinearity_check(a: KahlerOp, b: KahlerOp) -> float:
    """Deviation among ``(J a) ⊗K b``, ``a ⊗K (J b)`` and ``J_AB (a ⊗K b)``."""
    ja = complex_structure(a.n) @ a
    jb = complex_structure(b.n) @ b
    left = symp_tensor_op(ja, b).mat
    right = symp_tensor_op(a, jb).mat
    joint = (complex_structure(a.n * b.n) @ symp_tensor_op(a, b)).mat
    return max(
        rm.max_abs_diff(left, right),
        rm.max_abs_diff(left, joint),
        rm.max_abs_diff(right, joint),
    )


def kron_j_mismatch(a: KahlerOp, b: KahlerOp) -> float:
    """``|(J_A ⊗ I)(a ⊗ b) - (I ⊗ J_B)(a ⊗ b)|_max`` for the plain Kronecker rule."""
    ab = kron_doubled(a, b)
    eye_a, eye_b = np.eye(2 * a.n), np.eye(2 * b.n)
    left = rm.kron(complex_structure(a.n).mat, eye_b) @ ab
    right = rm.kron(eye_a, complex_structure(b.n).mat) @ ab
    return rm.max_abs_diff(left, right)


@dataclass(frozen=True)
class CompositionReport:
    """Side-by-side facts about the two composites of a pair of operators.

    The Kronecker-path and symplectic-path objects live in spaces of
    different dimension, so they are compared structurally rather than by
    a norm of their difference.
    """

    dim_symplectic: int
    dim_kronecker: int
    block_form_symplectic: bool
    block_form_kronecker: bool
    diagram_error: float

    def to_dict(self) -> dict:
        return asdict(self)


def renou_divergence(rho_a: ComplexOp, rho_b: ComplexOp) -> CompositionReport:
    ka, kb = realify_op(rho_a), realify_op(rho_b)
    symplectic = symp_tensor_op(ka, kb)
    kronecker = kron_doubled(ka, kb)
    return CompositionReport(
        dim_symplectic=symplectic.mat.shape[0],
        dim_kronecker=kronecker.shape[0],
        block_form_symplectic=is_kahler_block(symplectic.mat, BLOCK_TOL),
        block_form_kronecker=is_kahler_block(kronecker, BLOCK_TOL),
        diagram_error=diagram_check(rho_a, rho_b),
    )


def composite_dims(m: int, n: int) -> tuple[int, int]:
    """``(4mn, 2mn)``: Kronecker-doubled side vs symplectic side."""
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    return 4 * m * n, 2 * m * n
