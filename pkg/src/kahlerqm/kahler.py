"""Kähler space ``(R^{2N}, g, omega, J)`` and the maps between it and C^N.

Realification sends ``X + iY`` to the real block matrix ``[[X, -Y], [Y, X]]``
(``I2 ⊗ X + tau ⊗ Y``); complexification undoes it by tensor contraction.
Everything in this module is real arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import realmat as rm
from .cspace import ComplexOp, pauli
from .errors import DimensionError, StructureError


@dataclass(frozen=True, eq=False)
class KahlerOp:
    """A real ``2N x 2N`` operator on Kähler space."""

    mat: np.ndarray

    def __post_init__(self):
        m = rm.as_real(self.mat)
        if m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise DimensionError(f"Kähler operator must be square of even side, got {m.shape}")
        object.__setattr__(self, "mat", m)

    @property
    def n(self) -> int:
        return self.mat.shape[0] // 2

    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        n = self.n
        m = self.mat
        return m[:n, :n], m[:n, n:], m[n:, :n], m[n:, n:]

    def __matmul__(self, other):
        if isinstance(other, KahlerOp):
            return KahlerOp(rm.matmul(self.mat, other.mat))
        if isinstance(other, KahlerState):
            return KahlerState(rm.matmul(self.mat, other.mat))
        return NotImplemented

    def __add__(self, other: "KahlerOp") -> "KahlerOp":
        return KahlerOp(rm.add(self.mat, other.mat))

    def __sub__(self, other: "KahlerOp") -> "KahlerOp":
        return KahlerOp(rm.add(self.mat, -other.mat))

    def __neg__(self) -> "KahlerOp":
        return KahlerOp(-self.mat)

    def scaled(self, alpha: float) -> "KahlerOp":
        return KahlerOp(rm.scale(alpha, self.mat))

    @property
    def T(self) -> "KahlerOp":
        return KahlerOp(self.mat.T.copy())


@dataclass(frozen=True, eq=False)
class KahlerState:
    """A ket as a real ``2N x 2`` matrix with columns ``(R; I)`` and ``(-I; R)``."""

    mat: np.ndarray

    def __post_init__(self):
        m = rm.as_real(self.mat)
        if m.shape[1] != 2 or m.shape[0] % 2:
            raise DimensionError(f"Kähler state must be 2N x 2, got {m.shape}")
        object.__setattr__(self, "mat", m)

    @property
    def n(self) -> int:
        return self.mat.shape[0] // 2

    def check_pairing(self, tol: float = 1e-10) -> None:
        n = self.n
        r, i = self.mat[:n, 0], self.mat[n:, 0]
        expected = np.concatenate([-i, r]).reshape(-1, 1)
        if not rm.approx_eq(self.mat[:, 1:], expected, tol):
            raise StructureError("second column is not (-I; R) of the first column (R; I)")


def complex_structure(n: int) -> KahlerOp:
    """``J = tau ⊗ I_n``."""
    if n < 1:
        raise DimensionError("n must be >= 1")
    return KahlerOp(rm.kron(rm.TAU, np.eye(n)))


def realify_op(op: ComplexOp) -> KahlerOp:
    if not op.is_square:
        raise DimensionError(f"realification needs a square operator, got {op.shape}")
    x, y = op.re, op.im
    return KahlerOp(np.block([[x, -y], [y, x]]))


def realify_state(psi: ComplexOp) -> KahlerState:
    if psi.shape[1] != 1:
        raise DimensionError(f"state must be a single column, got {psi.shape}")
    r, i = psi.re, psi.im
    return KahlerState(np.block([[r, -i], [i, r]]))


def complexify_op(k: KahlerOp | np.ndarray) -> ComplexOp:
    """Extract ``X + iY`` from a ``2N x 2N`` real matrix.

    Uses the evaluated contraction ``re = (A11 + A22)/2``,
    ``im = (A21 - A12)/2``. On block-form input this inverts
    ``realify_op`` exactly; on anything else it is the projection onto the
    block-form subspace.
    """
    if not isinstance(k, KahlerOp):
        k = KahlerOp(k)
    a11, a12, a21, a22 = k.blocks()
    return ComplexOp(0.5 * (a11 + a22), 0.5 * (a21 - a12))


def complexify_state(s: KahlerState, tol: float = 1e-10) -> ComplexOp:
    s.check_pairing(tol)
    n = s.n
    return ComplexOp(s.mat[:n, :1].copy(), s.mat[n:, :1].copy())


def bra_ket(s2: KahlerState, s1: KahlerState) -> np.ndarray:
    """The 2x2 real matrix ``<psi2|psi1>_K = s2^T s1``."""
    if s2.mat.shape != s1.mat.shape:
        raise DimensionError(f"states differ in shape: {s2.mat.shape} vs {s1.mat.shape}")
    return s2.mat.T @ s1.mat


_ONE_BLOCK = rm.Shape2(2, 1, 1)


def metric(s2: KahlerState, s1: KahlerState) -> float:
    """``g = Tc[<psi2|psi1>_K] / 2``; equals ``Re <psi2|psi1>``."""
    return 0.5 * float(rm.tc_contract(bra_ket(s2, s1), _ONE_BLOCK)[0, 0])


def symplectic_form(s2: KahlerState, s1: KahlerState) -> float:
    """``omega = Tc[-J <psi2|psi1>_K] / 2``; equals ``Im <psi2|psi1>``."""
    contracted = -complex_structure(1).mat @ bra_ket(s2, s1)
    return 0.5 * float(rm.tc_contract(contracted, _ONE_BLOCK)[0, 0])


def apply_j(s: KahlerState) -> KahlerState:
    return complex_structure(s.n) @ s


def kahler_pauli(axis: str) -> KahlerOp:
    if axis == "x":
        return KahlerOp(rm.kron(rm.I2, pauli("x").re))
    if axis == "y":
        return KahlerOp(rm.kron(rm.TAU, rm.TAU))
    if axis == "z":
        return KahlerOp(rm.kron(rm.I2, pauli("z").re))
    raise ValueError(f"unknown Pauli axis {axis!r}; expected x, y or z")


def kahler_identity(n: int) -> KahlerOp:
    return KahlerOp(np.eye(2 * n))


def is_kahler_block(m, tol: float = 1e-10) -> bool:
    """True iff ``A11 == A22`` and ``A12 == -A21`` within relative ``tol``."""
    m = rm.as_real(m.mat if isinstance(m, KahlerOp) else m)
    if m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise DimensionError(f"expected a square matrix of even side, got {m.shape}")
    a11, a12, a21, a22 = KahlerOp(m).blocks()
    scale = max(1.0, rm.frobenius_norm(m))
    return (
        float(np.max(np.abs(a11 - a22))) <= tol * scale
        and float(np.max(np.abs(a12 + a21))) <= tol * scale
    )


def complexify_op_literal(k: KahlerOp) -> ComplexOp:
    """Complexification written exactly as ``(Tc[L] + Tc[(-sigma_y ⊗ I) L]) / 2``.

    ``-sigma_y = -i tau`` so the second contraction is ``-i Tc[(tau ⊗ I) L]``.
    Kept separate from :func:`complexify_op` to cross-check the closed form.
    """
    n = k.n
    shape = rm.Shape2(2, n, n)
    first = rm.tc_contract(k.mat, shape)
    second = rm.tc_contract(rm.kron(rm.TAU, np.eye(n)) @ k.mat, shape)
    # -i * second contributes +0 real part and -second imaginary part.
    return ComplexOp(0.5 * first, -0.5 * second)
