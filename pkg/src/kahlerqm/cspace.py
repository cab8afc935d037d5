"""Complex Hilbert space side, stored as pairs of real matrices.

This is both the standard-QM implementation and the oracle the Kähler
side is checked against. No native complex dtype is used anywhere; a
complex operator ``X + iY`` is ``ComplexOp(re=X, im=Y)`` and a ket is a
``ComplexOp`` with a single column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import realmat as rm
from .errors import DimensionError


@dataclass(frozen=True, eq=False)
class ComplexOp:
    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        re = rm.as_real(self.re)
        im = np.zeros_like(re) if self.im is None else rm.as_real(self.im)
        if re.shape != im.shape:
            raise DimensionError(f"re {re.shape} and im {im.shape} differ in shape")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def real(cls, x) -> "ComplexOp":
        x = rm.as_real(x)
        return cls(x, np.zeros_like(x))

    @property
    def shape(self) -> tuple[int, int]:
        return self.re.shape

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __add__(self, other: "ComplexOp") -> "ComplexOp":
        return ComplexOp(rm.add(self.re, other.re), rm.add(self.im, other.im))

    def __sub__(self, other: "ComplexOp") -> "ComplexOp":
        return ComplexOp(rm.add(self.re, -other.re), rm.add(self.im, -other.im))

    def __neg__(self) -> "ComplexOp":
        return ComplexOp(-self.re, -self.im)

    def __matmul__(self, other: "ComplexOp") -> "ComplexOp":
        return cmul(self, other)

    def scaled(self, alpha: float) -> "ComplexOp":
        """Multiply by a real scalar."""
        return ComplexOp(alpha * self.re, alpha * self.im)

    def times_i(self) -> "ComplexOp":
        return ComplexOp(-self.im, self.re.copy())

    def allclose(self, other: "ComplexOp", tol: float = 1e-10) -> bool:
        return rm.approx_eq(self.re, other.re, tol) and rm.approx_eq(self.im, other.im, tol)

    def max_abs_diff(self, other: "ComplexOp") -> float:
        return max(rm.max_abs_diff(self.re, other.re), rm.max_abs_diff(self.im, other.im))


def identity(n: int) -> ComplexOp:
    return ComplexOp.real(np.eye(n))


def cmul(a: ComplexOp, b: ComplexOp) -> ComplexOp:
    re = rm.matmul(a.re, b.re) - rm.matmul(a.im, b.im)
    im = rm.matmul(a.re, b.im) + rm.matmul(a.im, b.re)
    return ComplexOp(re, im)


def adjoint(a: ComplexOp) -> ComplexOp:
    return ComplexOp(a.re.T.copy(), -a.im.T)


def ckron(a: ComplexOp, b: ComplexOp) -> ComplexOp:
    """Complex Kronecker product expanded into four real Kronecker terms."""
    re = rm.kron(a.re, b.re) - rm.kron(a.im, b.im)
    im = rm.kron(a.re, b.im) + rm.kron(a.im, b.re)
    return ComplexOp(re, im)


def inner(a: ComplexOp, b: ComplexOp) -> tuple[float, float]:
    """``<a|b>`` as ``(Re, Im)``, conjugate-linear in ``a``."""
    if a.shape[1] != 1 or b.shape[1] != 1 or a.shape != b.shape:
        raise DimensionError(f"inner product needs equal-length columns, got {a.shape}, {b.shape}")
    r2, i2 = a.re[:, 0], a.im[:, 0]
    r1, i1 = b.re[:, 0], b.im[:, 0]
    return float(r2 @ r1 + i2 @ i1), float(r2 @ i1 - i2 @ r1)


def expectation(state: ComplexOp, op: ComplexOp) -> tuple[float, float]:
    return inner(state, cmul(op, state))


def norm(state: ComplexOp) -> float:
    return math.sqrt(inner(state, state)[0])


def is_hermitian(a: ComplexOp, tol: float = 1e-10) -> bool:
    return a.is_square and a.allclose(adjoint(a), tol)


def is_unitary(u: ComplexOp, tol: float = 1e-10) -> bool:
    if not u.is_square:
        return False
    return cmul(adjoint(u), u).allclose(identity(u.shape[0]), tol)


def hermitian_2x2_eigenvalues(a: ComplexOp) -> tuple[float, float]:
    """Closed-form spectrum of a Hermitian 2x2 matrix, ascending."""
    if a.shape != (2, 2):
        raise DimensionError("expected a 2x2 operator")
    p, q = a.re[0, 0], a.re[1, 1]
    off2 = a.re[0, 1] ** 2 + a.im[0, 1] ** 2
    mid, half = (p + q) / 2, math.sqrt(((p - q) / 2) ** 2 + off2)
    return mid - half, mid + half


_PAULI = {
    "x": ComplexOp(np.array([[0.0, 1.0], [1.0, 0.0]]), np.zeros((2, 2))),
    "y": ComplexOp(np.zeros((2, 2)), rm.TAU.copy()),
    "z": ComplexOp(np.array([[1.0, 0.0], [0.0, -1.0]]), np.zeros((2, 2))),
}


def pauli(axis: str) -> ComplexOp:
    try:
        p = _PAULI[axis]
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}; expected x, y or z") from None
    return ComplexOp(p.re.copy(), p.im.copy())


class BellOutcome(NamedTuple):
    """Bob's two-bit Bell-measurement outcome ``b1 b2``."""

    b1: int
    b2: int

    @classmethod
    def parse(cls, value) -> "BellOutcome":
        if isinstance(value, BellOutcome):
            return value
        if isinstance(value, str):
            if len(value) != 2 or any(ch not in "01" for ch in value):
                raise ValueError(f"Bell outcome must be one of 00, 01, 10, 11; got {value!r}")
            return cls(int(value[0]), int(value[1]))
        b1, b2 = value
        if b1 not in (0, 1) or b2 not in (0, 1):
            raise ValueError(f"Bell outcome bits must be 0 or 1; got {value!r}")
        return cls(int(b1), int(b2))

    def __str__(self) -> str:
        return f"{self.b1}{self.b2}"


ALL_OUTCOMES = tuple(BellOutcome(b1, b2) for b1 in (0, 1) for b2 in (0, 1))

_S = 1 / math.sqrt(2)
# Amplitudes over |00>, |01>, |10>, |11>; psi± = (|10> ± |01>)/sqrt(2).
BELL_VECTORS = {
    "phi+": (_S, 0.0, 0.0, _S),
    "phi-": (_S, 0.0, 0.0, -_S),
    "psi+": (0.0, _S, _S, 0.0),
    "psi-": (0.0, -_S, _S, 0.0),
}

# Outcome label -> Bell state. 00 must pair with phi+ (the state on which the
# b=00 functional reaches 6*sqrt(2)); the remaining labels follow from requiring
# each sign-adapted functional to reach the same maximum on its own state.
OUTCOME_STATES = {
    BellOutcome(0, 0): "phi+",
    BellOutcome(0, 1): "psi+",
    BellOutcome(1, 0): "phi-",
    BellOutcome(1, 1): "psi-",
}

# The alternative ordering {phi-, psi-, phi+, psi+}; kept so the mismatch it
# produces can be demonstrated, never used for evaluation.
LISTED_OUTCOME_STATES = {
    BellOutcome(0, 0): "phi-",
    BellOutcome(0, 1): "psi-",
    BellOutcome(1, 0): "phi+",
    BellOutcome(1, 1): "psi+",
}


def named_bell_state(name: str) -> ComplexOp:
    return ComplexOp.real(np.array(BELL_VECTORS[name]).reshape(4, 1))


def bell_state(b, ordering: dict | None = None) -> ComplexOp:
    outcome = BellOutcome.parse(b)
    return named_bell_state((ordering or OUTCOME_STATES)[outcome])


def basis_state(index: int, dim: int) -> ComplexOp:
    v = np.zeros((dim, 1))
    v[index, 0] = 1.0
    return ComplexOp.real(v)
