"""Dense real-matrix substrate.

Every object on the Kähler side is a plain ``float64`` numpy array. This
module holds the named constants, the Kronecker product, the tensor
contraction over the first Kronecker factor and the tolerance predicate
shared by the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

I2 = np.eye(2)
TAU = np.array([[0.0, -1.0], [1.0, 0.0]])
TAU.setflags(write=False)
I2.setflags(write=False)


def as_real(m) -> np.ndarray:
    """Coerce to a finite 2-D float64 array."""
    a = np.asarray(m, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2 or a.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product; the left factor indexes the coarse blocks."""
    return np.kron(as_real(a), as_real(b))


@dataclass(frozen=True)
class Shape2:
    """An (n*m) x (n*k) matrix viewed as an n x n grid of m x k blocks."""

    block_count: int
    inner_rows: int
    inner_cols: int

    def __post_init__(self):
        if min(self.block_count, self.inner_rows, self.inner_cols) < 1:
            raise DimensionError(f"Shape2 fields must be positive: {self}")

    @property
    def outer(self) -> tuple[int, int]:
        return (self.block_count * self.inner_rows, self.block_count * self.inner_cols)


def tc_contract(m, shape: Shape2) -> np.ndarray:
    """Tensor contraction over the first factor: sum of the diagonal blocks.

    For ``m = kron(A, C)`` with ``A`` square this is ``trace(A) * C``; ``C``
    may be rectangular, so the same routine serves operators (N x N blocks)
    and Kähler states (N x 1 blocks).
    """
    m = as_real(m)
    if m.shape != shape.outer:
        raise DimensionError(f"matrix shape {m.shape} does not match block view {shape.outer}")
    r, c = shape.inner_rows, shape.inner_cols
    out = np.zeros((r, c))
    for i in range(shape.block_count):
        out += m[i * r:(i + 1) * r, i * c:(i + 1) * c]
    return out


def matmul(a, b) -> np.ndarray:
    a, b = as_real(a), as_real(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def add(a, b) -> np.ndarray:
    a, b = as_real(a), as_real(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot add {a.shape} and {b.shape}")
    return a + b


def scale(alpha: float, a) -> np.ndarray:
    return float(alpha) * as_real(a)


def transpose(a) -> np.ndarray:
    return as_real(a).T.copy()


def trace(a) -> float:
    a = as_real(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"trace of non-square matrix {a.shape}")
    return float(np.trace(a))


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(as_real(a)))


def approx_eq(a, b, tol: float) -> bool:
    """Max-abs difference within ``tol * max(1, |a|_F, |b|_F)``."""
    a, b = as_real(a), as_real(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare {a.shape} with {b.shape}")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    bound = tol * max(1.0, frobenius_norm(a), frobenius_norm(b))
    return float(np.max(np.abs(a - b))) <= bound


def max_abs_diff(a, b) -> float:
    a, b = as_real(a), as_real(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare {a.shape} with {b.shape}")
    return float(np.max(np.abs(a - b)))


def random_complex_op(n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Seeded i.i.d. standard-normal real and imaginary parts, each n x n."""
    if n < 1:
        raise DimensionError("n must be >= 1")
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)), rng.standard_normal((n, n))
