"""Seeded property suites comparing the Kähler side with the complex side.

Each suite runs ``trials`` independent trials; trial ``t`` draws from
``numpy.random.default_rng(seed + t)`` so a single trial can be replayed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import realmat as rm
from .bell import apply_kraus, apply_local_unitary, kraus_completeness_error
from .compose import diagram_check, j_bilinearity_check, symp_tensor_state
from .cspace import ComplexOp, adjoint, ckron, cmul, identity, inner
from .kahler import (
    apply_j,
    complex_structure,
    complexify_op,
    complexify_state,
    kahler_pauli,
    metric,
    realify_op,
    realify_state,
    symplectic_form,
)

MAX_DIM = 4


@dataclass(frozen=True)
class Report:
    suite: str
    trials: int
    max_abs_error: float
    tolerance: float
    seed: int
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.max_abs_error <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "max_abs_error": self.max_abs_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def line(self) -> str:
        d = self.to_dict()
        d["max_abs_error"] = f"{self.max_abs_error:.15g}"
        d["tolerance"] = f"{self.tolerance:.15g}"
        d["pass"] = str(self.passed).lower()
        return " ".join(f"{k}={v}" for k, v in d.items())


# Random objects -----------------------------------------------------------------

def random_op(rng: np.random.Generator, n: int) -> ComplexOp:
    return ComplexOp(rng.standard_normal((n, n)), rng.standard_normal((n, n)))


def random_state(rng: np.random.Generator, n: int) -> ComplexOp:
    re, im = rng.standard_normal((n, 1)), rng.standard_normal((n, 1))
    scale = np.sqrt(np.sum(re**2) + np.sum(im**2))
    return ComplexOp(re / scale, im / scale)


def random_unitary(rng: np.random.Generator, n: int) -> ComplexOp:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return ComplexOp(q.real.copy(), q.imag.copy())


def random_density(rng: np.random.Generator, n: int) -> ComplexOp:
    g = random_op(rng, n)
    rho = cmul(g, adjoint(g))
    tr = float(np.trace(rho.re))
    return rho.scaled(1 / tr)


def random_kraus(rng: np.random.Generator, n: int, count: int) -> list[ComplexOp]:
    """``count`` Kraus operators cut from a random ``count*n x n`` isometry."""
    z = rng.standard_normal((count * n, n)) + 1j * rng.standard_normal((count * n, n))
    q, _ = np.linalg.qr(z)
    return [ComplexOp(q[i * n:(i + 1) * n].real.copy(), q[i * n:(i + 1) * n].imag.copy())
            for i in range(count)]


def _dim(rng: np.random.Generator) -> int:
    return int(rng.integers(1, MAX_DIM + 1))


# Trials ---------------------------------------------------------------------------

def trial_bijection(rng: np.random.Generator) -> float:
    n = _dim(rng)
    op = random_op(rng, n)
    forward = complexify_op(realify_op(op)).max_abs_diff(op)
    k = realify_op(random_op(rng, n))
    backward = rm.max_abs_diff(realify_op(complexify_op(k)).mat, k.mat)
    psi = random_state(rng, n)
    state = complexify_state(realify_state(psi)).max_abs_diff(psi)
    return max(forward, backward, state)


def trial_homomorphism(rng: np.random.Generator) -> float:
    n = _dim(rng)
    a, b = random_op(rng, n), random_op(rng, n)
    ka, kb = realify_op(a), realify_op(b)
    up = rm.max_abs_diff(realify_op(cmul(a, b)).mat, (ka @ kb).mat)
    down = complexify_op(ka @ kb).max_abs_diff(cmul(complexify_op(ka), complexify_op(kb)))
    return max(up, down)


def trial_diagram(rng: np.random.Generator) -> float:
    na, nb = _dim(rng), _dim(rng)
    ops = diagram_check(random_op(rng, na), random_op(rng, nb))
    pa, pb = random_state(rng, na), random_state(rng, nb)
    composed = symp_tensor_state(realify_state(pa), realify_state(pb))
    states = rm.max_abs_diff(composed.mat, realify_state(ckron(pa, pb)).mat)
    return max(ops, states)


def trial_kahler_forms(rng: np.random.Generator) -> float:
    n = _dim(rng)
    p2, p1 = random_state(rng, n), random_state(rng, n)
    x, y = realify_state(p2), realify_state(p1)
    re, im = inner(p2, p1)
    j = complex_structure(n).mat
    errs = [
        abs(metric(x, y) - symplectic_form(x, apply_j(y))),
        abs(symplectic_form(apply_j(x), apply_j(y)) - symplectic_form(x, y)),
        abs(metric(x, y) - re),
        abs(symplectic_form(x, y) - im),
        rm.max_abs_diff(j @ j, -np.eye(2 * n)),
    ]
    return max(errs)


def trial_pauli_algebra(rng: np.random.Generator) -> float:
    sx, sy, sz = (kahler_pauli(a).mat for a in "xyz")
    j = complex_structure(2).mat
    errs = [rm.max_abs_diff(sx @ sy, j @ sz)]
    paulis = {"x": sx, "y": sy, "z": sz}
    for a, pa in paulis.items():
        for b, pb in paulis.items():
            target = 2 * np.eye(4) if a == b else np.zeros((4, 4))
            errs.append(rm.max_abs_diff(pa @ pb + pb @ pa, target))
    return max(errs)


def trial_j_bilinearity(rng: np.random.Generator) -> float:
    a = realify_op(random_op(rng, _dim(rng)))
    b = realify_op(random_op(rng, _dim(rng)))
    return j_bilinearity_check(a, b)


def trial_local_maps(rng: np.random.Generator) -> float:
    na, nb = _dim(rng), _dim(rng)
    side = "A" if rng.integers(2) == 0 else "B"
    local_dim = na if side == "A" else nb

    def lift(op: ComplexOp) -> ComplexOp:
        return ckron(op, identity(nb)) if side == "A" else ckron(identity(na), op)

    u = random_unitary(rng, local_dim)
    psi = random_state(rng, na * nb)
    got = complexify_state(apply_local_unitary(realify_state(psi), u, side))
    errs = [got.max_abs_diff(cmul(lift(u), psi))]

    rho = random_density(rng, na * nb)
    got_rho = complexify_op(apply_local_unitary(realify_op(rho), u, side))
    want_rho = cmul(cmul(lift(u), rho), adjoint(lift(u)))
    errs.append(got_rho.max_abs_diff(want_rho))

    kraus = random_kraus(rng, local_dim, int(rng.integers(1, 4)))
    errs.append(kraus_completeness_error(kraus))
    out = complexify_op(apply_kraus(realify_op(rho), kraus, side))
    want = ComplexOp.real(np.zeros(rho.shape))
    for m in kraus:
        want = want + cmul(cmul(lift(m), rho), adjoint(lift(m)))
    errs.append(out.max_abs_diff(want))
    errs.append(abs(float(np.trace(out.re)) - 1.0))
    return max(errs)


SUITES = {
    "bijection": trial_bijection,
    "homomorphism": trial_homomorphism,
    "diagram": trial_diagram,
    "kahler-forms": trial_kahler_forms,
    "pauli-algebra": trial_pauli_algebra,
    "j-bilinearity": trial_j_bilinearity,
    "local-maps": trial_local_maps,
}
SUITE_NAMES = tuple(SUITES) + ("all",)
DEFAULT_TOL = 1e-10


def run_suite(name: str, trials: int = 1000, seed: int = 42, tol: float = DEFAULT_TOL) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    trial = SUITES[name]
    start = time.perf_counter()
    worst = 0.0
    for t in range(trials):
        worst = max(worst, trial(np.random.default_rng(seed + t)))
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return Report(name, trials, worst, tol, seed, elapsed)


def run_suites(name: str, trials: int = 1000, seed: int = 42, tol: float = DEFAULT_TOL) -> list[Report]:
    names = list(SUITES) if name == "all" else [name]
    return [run_suite(n, trials, seed, tol) for n in names]
