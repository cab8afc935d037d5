"""Bell functionals evaluated on the Kähler side.

CHSH with the Tsirelson-bound setting, the entanglement-swapping CHSH3
functional, and local unitary / Kraus maps, all in real arithmetic. The
complex side (:mod:`kahlerqm.cspace`) serves as the oracle.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import realmat as rm
from .compose import symp_tensor_op
from .cspace import (
    ALL_OUTCOMES,
    BellOutcome,
    ComplexOp,
    adjoint,
    bell_state,
    ckron,
    cmul,
    expectation,
    hermitian_2x2_eigenvalues,
    identity,
    is_hermitian,
    is_unitary,
    named_bell_state,
    pauli,
)
from .errors import DimensionError, ValidationError
from .kahler import (
    KahlerOp,
    KahlerState,
    kahler_identity,
    metric,
    realify_op,
    realify_state,
)

SQRT2 = math.sqrt(2.0)
TSIRELSON = 2 * SQRT2
CHSH3_QUANTUM_MAX = 6 * SQRT2
# Quoted for context only; neither bound is computed here.
CHSH3_LOCAL_BOUND = 6.0
CHSH3_REAL_KRONECKER_BOUND = 7.66


def _check_observable(op: ComplexOp, label: str) -> None:
    if op.shape != (2, 2) or not is_hermitian(op):
        raise ValidationError(f"{label} must be a Hermitian 2x2 operator")
    lo, hi = hermitian_2x2_eigenvalues(op)
    if lo < -1 - 1e-10 or hi > 1 + 1e-10:
        raise ValidationError(f"{label} has eigenvalues outside [-1, 1]: ({lo:.6g}, {hi:.6g})")


@dataclass(frozen=True, eq=False)
class ChshSetting:
    alice_ops: tuple[ComplexOp, ComplexOp]
    bob_ops: tuple[ComplexOp, ComplexOp]

    def __post_init__(self):
        for i, op in enumerate(self.alice_ops):
            _check_observable(op, f"A{i}")
        for i, op in enumerate(self.bob_ops):
            _check_observable(op, f"B{i}")


def tsirelson_setting() -> ChshSetting:
    """A0 = Z, A1 = X, B0 = -(X + Z)/sqrt2, B1 = (Z - X)/sqrt2."""
    x, z = pauli("x"), pauli("z")
    b0 = (x + z).scaled(-1 / SQRT2)
    b1 = (z - x).scaled(1 / SQRT2)
    return ChshSetting((z, x), (b0, b1))


# (a_idx, b_idx, sign) in the order C00, C10, C01, C11.
CHSH_TERMS = ((0, 0, 1), (1, 0, 1), (0, 1, -1), (1, 1, 1))


def chsh_operator(a_idx: int, b_idx: int, setting: ChshSetting) -> KahlerOp:
    return realify_op(ckron(setting.alice_ops[a_idx], setting.bob_ops[b_idx]))


def _check_two_qubit(state: KahlerState) -> None:
    if state.n != 4:
        raise DimensionError(f"expected a two-qubit Kähler state (8 x 2), got {state.mat.shape}")


def chsh_correlators(state: KahlerState, setting: ChshSetting) -> tuple[float, ...]:
    """Metric expectations of C00, C10, C01, C11."""
    _check_two_qubit(state)
    return tuple(
        metric(state, chsh_operator(a, b, setting) @ state) for a, b, _ in CHSH_TERMS
    )


def chsh_value(state: KahlerState, setting: ChshSetting | None = None) -> float:
    setting = setting or tsirelson_setting()
    values = chsh_correlators(state, setting)
    return sum(sign * v for (_, _, sign), v in zip(CHSH_TERMS, values))


# Charlie's six settings z = 1..6, each (i, j, sign) for (sigma_i + sign*sigma_j)/sqrt2.
CHARLIE_SETTINGS = (
    ("D", "z", "x"),
    ("E", "z", "x"),
    ("D", "z", "y"),
    ("E", "z", "y"),
    ("D", "x", "y"),
    ("E", "x", "y"),
)
# Alice's three settings x = 1..3.
ALICE_SETTINGS = ("z", "x", "y")


def charlie_observable(kind: str, i: str, j: str) -> ComplexOp:
    sign = 1 if kind == "D" else -1
    return (pauli(i) + pauli(j).scaled(sign)).scaled(1 / SQRT2)


def _signs(outcome: BellOutcome) -> tuple[int, int]:
    return (-1) ** outcome.b1, (-1) ** outcome.b2


def chsh3_terms(outcome) -> list[tuple[float, int, int]]:
    """``(coefficient, x, z)`` for the twelve ``S_xz`` terms of the functional.

    Indices are 1-based to match the setting labels.
    """
    s1, s2 = _signs(BellOutcome.parse(outcome))
    return [
        (s2, 1, 1), (s2, 1, 2),
        (s1, 2, 1), (-s1, 2, 2),
        (s2, 1, 3), (s2, 1, 4),
        (-s1 * s2, 3, 3), (s1 * s2, 3, 4),
        (s1, 2, 5), (s1, 2, 6),
        (-s1 * s2, 3, 5), (s1 * s2, 3, 6),
    ]


@dataclass(frozen=True, eq=False)
class Chsh3Setting:
    outcome: BellOutcome
    alice_ops: dict = field(default_factory=lambda: {a: pauli(a) for a in ALICE_SETTINGS})
    charlie_obs: dict = field(
        default_factory=lambda: {s: charlie_observable(*s) for s in CHARLIE_SETTINGS}
    )

    def alice(self, x: int) -> ComplexOp:
        return self.alice_ops[ALICE_SETTINGS[x - 1]]

    def charlie(self, z: int) -> ComplexOp:
        return self.charlie_obs[CHARLIE_SETTINGS[z - 1]]


def chsh3_setting(outcome) -> Chsh3Setting:
    return Chsh3Setting(BellOutcome.parse(outcome))


def chsh3_complex_operator(setting: Chsh3Setting) -> ComplexOp:
    """The functional's operator on C^2 ⊗ C^2 (Alice ⊗ Charlie)."""
    total = ComplexOp.real(np.zeros((4, 4)))
    for coeff, x, z in chsh3_terms(setting.outcome):
        total = total + ckron(setting.alice(x), setting.charlie(z)).scaled(coeff)
    return total


def chsh3_operator(setting: Chsh3Setting) -> KahlerOp:
    return realify_op(chsh3_complex_operator(setting))


def chsh3_operator_kahler(setting: Chsh3Setting) -> KahlerOp:
    """Same operator assembled from local Kähler operators with ⊗K only."""
    total = KahlerOp(np.zeros((8, 8)))
    for coeff, x, z in chsh3_terms(setting.outcome):
        term = symp_tensor_op(realify_op(setting.alice(x)), realify_op(setting.charlie(z)))
        total = total + term.scaled(coeff)
    return total


def chsh3_bracket(outcome) -> np.ndarray:
    """The 2x2 real matrix ``<s_b| T_b |s_b>_K`` before contraction."""
    setting = chsh3_setting(outcome)
    s = realify_state(bell_state(setting.outcome))
    return s.mat.T @ (chsh3_operator_kahler(setting) @ s).mat


def chsh3_value(outcome) -> float:
    setting = chsh3_setting(outcome)
    s = realify_state(bell_state(setting.outcome))
    return metric(s, chsh3_operator_kahler(setting) @ s)


def chsh3_oracle(outcome) -> float:
    """Complex-side ``<bell_b| T_b |bell_b>`` (real part; imaginary is zero)."""
    setting = chsh3_setting(outcome)
    re, im = expectation(bell_state(setting.outcome), chsh3_complex_operator(setting))
    if abs(im) > 1e-10:
        raise ValidationError(f"functional expectation has imaginary part {im:.3g}")
    return re


# Network oracle ------------------------------------------------------------

_PM = (1, -1)
_BOB_STATES = {b: bell_state(b) for b in ALL_OUTCOMES}


def _outcome_projector(obs: ComplexOp, sign: int) -> ComplexOp:
    return (identity(2) + obs.scaled(sign)).scaled(0.5)


def _ket_bra(psi: ComplexOp) -> ComplexOp:
    return cmul(psi, adjoint(psi))


@dataclass(frozen=True, eq=False)
class NetworkDistribution:
    """Joint table ``P(a, b, c | x, z)``.

    ``table`` has axes ``(a, b, c, x, z)`` with ``a, c`` indexed as
    ``(+1, -1)``, ``b`` in :data:`ALL_OUTCOMES` order, ``x`` in 1..3 and
    ``z`` in 1..6 (stored 0-based).
    """

    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=float)
        if t.shape != (2, 4, 2, 3, 6):
            raise DimensionError(f"table must have shape (2, 4, 2, 3, 6), got {t.shape}")
        if np.any(t < -1e-15):
            raise ValidationError("probabilities must be nonnegative")
        object.__setattr__(self, "table", t)

    def prob(self, a: int, b, c: int, x: int, z: int) -> float:
        bi = ALL_OUTCOMES.index(BellOutcome.parse(b))
        return float(self.table[_PM.index(a), bi, _PM.index(c), x - 1, z - 1])

    def normalization_error(self) -> float:
        return float(np.max(np.abs(self.table.sum(axis=(0, 1, 2)) - 1.0)))

    def outcome_probability(self, b, x: int = 1, z: int = 1) -> float:
        bi = ALL_OUTCOMES.index(BellOutcome.parse(b))
        return float(self.table[:, bi, :, x - 1, z - 1].sum())

    def correlator(self, b, x: int, z: int) -> float:
        """``S^b_xz = sum_{a,c} a c P(a, b, c | x, z)``."""
        bi = ALL_OUTCOMES.index(BellOutcome.parse(b))
        return sum(
            a * c * self.table[ai, bi, ci, x - 1, z - 1]
            for ai, a in enumerate(_PM)
            for ci, c in enumerate(_PM)
        )

    def rows(self):
        for (ai, a), b, (ci, c), x, z in itertools.product(
            enumerate(_PM), ALL_OUTCOMES, enumerate(_PM), range(1, 4), range(1, 7)
        ):
            yield a, str(b), c, x, z, float(self.table[ai, ALL_OUTCOMES.index(b), ci, x - 1, z - 1])

    def to_csv(self, stream=None) -> str | None:
        """Write ``a,b,c,x,z,p`` rows; returns the text when no stream is given."""
        out = stream if stream is not None else io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["a", "b", "c", "x", "z", "p"])
        for a, b, c, x, z, p in self.rows():
            w.writerow([a, b, c, x, z, f"{p:.15g}"])
        return None if stream is not None else out.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "NetworkDistribution":
        table = np.zeros((2, 4, 2, 3, 6))
        for row in csv.DictReader(io.StringIO(text)):
            b = ALL_OUTCOMES.index(BellOutcome.parse(row["b"]))
            table[_PM.index(int(row["a"])), b, _PM.index(int(row["c"])),
                  int(row["x"]) - 1, int(row["z"]) - 1] = float(row["p"])
        return cls(table)


def network_distribution() -> NetworkDistribution:
    """Entanglement-swapping statistics from two phi+ sources.

    Qubits are ordered (A, B1, B2, C); Bob projects (B1, B2) onto the Bell
    basis, Alice and Charlie make +/-1 projective measurements.
    """
    phi = named_bell_state("phi+")
    psi = ckron(phi, phi)
    setting = chsh3_setting("00")
    table = np.zeros((2, 4, 2, 3, 6))
    bob = [_ket_bra(_BOB_STATES[b]) for b in ALL_OUTCOMES]
    for x, z in itertools.product(range(1, 4), range(1, 7)):
        for (ai, a), (ci, c) in itertools.product(enumerate(_PM), repeat=2):
            pa = _outcome_projector(setting.alice(x), a)
            pc = _outcome_projector(setting.charlie(z), c)
            for bi, qb in enumerate(bob):
                proj = ckron(ckron(pa, qb), pc)
                table[ai, bi, ci, x - 1, z - 1] = expectation(psi, proj)[0]
    return NetworkDistribution(table)


def chsh3_functional(dist: NetworkDistribution, outcome) -> float:
    return sum(coeff * dist.correlator(outcome, x, z) for coeff, x, z in chsh3_terms(outcome))


def chsh_sub_functionals(dist: NetworkDistribution, outcome) -> tuple[float, float, float]:
    """The three CHSH blocks (settings 1-2, 3-4, 5-6 of Charlie)."""
    terms = chsh3_terms(outcome)
    groups = ([0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11])
    return tuple(
        sum(terms[i][0] * dist.correlator(outcome, terms[i][1], terms[i][2]) for i in g)
        for g in groups
    )


# Local maps -----------------------------------------------------------------

def _local_lift(u_k: KahlerOp, side: str, other: int) -> KahlerOp:
    eye = kahler_identity(other)
    if side == "A":
        return symp_tensor_op(u_k, eye)
    if side == "B":
        return symp_tensor_op(eye, u_k)
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")


def _other_dim(total: int, local: int) -> int:
    if total % local:
        raise DimensionError(f"composite dimension {total} is not divisible by local dimension {local}")
    return total // local


def apply_local_unitary(target, u: ComplexOp, side: str = "A"):
    """Apply ``U`` to one subsystem of a Kähler state or density operator.

    States transform as ``(U^K ⊗K I^K) s``; operators as
    ``(U^K ⊗K I^K) rho (U^K ⊗K I^K)^T``, the transpose being the Kähler
    image of the adjoint.
    """
    if not is_unitary(u):
        raise ValidationError("operator is not unitary within 1e-10")
    lift = _local_lift(realify_op(u), side, _other_dim(target.n, u.shape[0]))
    if isinstance(target, KahlerState):
        return lift @ target
    if isinstance(target, KahlerOp):
        return lift @ target @ lift.T
    raise TypeError(f"expected KahlerState or KahlerOp, got {type(target).__name__}")


def kraus_completeness_error(kraus: list[ComplexOp]) -> float:
    """``max |sum M_i^K^T M_i^K - I|`` computed on the Kähler side."""
    n = kraus[0].shape[0]
    acc = np.zeros((2 * n, 2 * n))
    for m in kraus:
        mk = realify_op(m).mat
        acc += mk.T @ mk
    return rm.max_abs_diff(acc, np.eye(2 * n))


def apply_kraus(rho: KahlerOp, kraus: list[ComplexOp], side: str = "A") -> KahlerOp:
    if not kraus:
        raise ValidationError("empty Kraus set")
    if kraus_completeness_error(kraus) > 1e-10:
        raise ValidationError("Kraus operators do not satisfy sum M^dagger M = I within 1e-10")
    other = _other_dim(rho.n, kraus[0].shape[0])
    out = KahlerOp(np.zeros_like(rho.mat))
    for m in kraus:
        lift = _local_lift(realify_op(m), side, other)
        out = out + lift @ rho @ lift.T
    return out


def depolarizing_kraus(p: float) -> list[ComplexOp]:
    q = math.sqrt(p / 3)
    return [identity(2).scaled(math.sqrt(1 - p))] + [pauli(a).scaled(q) for a in "xyz"]


# Obstruction demo -------------------------------------------------------------

def real_symmetric_obstruction(steps: int = 72, tol: float = 1e-9) -> dict:
    """Grid search over real symmetric 2x2 involutions.

    Enumerates ``X = ±I`` and reflections ``[[cos t, sin t], [sin t, -cos t]]``
    on ``steps`` angles, keeps anticommuting pairs and records whether any
    pair has a nonzero symmetric product. Returns counts and the largest
    symmetric part of ``XY`` among anticommuting pairs.
    """
    mats = [np.eye(2), -np.eye(2)]
    for t in np.linspace(0, 2 * np.pi, steps, endpoint=False):
        mats.append(np.array([[np.cos(t), np.sin(t)], [np.sin(t), -np.cos(t)]]))
    anticommuting = 0
    symmetric_hits = 0
    worst_sym = 0.0
    for x, y in itertools.product(mats, repeat=2):
        if np.max(np.abs(x @ y + y @ x)) > tol:
            continue
        anticommuting += 1
        prod = x @ y
        sym = 0.5 * (prod + prod.T)
        worst_sym = max(worst_sym, float(np.max(np.abs(sym))))
        if np.max(np.abs(sym)) > tol and np.max(np.abs(prod - prod.T)) <= tol:
            symmetric_hits += 1
    return {
        "candidates": len(mats),
        "anticommuting_pairs": anticommuting,
        "symmetric_product_pairs": symmetric_hits,
        "max_symmetric_part": worst_sym,
    }
