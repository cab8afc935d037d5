"""Exit criteria, one test per criterion (criterion 7 split into its three parts).

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and when this file is run directly.
"""

import itertools
import math
import time

import numpy as np
import pytest

from kahlerqm.bell import (
    chsh3_bracket,
    chsh3_functional,
    chsh3_oracle,
    chsh3_value,
    chsh_correlators,
    chsh_value,
    kraus_completeness_error,
    network_distribution,
    tsirelson_setting,
)
from kahlerqm.cli import main
from kahlerqm.compose import j_bilinearity_check, kron_doubled, kron_j_mismatch
from kahlerqm.cspace import ALL_OUTCOMES, named_bell_state
from kahlerqm.kahler import complex_structure, is_kahler_block, kahler_identity, kahler_pauli, realify_op, realify_state
from kahlerqm.verify import random_kraus, random_op, run_suite

R2 = math.sqrt(2)
RESULTS: dict[str, list[tuple[bool, str]]] = {}


def record(key: str, ok: bool, detail: str) -> None:
    RESULTS.setdefault(key, []).append((bool(ok), detail))
    assert ok, detail


def summary_lines() -> list[str]:
    lines = []
    for key, parts in sorted(RESULTS.items()):
        ok = all(p[0] for p in parts)
        detail = "; ".join(("" if p[0] else "[FAILED] ") + p[1] for p in parts)
        lines.append(f"{'PASS' if ok else 'FAIL'} criterion {key}: {detail}")
    return lines


def test_criterion_1_chsh():
    start = time.perf_counter()
    s = realify_state(named_bell_state("psi-"))
    value = chsh_value(s, tsirelson_setting())
    corr = chsh_correlators(s, tsirelson_setting())
    elapsed = time.perf_counter() - start
    want = (1 / R2, 1 / R2, -1 / R2, 1 / R2)
    corr_err = max(abs(a - b) for a, b in zip(corr, want))
    ok = abs(value - 2 * R2) <= 1e-9 and corr_err <= 1e-10 and elapsed < 1.0
    record("1", ok, f"CHSH={value:.15g} |dev|={abs(value - 2 * R2):.2e} corr_err={corr_err:.2e} t={elapsed:.3f}s")


def test_criterion_2_chsh3_b00(capsys):
    start = time.perf_counter()
    value = chsh3_value("00")
    bracket = chsh3_bracket("00")
    elapsed = time.perf_counter() - start
    code = main(["chsh3", "--outcome", "00"])
    out = capsys.readouterr().out
    bracket_err = float(np.max(np.abs(bracket - 6 * R2 * np.eye(2))))
    ok = (abs(value - 6 * R2) <= 1e-9 and bracket_err <= 1e-9 and elapsed < 1.0
          and code == 0 and "value=8.48528137423857" in out)
    record("2", ok, f"CHSH3(00)={value:.15g} bracket_err={bracket_err:.2e} t={elapsed:.3f}s")


@pytest.mark.parametrize("b", ["01", "10", "11"])
def test_criterion_3_chsh3_other_outcomes(b):
    value, oracle = chsh3_value(b), chsh3_oracle(b)
    ok = abs(value - oracle) <= 1e-10 and abs(oracle - 6 * R2) <= 1e-9
    record("3", ok, f"b={b} kahler={value:.15g} oracle={oracle:.15g}")


def test_criterion_4_isomorphism_suites():
    start = time.perf_counter()
    reports = [run_suite(name, trials=1000, seed=42, tol=1e-10)
               for name in ("bijection", "homomorphism", "diagram")]
    elapsed = time.perf_counter() - start
    worst = max(r.max_abs_error for r in reports)
    ok = all(r.passed and r.max_abs_error < 1e-10 for r in reports) and elapsed < 30
    record("4", ok, " ".join(f"{r.suite}={r.max_abs_error:.2e}" for r in reports)
           + f" worst={worst:.2e} t={elapsed:.2f}s")


def test_criterion_5_kahler_structure():
    exact = all(np.array_equal(complex_structure(n).mat @ complex_structure(n).mat, -np.eye(2 * n))
                for n in range(1, 9))
    rep = run_suite("kahler-forms", trials=1000, seed=42, tol=1e-10)
    record("5", exact and rep.passed, f"J^2=-I exact={exact} forms_err={rep.max_abs_error:.2e}")


def test_criterion_6_pauli_algebra():
    sx, sy, sz = (kahler_pauli(a).mat for a in "xyz")
    j = complex_structure(2).mat
    ok = np.array_equal(sx @ sy, j @ sz)
    for (i, a), (k, b) in itertools.product(enumerate((sx, sy, sz)), repeat=2):
        ok = ok and np.array_equal(a @ b + b @ a, 2 * np.eye(4) if i == k else np.zeros((4, 4)))
    record("6", bool(ok), "sx sy = J sz and {sa, sb} = 2 delta I4 exactly")


def test_criterion_7a_dims(capsys):
    code = main(["dims", "2", "2"])
    out = capsys.readouterr().out
    record("7", code == 0 and "kronecker=16 symplectic=8" in out, "dims 2 2 -> 16 vs 8")


def test_criterion_7b_kron_fails_block_form():
    rng = np.random.default_rng(42)
    flags = []
    for _ in range(20):
        a, b = random_op(rng, 2), random_op(rng, 2)
        flags.append(is_kahler_block(kron_doubled(realify_op(a), realify_op(b))))
    y = kahler_pauli("y")
    flags.append(is_kahler_block(kron_doubled(y, y)))
    ok = not any(flags)
    record("7", ok, f"kron_doubled fails is_kahler_block: {sum(not f for f in flags)}/{len(flags)} inputs")


def test_criterion_7c_j_bilinearity():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        a = realify_op(random_op(rng, int(rng.integers(1, 5))))
        b = realify_op(random_op(rng, int(rng.integers(1, 5))))
        worst = max(worst, j_bilinearity_check(a, b))
    eye = kahler_identity(2)
    mismatch = kron_j_mismatch(eye, eye)
    record("7", worst < 1e-10 and mismatch > 0,
           f"symplectic J-bilinearity err={worst:.2e}; kron J(x)I vs I(x)J mismatch={mismatch:g}")


def test_criterion_8_network():
    dist = network_distribution()
    norm_err = dist.normalization_error()
    pb_err = max(abs(dist.outcome_probability(b, x, z) - 0.25)
                 for b in ALL_OUTCOMES for x in range(1, 4) for z in range(1, 7))
    func_err = max(abs(chsh3_functional(dist, b) - dist.outcome_probability(b) * chsh3_oracle(b))
                   for b in ALL_OUTCOMES)
    ok = norm_err <= 1e-10 and pb_err <= 1e-10 and func_err <= 1e-9
    record("8", ok, f"norm_err={norm_err:.2e} P(b)_err={pb_err:.2e} functional_err={func_err:.2e}")


def test_criterion_9_local_maps():
    rep = run_suite("local-maps", trials=200, seed=42, tol=1e-10)
    rng = np.random.default_rng(9)
    completeness = max(kraus_completeness_error(random_kraus(rng, int(rng.integers(1, 5)), int(rng.integers(1, 5))))
                       for _ in range(200))
    ok = rep.passed and completeness <= 1e-10
    record("9", ok, f"oracle_err={rep.max_abs_error:.2e} completeness_err={completeness:.2e}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
