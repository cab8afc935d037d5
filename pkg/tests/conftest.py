import numpy as np
import pytest

from kahlerqm.cspace import ComplexOp


def to_np(op: ComplexOp) -> np.ndarray:
    return op.re + 1j * op.im


def from_np(z) -> ComplexOp:
    z = np.asarray(z, dtype=complex)
    if z.ndim == 1:
        z = z.reshape(-1, 1)
    return ComplexOp(z.real.copy(), z.imag.copy())


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def rand_c(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
