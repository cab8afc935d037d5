import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from kahlerqm import realmat as rm
from kahlerqm.errors import DimensionError


def kron_by_index(a, b):
    out = np.zeros((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]))
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            for p in range(b.shape[0]):
                for q in range(b.shape[1]):
                    out[i * b.shape[0] + p, j * b.shape[1] + q] = a[i, j] * b[p, q]
    return out


def test_kron_identity():
    assert np.array_equal(rm.kron(rm.I2, rm.I2), np.eye(4))


def test_kron_tau_tau():
    expected = np.array([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
    assert np.array_equal(rm.kron(rm.TAU, rm.TAU), expected)


def test_kron_matches_index_formula(rng):
    a, b = rng.standard_normal((2, 2)), rng.standard_normal((3, 3))
    assert np.array_equal(rm.kron(a, b), kron_by_index(a, b))
    c = rng.standard_normal((2, 3))
    assert np.array_equal(rm.kron(c, b[:, :1]), kron_by_index(c, b[:, :1]))


def test_tau_squared():
    assert np.array_equal(rm.matmul(rm.TAU, rm.TAU), -np.eye(2))


def test_basic_ops():
    assert rm.trace(np.eye(4)) == 4
    assert rm.frobenius_norm(np.zeros((3, 2))) == 0
    assert np.array_equal(rm.transpose(np.arange(6.0).reshape(2, 3)), np.arange(6.0).reshape(2, 3).T)
    assert np.array_equal(rm.scale(2, np.eye(2)), 2 * np.eye(2))
    with pytest.raises(DimensionError):
        rm.matmul(np.eye(2), np.eye(3))
    with pytest.raises(DimensionError):
        rm.add(np.eye(2), np.eye(3))
    with pytest.raises(DimensionError):
        rm.trace(np.ones((2, 3)))


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        rm.as_real([[np.nan]])


@pytest.mark.parametrize("c_shape", [(3, 3), (2, 1), (3, 4)])
def test_tc_of_kron_is_trace_times_c(rng, c_shape):
    for n in (1, 2, 3):
        a = rng.standard_normal((n, n))
        c = rng.standard_normal(c_shape)
        got = rm.tc_contract(rm.kron(a, c), rm.Shape2(n, *c_shape))
        assert rm.approx_eq(got, np.trace(a) * c, 1e-10)


def test_tc_key_instances(rng):
    c = rng.standard_normal((3, 2))
    assert np.allclose(rm.tc_contract(rm.kron(rm.I2, c), rm.Shape2(2, 3, 2)), 2 * c, atol=0)
    assert np.array_equal(rm.tc_contract(rm.kron(rm.TAU, c), rm.Shape2(2, 3, 2)), np.zeros((3, 2)))


def test_tc_linear(rng):
    shape = rm.Shape2(3, 2, 2)
    m, n = rng.standard_normal((6, 6)), rng.standard_normal((6, 6))
    lhs = rm.tc_contract(1.5 * m - 0.25 * n, shape)
    rhs = 1.5 * rm.tc_contract(m, shape) - 0.25 * rm.tc_contract(n, shape)
    assert rm.approx_eq(lhs, rhs, 1e-12)


def test_tc_shape_mismatch():
    with pytest.raises(DimensionError):
        rm.tc_contract(np.eye(4), rm.Shape2(2, 3, 3))


def test_approx_eq_examples(rng):
    a = rng.standard_normal((3, 3))
    assert rm.approx_eq(a, a, 1e-12)
    assert not rm.approx_eq(rm.I2, rm.I2 + 1e-6 * np.ones((2, 2)), 1e-12)
    with pytest.raises(DimensionError):
        rm.approx_eq(np.eye(2), np.eye(3), 1e-3)


def test_approx_eq_boundary(rng):
    a = rng.standard_normal((4, 4))
    e = np.zeros((4, 4))
    e[1, 2] = 1.0
    tol = 1e-6
    scale = max(1.0, np.linalg.norm(a), np.linalg.norm(a + tol * e))
    assert rm.approx_eq(a, a + 0.5 * tol * e, tol)
    assert not rm.approx_eq(a, a + 2 * tol * scale * e, tol)


def test_random_complex_op_seeded():
    r1, i1 = rm.random_complex_op(3, 5)
    r2, i2 = rm.random_complex_op(3, 5)
    assert np.array_equal(r1, r2) and np.array_equal(i1, i2)
    r3, _ = rm.random_complex_op(3, 6)
    assert not np.array_equal(r1, r3)


def test_random_complex_op_mean():
    draws = np.concatenate([np.concatenate(rm.random_complex_op(10, s)).ravel() for s in range(50)])
    assert draws.size == 10_000
    assert abs(draws.mean()) < 0.05


def test_mixed_product(rng):
    a, b = rng.standard_normal((2, 3)), rng.standard_normal((4, 2))
    c, d = rng.standard_normal((3, 2)), rng.standard_normal((2, 5))
    assert rm.approx_eq(rm.kron(a, b) @ rm.kron(c, d), rm.kron(a @ c, b @ d), 1e-10)


small_ints = arrays(np.float64, st.tuples(st.integers(1, 3), st.integers(1, 3)),
                    elements=st.integers(-5, 5).map(float))


@settings(max_examples=60, deadline=None)
@given(small_ints, small_ints, small_ints)
def test_kron_associative_on_integers(a, b, c):
    assert np.array_equal(rm.kron(rm.kron(a, b), c), rm.kron(a, rm.kron(b, c)))


@settings(max_examples=60, deadline=None)
@given(small_ints, small_ints, small_ints, st.integers(-3, 3))
def test_kron_bilinear_on_integers(a, b, c, alpha):
    if a.shape != c.shape:
        return
    assert np.array_equal(rm.kron(alpha * a + c, b), alpha * rm.kron(a, b) + rm.kron(c, b))
    assert np.array_equal(rm.kron(b, alpha * a + c), alpha * rm.kron(b, a) + rm.kron(b, c))
