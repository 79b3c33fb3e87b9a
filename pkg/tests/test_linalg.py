import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from finitewigner.linalg import (
    ShapeError, adjoint, frobenius_distance, is_hermitian, mat_mul, trace,
)

from conftest import random_complex


def naive_mul(a, b):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=complex)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            for k in range(a.shape[1]):
                out[i, j] += a[i, k] * b[k, j]
    return out


SX = np.array([[0, 1], [1, 0]])


def test_mat_mul_identity_and_pauli(rng):
    m = random_complex(rng, 2, 2)
    assert np.array_equal(mat_mul(np.eye(2), m), m)
    assert np.array_equal(mat_mul(SX, SX), np.eye(2))


def test_mat_mul_matches_triple_loop(rng):
    a, b = random_complex(rng, 4, 4), random_complex(rng, 4, 4)
    assert np.allclose(mat_mul(a, b), naive_mul(a, b), atol=1e-12)


def test_mat_mul_shape_error():
    with pytest.raises(ShapeError):
        mat_mul(np.zeros((2, 3)), np.zeros((2, 3)))


def test_adjoint(rng):
    assert adjoint(np.array([[1j]]))[0, 0] == -1j
    h = random_complex(rng, 3, 3)
    h = h + h.conj().T
    assert np.array_equal(adjoint(h), h)
    a, b = random_complex(rng, 3, 3), random_complex(rng, 3, 3)
    assert np.allclose(adjoint(a @ b), adjoint(b) @ adjoint(a), atol=1e-12)


def test_adjoint_involution_bit_exact(rng):
    a = random_complex(rng, 5, 4)
    assert np.array_equal(adjoint(adjoint(a)), a)


def test_trace(rng):
    assert trace(np.eye(6)) == 6
    assert trace(SX) == 0
    a, b = random_complex(rng, 5, 5), random_complex(rng, 5, 5)
    assert abs(trace(a @ b) - trace(b @ a)) < 1e-12
    with pytest.raises(ShapeError):
        trace(np.zeros((2, 3)))


def test_frobenius(rng):
    m = random_complex(rng, 3, 3)
    assert frobenius_distance(m, m) == 0
    assert frobenius_distance(np.zeros((2, 2)), np.eye(2)) == pytest.approx(np.sqrt(2), abs=1e-15)
    for _ in range(20):
        a, b, c = (random_complex(rng, 3, 3) for _ in range(3))
        assert frobenius_distance(a, c) <= frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-12
    with pytest.raises(ShapeError):
        frobenius_distance(np.eye(2), np.eye(3))


def test_is_hermitian():
    assert not is_hermitian(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ShapeError):
        is_hermitian(np.zeros((2, 3)))


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        mat_mul(np.array([[np.nan]]), np.eye(1))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_associativity(n, seed):
    rng = np.random.default_rng(seed)
    a, b, c = (random_complex(rng, n, n) for _ in range(3))
    lhs, rhs = mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))
    assert np.abs(lhs - rhs).max() <= 1e-12 * max(1.0, np.abs(lhs).max())


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_trace_cyclic(n, seed):
    rng = np.random.default_rng(seed)
    a, b = random_complex(rng, n, n), random_complex(rng, n, n)
    assert abs(trace(mat_mul(a, b)) - trace(mat_mul(b, a))) <= 1e-12 * max(1.0, abs(trace(a @ b)))
