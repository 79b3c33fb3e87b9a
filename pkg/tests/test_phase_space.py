import cmath
import math

import numpy as np
import pytest

from finitewigner.kernels import build_k, k_apply
from finitewigner.phase_space import (
    PhasePoint, check_dim, chi, inner, overlap_matrix, overlap_qp, point, point_of,
    recipe_basis, roots_of_unity, sigma_index, u_vector, v_vector,
)


def test_overlap_values():
    assert overlap_qp(0, 0, 4) == pytest.approx(0.5, abs=1e-15)
    assert overlap_qp(1, 1, 2) == pytest.approx(-1 / math.sqrt(2), abs=1e-15)
    with pytest.raises(IndexError):
        overlap_qp(4, 0, 4)


def test_overlap_matrix_unitary():
    f = overlap_matrix(7)
    assert np.abs(f @ f.conj().T - np.eye(7)).max() < 1e-12
    for q in range(7):
        for p in range(7):
            assert f[q, p] == pytest.approx(cmath.exp(2j * math.pi * q * p / 7) / math.sqrt(7), abs=1e-14)


def test_roots_exact_quarters():
    r = roots_of_unity(8)
    assert r[2] == 1j and r[4] == -1 and r[6] == -1j


def test_check_dim():
    assert check_dim(2) == 2
    with pytest.raises(ValueError):
        check_dim(1)
    with pytest.raises(TypeError):
        check_dim(2.5)


def test_sigma_index():
    assert sigma_index(PhasePoint(0, 0), 3) == 0
    assert sigma_index(PhasePoint(1, 0), 3) == 3
    for s in range(25):
        assert sigma_index(point_of(s, 5), 5) == s
    with pytest.raises(IndexError):
        sigma_index((3, 0), 3)
    with pytest.raises(IndexError):
        point_of(9, 3)


def test_point_reduces():
    assert point(-1, 7, 5) == PhasePoint(4, 2)


def test_chi_values():
    assert np.allclose(chi(0, 0, 5), 1 / 5, atol=1e-15)
    assert np.allclose(chi(1, 0, 2), [0.5, -0.5, 0.5, -0.5], atol=1e-15)


def test_chi_components_direct():
    n = 5
    for q0, p0 in [(1, 2), (3, 4)]:
        v = chi(q0, p0, n)
        for q in range(n):
            for p in range(n):
                ref = cmath.exp(2j * math.pi * (q0 * p + p0 * q) / n) / n
                assert v[q * n + p] == pytest.approx(ref, abs=1e-15)


@pytest.mark.parametrize("n", range(2, 13))
def test_chi_orthonormal(n):
    x = np.array([chi(q0, p0, n) for q0 in range(n) for p0 in range(n)])
    assert np.abs(x.conj() @ x.T - np.eye(n * n)).max() < 1e-12


@pytest.mark.parametrize("n", [3, 4, 7])
def test_chi_conjugate_partner(n):
    for q0 in range(1, n):
        for p0 in range(1, n):
            assert np.allclose(chi(n - q0, n - p0, n), chi(q0, p0, n).conj(), atol=1e-15)


def test_u_v_overlaps():
    n = 3
    for q in range(n):
        for p in range(n):
            assert inner(v_vector(p, n), u_vector(q, n)) == pytest.approx(1 / n, abs=1e-15)
        for q2 in range(n):
            assert inner(u_vector(q2, n), u_vector(q, n)) == pytest.approx(float(q == q2), abs=1e-15)


def test_u_v_linear_dependence():
    n = 4
    assert np.allclose(sum(u_vector(q, n) for q in range(n)), sum(v_vector(p, n) for p in range(n)))


def test_u_expansion_over_plane_waves():
    n = 5
    for q in range(n):
        expansion = sum(cmath.exp(-2j * math.pi * q * p0 / n) * chi(0, p0, n) for p0 in range(n)) / math.sqrt(n)
        assert np.allclose(expansion, u_vector(q, n), atol=1e-14)
    for p in range(n):
        expansion = sum(cmath.exp(-2j * math.pi * q0 * p / n) * chi(q0, 0, n) for q0 in range(n)) / math.sqrt(n)
        assert np.allclose(expansion, v_vector(p, n), atol=1e-14)


def test_recipe_basis_qubit():
    psi0, u1, v1 = recipe_basis(2)
    assert np.allclose(psi0, [0.5] * 4)
    assert np.allclose(u1, [0.5, 0.5, -0.5, -0.5])
    assert np.allclose(v1, [0.5, -0.5, 0.5, -0.5])


def test_recipe_basis_orthonormal():
    b = np.array(recipe_basis(6))
    assert b.shape == (11, 36)
    assert np.isrealobj(b)
    assert np.abs(b @ b.T - np.eye(11)).max() < 1e-12


def test_recipe_basis_eigenvectors():
    n = 4
    k = build_k(n)
    for v in recipe_basis(n):
        assert np.abs(k_apply(k, v, "dense") - n * v).max() < 1e-12


@pytest.mark.parametrize("n", [3, 4, 6])
def test_recipe_orthogonal_to_complement(n):
    b = np.array(recipe_basis(n))
    for q0 in range(1, n):
        for p0 in range(1, n):
            assert np.abs(b @ chi(q0, p0, n)).max() < 1e-12
