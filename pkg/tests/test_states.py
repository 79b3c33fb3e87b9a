import numpy as np
import pytest

from finitewigner.kernels import build_xi
from finitewigner.linalg import is_hermitian
from finitewigner.states import (
    BlochVector, DomainError, UnsupportedDimensionError, bloch_corners, bloch_density,
    density_violations, is_density_matrix, momentum_state, position_state, random_density,
    random_pure_qubit, sphere_grid, wigner_extrema_scan,
)
from finitewigner.wigner import phase_point_ops, wigner_via_points

LOW = (1 - np.sqrt(3)) / 4
HIGH = (1 + np.sqrt(3)) / 4


def test_position_momentum_qubit():
    assert np.array_equal(position_state(0, 2), [[1, 0], [0, 0]])
    assert np.allclose(momentum_state(0, 2), [[0.5, 0.5], [0.5, 0.5]], atol=1e-15)
    with pytest.raises(IndexError):
        position_state(2, 2)
    with pytest.raises(IndexError):
        momentum_state(-1, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_projectors_pure(n):
    for k in range(n):
        for rho in (position_state(k, n), momentum_state(k, n)):
            assert np.trace(rho) == pytest.approx(1, abs=1e-14)
            assert np.trace(rho @ rho) == pytest.approx(1, abs=1e-14)


def test_momentum_entries():
    n = 5
    rho = momentum_state(2, n)
    for q in range(n):
        for q2 in range(n):
            assert rho[q, q2] == pytest.approx(np.exp(2j * np.pi * (q - q2) * 2 / n) / n, abs=1e-15)


def test_bloch_density():
    assert np.array_equal(bloch_density((0, 0, 0)), np.eye(2) / 2)
    assert np.array_equal(bloch_density((0, 0, 1)), position_state(0, 2))
    assert np.allclose(bloch_density((0.1, 0.2, 0.3)),
                       0.5 * np.array([[1.3, 0.1 - 0.2j], [0.1 + 0.2j, 0.7]]))
    with pytest.raises(DomainError):
        bloch_density((1, 1, 0))


def test_bloch_purity(rng):
    for _ in range(50):
        a = rng.uniform(-1, 1, 3)
        a *= rng.uniform() / max(1.0, np.linalg.norm(a))
        rho = bloch_density(a)
        assert np.trace(rho @ rho).real == pytest.approx(0.5 * (1 + a @ a), abs=1e-14)
        assert is_density_matrix(rho)


def test_random_density_deterministic():
    assert np.array_equal(random_density(7, 4), random_density(7, 4))
    assert not np.array_equal(random_density(7, 4), random_density(8, 4))


def test_random_density_invariants():
    for seed in range(100):
        rho = random_density(seed, 3)
        assert abs(np.trace(rho) - 1) < 1e-14
        assert is_hermitian(rho, 1e-12)
    v = density_violations(random_density(0, 5), n_probes=1000)
    assert v["min_probe"] >= 0


def test_is_density_matrix_rejects():
    assert not is_density_matrix(np.diag([1.5, -0.5]))
    assert not is_density_matrix(np.array([[1, 1], [0, 0]]))


def test_sphere_grid():
    pts = sphere_grid(5, 8)
    assert pts.shape == (40, 3)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1)
    assert np.allclose(np.abs(bloch_corners()), 1 / np.sqrt(3))


def test_extrema_scan_qubit():
    scan = wigner_extrema_scan(build_xi(2, "paper-qubit"), resolution=(91, 180))
    assert scan.max_value == pytest.approx(HIGH, abs=1e-14)
    assert scan.min_value == pytest.approx(LOW, abs=1e-14)
    assert len(scan.argmax) == 4 and len(scan.argmin) == 4
    for a in scan.argmax + scan.argmin:
        assert np.allclose(np.abs(a), 1 / np.sqrt(3), atol=1e-12)


def test_extrema_corner_values():
    pts = phase_point_ops(build_xi(2, "paper-qubit"))
    w = wigner_via_points(bloch_density(np.ones(3) / np.sqrt(3)), pts).values
    assert w.max() == pytest.approx(HIGH, abs=1e-15)
    w = wigner_via_points(bloch_density(np.array([1, 1, -1]) / np.sqrt(3)), pts).values
    assert w.min() == pytest.approx(LOW, abs=1e-15)


def test_extrema_scan_rejects_other_dims():
    with pytest.raises(UnsupportedDimensionError):
        wigner_extrema_scan(build_xi(3))


def test_pure_state_minimum_bound():
    rng = np.random.default_rng(5)
    pts = phase_point_ops(build_xi(2, "paper-qubit"))
    worst = min(wigner_via_points(bloch_density(random_pure_qubit(rng)), pts).values.min()
                for _ in range(10_000))
    assert worst >= LOW - 1e-9
    assert isinstance(random_pure_qubit(rng), BlochVector)
