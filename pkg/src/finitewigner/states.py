"""State constructors, density-matrix validation and the qubit extrema scan."""

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

import numpy as np

from .linalg import as_cmatrix
from .phase_space import check_dim, overlap_matrix
from .wigner import phase_point_ops

__all__ = [
    "DomainError", "UnsupportedDimensionError", "BlochVector", "PAULI",
    "position_state", "momentum_state", "mixed_state", "bloch_density",
    "random_density", "random_pure_qubit", "density_violations",
    "is_density_matrix", "ExtremaScan", "sphere_grid", "bloch_corners",
    "wigner_extrema_scan",
]

PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=np.complex128)


class DomainError(ValueError):
    """Raised for parameters outside a state family's domain."""


class UnsupportedDimensionError(ValueError):
    pass


class BlochVector(NamedTuple):
    a1: float
    a2: float
    a3: float


def position_state(q0, n):
    """``|q0><q0|``."""
    n = check_dim(n)
    if not 0 <= q0 < n:
        raise IndexError(f"q0={q0} out of range [0, {n})")
    rho = np.zeros((n, n), dtype=np.complex128)
    rho[q0, q0] = 1.0
    return rho


def momentum_state(p0, n):
    """``|p0><p0|`` with entries ``exp(2 pi i (q - q') p0 / N) / N``."""
    n = check_dim(n)
    if not 0 <= p0 < n:
        raise IndexError(f"p0={p0} out of range [0, {n})")
    ket = overlap_matrix(n)[:, p0]
    return np.outer(ket, ket.conj())


def mixed_state(n):
    n = check_dim(n)
    return np.eye(n, dtype=np.complex128) / n


def bloch_density(a):
    """Qubit state ``(I + a . sigma) / 2``; requires ``|a| <= 1``."""
    a = np.asarray(a, dtype=float)
    if a.shape != (3,):
        raise DomainError(f"Bloch vector must have 3 components, got shape {a.shape}")
    if a @ a > 1 + 1e-12:
        raise DomainError(f"Bloch vector {tuple(a)} has length > 1")
    return 0.5 * (np.eye(2) + np.tensordot(a, PAULI, axes=1))


def random_density(seed, n):
    """``G G^dag / Tr(G G^dag)`` with standard complex Gaussian ``G``."""
    n = check_dim(n)
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def random_pure_qubit(rng):
    """Haar-random pure qubit state as a unit Bloch vector."""
    v = rng.standard_normal(3)
    return BlochVector(*(v / np.linalg.norm(v)))


def density_violations(rho, n_probes=1000, seed=0):
    """Hermiticity residual, trace error and most negative probe ``<v|rho|v>``.

    Positivity is sampled on random unit probes rather than checked through
    an eigendecomposition.
    """
    rho = as_cmatrix(rho)
    n = rho.shape[0]
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((n_probes, n)) + 1j * rng.standard_normal((n_probes, n))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    quad = np.einsum("ka,ab,kb->k", v.conj(), rho, v).real
    return {
        "hermiticity": float(np.linalg.norm(rho - rho.conj().T)),
        "trace": float(abs(np.trace(rho) - 1)),
        "min_probe": float(quad.min()),
    }


def is_density_matrix(rho, tol=1e-12, positivity_tol=1e-10, n_probes=1000, seed=0):
    rho = as_cmatrix(rho)
    if rho.shape[0] != rho.shape[1]:
        return False
    v = density_violations(rho, n_probes, seed)
    return v["hermiticity"] <= tol and v["trace"] <= tol and v["min_probe"] >= -positivity_tol


@dataclass(frozen=True)
class ExtremaScan:
    max_value: float
    min_value: float
    argmax: list = field(default_factory=list)
    argmin: list = field(default_factory=list)


def sphere_grid(n_theta=721, n_phi=1440):
    """Latitude/longitude grid of unit vectors, shape ``(n_theta * n_phi, 3)``."""
    theta = np.linspace(0.0, np.pi, n_theta)
    phi = np.arange(n_phi) * (2 * np.pi / n_phi)
    st = np.sin(theta)[:, None]
    pts = np.stack([
        st * np.cos(phi)[None, :],
        st * np.sin(phi)[None, :],
        np.broadcast_to(np.cos(theta)[:, None], (n_theta, n_phi)),
    ], axis=-1)
    return pts.reshape(-1, 3)


def bloch_corners():
    """The eight points ``(+-1, +-1, +-1) / sqrt(3)``."""
    return np.array(list(product((1.0, -1.0), repeat=3))) / np.sqrt(3)


def wigner_extrema_scan(xi, resolution=(721, 1440), atol=1e-12):
    """Global extrema of the qubit Wigner function over the Bloch sphere.

    Pure states suffice since ``W`` is affine in the Bloch vector. The grid
    is augmented with the eight corner points so they are evaluated exactly.
    Every state whose extremal entry lies within `atol` of the global value
    is reported.
    """
    if xi.n != 2:
        raise UnsupportedDimensionError(f"extrema scan is defined for N=2 only, got N={xi.n}")
    ops = phase_point_ops(xi).operators.reshape(4, 2, 2)
    # W(s) = (Tr W_s + a . Tr(sigma W_s)) / 4 for rho = (I + a.sigma)/2
    offset = np.einsum("sii->s", ops).real / 4
    slope = np.einsum("kab,sba->sk", PAULI, ops).real / 4
    pts = np.vstack([sphere_grid(*resolution), bloch_corners()])
    values = offset + pts @ slope.T
    per_state_max = values.max(axis=1)
    per_state_min = values.min(axis=1)
    vmax, vmin = float(per_state_max.max()), float(per_state_min.min())

    def collect(mask):
        found = []
        for a in pts[mask]:
            if not any(np.allclose(a, b, atol=1e-12) for b in found):
                found.append(a)
        return [BlochVector(*map(float, a)) for a in found]

    return ExtremaScan(
        vmax, vmin,
        collect(per_state_max >= vmax - atol),
        collect(per_state_min <= vmin + atol),
    )
