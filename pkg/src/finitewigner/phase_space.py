"""Bookkeeping for the N x N phase-space grid.

Phase-space functions ``f(q, p)`` are stored as flat arrays of length ``N**2``
indexed by ``sigma = q*N + p`` (zero-based). All coordinates are integers
reduced modulo ``N``.
"""

from typing import NamedTuple

import numpy as np

__all__ = [
    "check_dim", "PhasePoint", "point", "sigma_index", "point_of",
    "roots_of_unity", "overlap_qp", "overlap_matrix", "grid", "inner",
    "chi", "chi_matrix", "u_vector", "v_vector", "recipe_basis",
]


def check_dim(n):
    """Validate a Hilbert-space dimension and return it as ``int``."""
    if isinstance(n, bool) or int(n) != n:
        raise TypeError(f"dimension must be an integer, got {n!r}")
    n = int(n)
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    return n


def _check_index(i, n, name):
    if not 0 <= i < n:
        raise IndexError(f"{name}={i} out of range [0, {n})")


class PhasePoint(NamedTuple):
    q: int
    p: int


def point(q, p, n):
    """Phase point with both coordinates reduced into ``[0, n)``."""
    return PhasePoint(int(q) % n, int(p) % n)


def sigma_index(pt, n):
    q, p = pt
    _check_index(q, n, "q")
    _check_index(p, n, "p")
    return q * n + p


def point_of(sigma, n):
    _check_index(sigma, n * n, "sigma")
    q, p = divmod(int(sigma), n)
    return PhasePoint(q, p)


def roots_of_unity(n):
    """``exp(2*pi*i*k/n)`` for ``k = 0..n-1``.

    Phases with integer exponents are looked up here after reducing the
    exponent modulo ``n``, so large products ``q*p`` never lose accuracy.
    """
    k = np.arange(n)
    roots = np.exp(2j * np.pi * k / n)
    # exact conjugate symmetry and exact values at quarter turns
    half = k[1:(n + 1) // 2]
    roots[n - half] = roots[half].conj()
    quarter = k[(4 * k) % n == 0]
    roots[quarter] = np.array([1, 1j, -1, -1j])[(4 * quarter) // n]
    return roots


def overlap_qp(q, p, n):
    """``<q|p> = exp(2*pi*i*q*p/n) / sqrt(n)``."""
    n = check_dim(n)
    _check_index(q, n, "q")
    _check_index(p, n, "p")
    return complex(roots_of_unity(n)[(q * p) % n] / np.sqrt(n))


def overlap_matrix(n):
    """Unitary matrix with entries ``<q|p>``; column ``p`` is ``|p>``."""
    n = check_dim(n)
    k = np.arange(n)
    return roots_of_unity(n)[np.outer(k, k) % n] / np.sqrt(n)


def grid(n):
    """Coordinate arrays ``(q, p)`` over sigma order."""
    return np.divmod(np.arange(n * n), n)


def inner(f, g):
    """``(f, g) = sum conj(f) * g``."""
    return complex(np.vdot(f, g))


def chi(q0, p0, n):
    """Plane wave ``exp(2*pi*i*(q0*p + p0*q)/n) / n`` in sigma order."""
    n = check_dim(n)
    _check_index(q0, n, "q0")
    _check_index(p0, n, "p0")
    q, p = grid(n)
    return roots_of_unity(n)[(q0 * p + p0 * q) % n] / n


def chi_matrix(n):
    """All plane waves as columns: ``X[sigma, sigma0] = chi_{sigma0}(sigma)``."""
    n = check_dim(n)
    q, p = grid(n)
    phase = np.outer(p, q) + np.outer(q, p)
    return roots_of_unity(n)[phase % n] / n


def u_vector(q_prime, n):
    """``U_q'(q, p) = delta(q, q') / sqrt(n)``."""
    n = check_dim(n)
    _check_index(q_prime, n, "q")
    q, _ = grid(n)
    return (q == q_prime) / np.sqrt(n)


def v_vector(p_prime, n):
    """``V_p'(q, p) = delta(p, p') / sqrt(n)``."""
    n = check_dim(n)
    _check_index(p_prime, n, "p")
    _, p = grid(n)
    return (p == p_prime) / np.sqrt(n)


def recipe_basis(n):
    """Real orthonormal basis of the span of all ``U_q`` and ``V_p``.

    Returns ``[Psi0, U~_1 .. U~_{n-1}, V~_1 .. V~_{n-1}]`` where
    ``U~_j = (U_0 + ... + U_{j-1} - j U_j) / sqrt(j (j+1))`` and likewise for
    ``V~_j``. No re-orthogonalization is applied.
    """
    n = check_dim(n)
    us = [u_vector(q, n) for q in range(n)]
    vs = [v_vector(p, n) for p in range(n)]
    basis = [sum(us) / np.sqrt(n)]
    for family in (us, vs):
        for j in range(1, n):
            vec = sum(family[:j]) - j * family[j]
            basis.append(vec / np.sqrt(j * (j + 1)))
    return basis
