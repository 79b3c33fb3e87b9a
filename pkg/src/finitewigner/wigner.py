"""Phase-space representatives, the Wigner map and phase-point operators.

Operators are ``N x N`` matrices in the position basis ``|q>``. Phase-space
tables are ``N x N`` arrays indexed ``[q, p]``.
"""

from dataclasses import dataclass, field

import numpy as np

from .kernels import build_k, cyclic_apply
from .linalg import ShapeError, as_cmatrix
from .phase_space import overlap_matrix, roots_of_unity

__all__ = [
    "WignerFunction", "PhasePointSet", "left_rep", "right_rep",
    "trace_pair_kernel", "phase_space_rep", "wigner_map", "phase_point_ops",
    "wigner_via_points", "reconstruct", "trace_pair_phase_space", "marginals",
]


def _operator(a, n=None):
    a = as_cmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"operator must be square, got {a.shape}")
    if n is not None and a.shape[0] != n:
        raise ShapeError(f"operator is {a.shape[0]}x{a.shape[0]}, expected {n}x{n}")
    return a


@dataclass(frozen=True, eq=False)
class WignerFunction:
    """Real Wigner table ``values[q, p]``.

    ``imag_residue`` is the largest imaginary part discarded when the map was
    evaluated; it measures how well reality held numerically.
    """

    values: np.ndarray
    imag_residue: float = 0.0

    @property
    def n(self):
        return self.values.shape[0]

    def total(self):
        return float(self.values.sum())


@dataclass(frozen=True, eq=False)
class PhasePointSet:
    """All ``N^2`` phase-point operators; ``operators[q, p]`` is ``W(q, p)``."""

    xi: object = field(repr=False)
    operators: np.ndarray = field(repr=False)

    @property
    def n(self):
        return self.xi.n

    def __getitem__(self, qp):
        q, p = qp
        return self.operators[q % self.n, p % self.n]


def left_rep(a, n=None):
    """``A_l(q, p) = <q|A|p><p|q>``."""
    a = _operator(a, n)
    f = overlap_matrix(a.shape[0])
    return (a @ f) * f.conj()


def right_rep(a, n=None):
    """``A_r(q, p) = <p|A|q><q|p>``."""
    a = _operator(a, n)
    f = overlap_matrix(a.shape[0])
    return (f.conj().T @ a).T * f


def trace_pair_kernel(a, b, k=None):
    """``Tr{AB} = sum A_l(s) K_l(s; s') B_l(s')``."""
    a = _operator(a)
    b = _operator(b, a.shape[0])
    n = a.shape[0]
    k = build_k(n) if k is None else k
    if k.n != n:
        raise ShapeError(f"kernel is for N={k.n}, operators are {n}x{n}")
    return complex(np.sum(left_rep(a) * cyclic_apply(k.generator, left_rep(b))))


def phase_space_rep(a, xi):
    """Complex table ``A(q, p) = N**-0.5 sum xi(q,p; q',p') A_l(q', p')``."""
    a = _operator(a, xi.n)
    return xi.apply(left_rep(a)) / np.sqrt(xi.n)


def wigner_map(a, xi, tol=1e-10):
    """Wigner representative of `a`.

    Hermitian input gives a `WignerFunction`; anything else returns the full
    complex table from `phase_space_rep`.
    """
    a = _operator(a, xi.n)
    table = phase_space_rep(a, xi)
    if np.abs(a - a.conj().T).max() > tol:
        return table
    return WignerFunction(table.real.copy(), float(np.abs(table.imag).max()))


def phase_point_ops(xi):
    """Phase-point operators ``W(q,p) = sqrt(N) sum xi(q,p;q',p') <p'|q'> |p'><q'|``.

    In the position basis this reduces to
    ``<a|W(q,p)|b> = N**-0.5 w**(p (a - b)) FF[(q - b) % N, (a - b) % N]`` with
    ``FF`` the FFT of the generator along its momentum axis, so all operators
    come from one ``O(N^2 log N)`` transform and ``O(N^4)`` gathers.
    """
    n = xi.n
    ff = np.fft.fft(xi.generator, axis=1)
    q = np.arange(n)[:, None, None, None]
    p = np.arange(n)[None, :, None, None]
    a = np.arange(n)[None, None, :, None]
    b = np.arange(n)[None, None, None, :]
    diff = (a - b) % n
    ops = roots_of_unity(n)[(p * diff) % n] * ff[(q - b) % n, diff] / np.sqrt(n)
    ops.setflags(write=False)
    return PhasePointSet(xi, ops)


def wigner_via_points(rho, pts):
    """``W(q, p) = Tr{rho W(q, p)} / N``."""
    rho = _operator(rho, pts.n)
    table = np.einsum("ab,qpba->qp", rho, pts.operators) / pts.n
    return WignerFunction(table.real.copy(), float(np.abs(table.imag).max()))


def reconstruct(w, pts):
    """Operator ``sum_{q,p} W(q, p) W_hat(q, p)``; exact inverse of the Wigner map."""
    values = w.values if isinstance(w, WignerFunction) else np.asarray(w)
    if values.shape != (pts.n, pts.n):
        raise ShapeError(f"table of shape {values.shape} does not match N={pts.n}")
    return np.einsum("qp,qpab->ab", values, pts.operators)


def trace_pair_phase_space(a, b, xi):
    """``Tr{AB} = N sum A(q, p) B(q, p)``, independent of the branch of ``xi``."""
    ta = phase_space_rep(a, xi)
    tb = phase_space_rep(b, xi)
    return complex(xi.n * np.sum(ta * tb))


def marginals(w):
    """Position and momentum distributions (sums over ``p`` and over ``q``)."""
    values = w.values if isinstance(w, WignerFunction) else np.asarray(w)
    return values.sum(axis=1), values.sum(axis=0)
