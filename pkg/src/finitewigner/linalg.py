"""Dense complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; this module only
adds the shape discipline and the handful of reductions the rest of the
package relies on.
"""

import numpy as np

__all__ = [
    "ShapeError", "as_cmatrix", "as_cvector", "mat_mul", "adjoint", "trace",
    "frobenius_distance", "is_hermitian",
]


class ShapeError(ValueError):
    """Raised when operand shapes are incompatible."""


def as_cmatrix(a):
    """Return `a` as a finite 2-d complex array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeError(f"expected a matrix, got array with shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_cvector(v):
    vec = np.asarray(v, dtype=np.complex128)
    if vec.ndim != 1:
        raise ShapeError(f"expected a vector, got array with shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector entries must be finite")
    return vec


def _square(a):
    m = as_cmatrix(a)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    return m


def mat_mul(a, b):
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a):
    """Conjugate transpose."""
    return as_cmatrix(a).conj().T


def trace(a):
    return complex(np.trace(_square(a)))


def frobenius_distance(a, b):
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def is_hermitian(a, tol=1e-12):
    a = _square(a)
    return frobenius_distance(a, a.conj().T) <= tol
