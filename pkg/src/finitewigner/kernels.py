"""The phase-space kernel ``K_l`` and its symmetric square roots ``xi``.

Both kernels are translation invariant, so each is stored as an ``N x N``
generator table ``G[dq, dp]`` with dense entry
``K(q, p; q', p') = G[(q - q') % N, (p - p') % N]``. Dense ``N^2 x N^2`` views
are built on demand for verification.

The plane waves ``chi_{q0,p0}`` diagonalize every translation-invariant
kernel, so ``xi`` is synthesized directly from its eigenvalue table with a
2-d inverse FFT.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

import numpy as np

from .phase_space import PhasePoint, check_dim, chi_matrix, grid, roots_of_unity

__all__ = [
    "ConfigurationError", "partner", "PairTable", "pair_table", "slot_count", "slot_sigmas",
    "sign_slots",
    "SignPattern", "KernelK", "build_k", "dense_from_generator",
    "cyclic_apply", "k_apply", "EigenvalueTable", "k_eigenvalues",
    "xi_eigenvalues", "eigensystem_k", "complement_traces", "XiKernel",
    "xi_generator", "build_xi", "dense_k", "dense_xi", "Check", "Report", "verify_k", "verify_xi",
]

PRESETS = ("default", "paper-qubit")


class ConfigurationError(ValueError):
    """Raised for malformed or mismatched sign patterns."""


def partner(pt, n):
    """Conjugate partner ``(N - q0, N - p0)`` reduced modulo ``N``."""
    return PhasePoint((n - pt[0]) % n, (n - pt[1]) % n)


@dataclass(frozen=True)
class PairTable:
    """Split of the grid into axis points and conjugate pairs.

    ``singles`` holds the ``2N - 1`` points with ``q0 == 0`` or ``p0 == 0``
    followed, for even ``N``, by the self-conjugate point ``(N/2, N/2)``.
    ``pairs`` lists ``(representative, partner)`` with the representative
    lexicographically smaller.
    """

    n: int
    singles: tuple
    pairs: tuple

    @property
    def self_conjugate(self) -> Optional[PhasePoint]:
        if self.n % 2:
            return None
        return PhasePoint(self.n // 2, self.n // 2)


def pair_table(n):
    n = check_dim(n)
    axis = [PhasePoint(q, p) for q, p in product(range(n), repeat=2) if q == 0 or p == 0]
    pairs = []
    middle = []
    for q, p in product(range(1, n), repeat=2):
        pt = PhasePoint(q, p)
        other = partner(pt, n)
        if other == pt:
            middle.append(pt)
        elif pt < other:
            pairs.append((pt, other))
    return PairTable(n, tuple(axis + middle), tuple(pairs))


def slot_count(n):
    """``(N-1)^2 / 2`` for odd ``N``, ``((N-1)^2 + 1) / 2`` for even ``N``."""
    return (n - 1) ** 2 // 2 + (n % 2 == 0)


def slot_sigmas(n):
    """Sigma indices of the sign slots in canonical order (see `sign_slots`)."""
    n = check_dim(n)
    q, p = grid(n)
    sigma = q * n + p
    mate = ((n - q) % n) * n + (n - p) % n
    reps = np.flatnonzero((q > 0) & (p > 0) & (sigma < mate))
    if n % 2 == 0:
        reps = np.append(reps, (n // 2) * n + n // 2)
    return reps


def sign_slots(n):
    """Points carrying a free sign, in canonical order.

    Pair representatives in lexicographic order, then the self-conjugate
    point for even ``N``.
    """
    n = check_dim(n)
    return tuple(PhasePoint(*divmod(int(s), n)) for s in slot_sigmas(n))


@dataclass(frozen=True)
class SignPattern:
    """Choice of square-root branch for every conjugate pair.

    ``signs[i]`` is the sign attached to ``sign_slots(n)[i]``.
    """

    n: int
    signs: tuple

    def __post_init__(self):
        expected = slot_count(check_dim(self.n))
        if len(self.signs) != expected:
            raise ConfigurationError(
                f"sign pattern for N={self.n} needs {expected} entries, got {len(self.signs)}")
        if not set(self.signs) <= {1, -1}:
            raise ConfigurationError("signs must be +1 or -1")

    @classmethod
    def default(cls, n):
        """Principal branch: every sign ``+1``."""
        n = check_dim(n)
        return cls(n, (1,) * slot_count(n))

    @classmethod
    def paper_qubit(cls, n=2):
        """Every sign ``-1``; for ``N = 2`` this picks ``xi W = +i sqrt(2) W``."""
        n = check_dim(n)
        return cls(n, (-1,) * slot_count(n))

    @classmethod
    def from_string(cls, n, text):
        n = check_dim(n)
        text = text.replace("\u2212", "-")
        expected = slot_count(n)
        if len(text) != expected or set(text) - set("+-"):
            slots = [f"({q},{p})" for q, p in sign_slots(n)]
            if len(slots) > 8:
                slots = slots[:6] + ["...", slots[-1]]
            raise ConfigurationError(
                f"explicit sign string for N={n} must be {expected} characters of '+'/'-' "
                f"(order: {', '.join(slots)}), got {text!r}")
        return cls(n, tuple(1 if c == "+" else -1 for c in text))

    @classmethod
    def parse(cls, n, spec):
        """Accept a preset name, an explicit ``+``/``-`` string, or a pattern."""
        if isinstance(spec, SignPattern):
            if spec.n != n:
                raise ConfigurationError(f"sign pattern is for N={spec.n}, not N={n}")
            return spec
        if spec is None or spec == "default":
            return cls.default(n)
        if spec == "paper-qubit":
            return cls.paper_qubit(n)
        return cls.from_string(n, spec)

    @classmethod
    def random(cls, n, rng):
        n = check_dim(n)
        return cls(n, tuple(rng.choice([-1, 1], size=slot_count(n)).tolist()))

    @classmethod
    def enumerate(cls, n):
        """Yield all ``2**len(sign_slots(n))`` patterns."""
        n = check_dim(n)
        for signs in product((1, -1), repeat=slot_count(n)):
            yield cls(n, signs)

    def to_string(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def as_dict(self):
        return dict(zip(sign_slots(self.n), self.signs))


def dense_from_generator(gen):
    """Materialize ``D[sigma, sigma'] = gen[(q - q') % N, (p - p') % N]``."""
    n = gen.shape[0]
    q, p = grid(n)
    return gen[(q[:, None] - q[None, :]) % n, (p[:, None] - p[None, :]) % n]


def cyclic_apply(gen, f):
    """Apply a translation-invariant kernel to a phase-space vector.

    ``(K f)(q, p) = sum_{q', p'} gen[q - q', p - p'] f(q', p')`` is a 2-d
    cyclic convolution, evaluated with FFTs in ``O(N^2 log N)``.
    """
    n = gen.shape[0]
    f = np.asarray(f, dtype=np.complex128)
    if f.shape not in ((n * n,), (n, n)):
        raise ValueError(f"vector of shape {f.shape} does not match N={n}")
    out = np.fft.ifft2(np.fft.fft2(gen) * np.fft.fft2(f.reshape(n, n)))
    return out.reshape(f.shape)


@dataclass(frozen=True, eq=False)
class KernelK:
    """``K_l(q, p; q', p') = exp(2 pi i (q - q')(p - p') / N)``."""

    n: int
    generator: np.ndarray = field(repr=False)

    def entry(self, q, p, q2, p2):
        n = self.n
        return complex(self.generator[(q - q2) % n, (p - p2) % n])

    def dense(self):
        return dense_from_generator(self.generator)

    def apply(self, f, method="fft"):
        return k_apply(self, f, method)


def build_k(n):
    n = check_dim(n)
    d = np.arange(n)
    gen = roots_of_unity(n)[np.outer(d, d) % n]
    gen.setflags(write=False)
    return KernelK(n, gen)


def k_apply(k, f, method="fft"):
    """``K_l f`` using the generator (``"fft"``) or the dense matrix (``"dense"``)."""
    f = np.asarray(f, dtype=np.complex128)
    if f.shape != (k.n * k.n,):
        raise ValueError(f"vector of length {f.size} does not match N={k.n}")
    if method == "fft":
        return cyclic_apply(k.generator, f)
    if method == "dense":
        return k.dense() @ f
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class EigenvalueTable:
    """Eigenvalues of ``K_l`` and ``xi`` on ``chi_{q0,p0}``, indexed ``[q0, p0]``."""

    n: int
    k_eigenvalues: np.ndarray = field(repr=False)
    xi_eigenvalues: np.ndarray = field(repr=False)


def k_eigenvalues(n):
    """``N exp(-2 pi i q0 p0 / N)`` for every plane wave."""
    n = check_dim(n)
    d = np.arange(n)
    return n * roots_of_unity(n)[(-np.outer(d, d)) % n]


def xi_eigenvalues(n, signs=None):
    """Eigenvalue ``mu[q0, p0]`` of ``xi`` on each plane wave.

    ``sqrt(N)`` on the axis points. On each pair the value
    ``s sqrt(N) exp(-i pi q0 p0 / N)`` is evaluated at the representative and
    copied to the partner; evaluating it at the partner instead would differ
    by ``(-1)**(N + q0 + p0)`` and break the symmetry of ``xi``.
    """
    n = check_dim(n)
    signs = SignPattern.parse(n, signs)
    half_turns = roots_of_unity(2 * n).conj()
    mu = np.full((n, n), np.sqrt(n), dtype=np.complex128)
    reps = slot_sigmas(n)
    q0, p0 = np.divmod(reps, n)
    value = np.asarray(signs.signs) * np.sqrt(n) * half_turns[(q0 * p0) % (2 * n)]
    mu[q0, p0] = value
    mu[(n - q0) % n, (n - p0) % n] = value
    return mu


def eigensystem_k(n, signs=None):
    """Full analytic eigensystem of ``K_l`` plus the ``xi`` branch table."""
    n = check_dim(n)
    table = EigenvalueTable(n, k_eigenvalues(n), xi_eigenvalues(n, signs))
    return table, pair_table(n)


def complement_traces(n):
    """Real and imaginary parts of the ``K_l`` spectrum off the axis points.

    These are the traces of the blocks ``A`` and ``B`` of ``K_l`` restricted
    to the complement of the marginal eigenspace; they must equal
    ``-N (N - 1)`` and ``0``.
    """
    ev = k_eigenvalues(n)[1:, 1:]
    return float(ev.real.sum()), float(ev.imag.sum())


def xi_generator(mu):
    """Spectral synthesis of the generator from the eigenvalue table.

    ``F[dq, dp] = N**-2 sum mu[q0, p0] exp(2 pi i (q0 dp + p0 dq) / N)``.
    """
    return np.fft.ifft2(np.asarray(mu).T)


@dataclass(frozen=True, eq=False)
class XiKernel:
    """A symmetric square root of ``K_l`` for a given sign pattern."""

    n: int
    signs: SignPattern
    generator: np.ndarray = field(repr=False)
    eigenvalues: np.ndarray = field(repr=False)

    @classmethod
    def from_eigenvalues(cls, mu, signs):
        mu = np.array(mu, dtype=np.complex128)
        gen = xi_generator(mu)
        mu.setflags(write=False)
        gen.setflags(write=False)
        return cls(mu.shape[0], signs, gen, mu)

    def entry(self, q, p, q2, p2):
        n = self.n
        return complex(self.generator[(q - q2) % n, (p - p2) % n])

    def dense(self):
        return dense_from_generator(self.generator)

    def apply(self, f):
        return cyclic_apply(self.generator, f)


def build_xi(n, signs=None):
    """Square-root kernel for ``signs`` (pattern, preset name or ``+-`` string)."""
    n = check_dim(n)
    signs = SignPattern.parse(n, signs)
    return XiKernel.from_eigenvalues(xi_eigenvalues(n, signs), signs)


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tol: float

    @property
    def passed(self):
        return bool(self.residual <= self.tol)


@dataclass
class Report:
    """Named residual checks; failures are entries, never exceptions."""

    checks: list = field(default_factory=list)

    def add(self, name, residual, tol):
        self.checks.append(Check(name, float(residual), tol))

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.residual, c.tol))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self):
        return max((c.residual for c in self.checks), default=0.0)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self):
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "residual": c.residual, "tol": c.tol}
                for c in self.checks
            ],
        }


def _shift_perm(n, a, b):
    q, p = grid(n)
    return ((q + a) % n) * n + (p + b) % n


def _kernel_structure(report, dense, n, tol):
    """Symmetry and translation invariance of a dense phase-space kernel."""
    report.add("symmetry", np.abs(dense - dense.T).max(), tol)
    shift = 0.0
    for a, b in ((1, 0), (0, 1)):
        perm = _shift_perm(n, a, b)
        shift = max(shift, np.abs(dense[np.ix_(perm, perm)] - dense).max())
    report.add("translation_invariance", shift, tol)


def _marginal_residuals(dense, n, value):
    blocks = dense.reshape(n, n, n, n)
    eye = np.eye(n)
    over_p = blocks.sum(axis=3) - value * eye[:, None, :]
    over_q = blocks.sum(axis=2) - value * eye[None, :, :]
    return np.abs(over_p).max(), np.abs(over_q).max()


def verify_k(k, tol=1e-10):
    """Check every stated identity of ``K_l`` on its dense matrix."""
    n = k.n
    dense = k.dense()
    report = Report()
    _kernel_structure(report, dense, n, tol)
    unit = dense @ dense.conj().T / n**2 - np.eye(n * n)
    report.add("essential_unitarity", np.abs(unit).max(), tol)
    mq, mp = _marginal_residuals(dense, n, n)
    report.add("marginal_sum_over_p", mq, tol)
    report.add("marginal_sum_over_q", mp, tol)
    report.add("row_sums", np.abs(dense.sum(axis=1) - n).max(), tol)
    report.add("trace", abs(np.trace(dense) - n**2), tol)
    return report


def verify_xi(xi, tol=1e-10, k=None):
    """Check symmetry, unitarity, translation invariance, marginals and ``xi^2 = K_l``."""
    n = xi.n
    dense = xi.dense()
    k = build_k(n) if k is None else k
    report = Report()
    _kernel_structure(report, dense, n, tol)
    unit = dense @ dense.conj().T / n - np.eye(n * n)
    report.add("essential_unitarity", np.abs(unit).max(), tol)
    mq, mp = _marginal_residuals(dense, n, np.sqrt(n))
    report.add("marginal_sum_over_p", mq, tol)
    report.add("marginal_sum_over_q", mp, tol)
    report.add("square_root", np.abs(dense @ dense - k.dense()).max(), tol)
    return report


def dense_k(n):
    """``K_l`` evaluated entry by entry from its closed form (no generator)."""
    n = check_dim(n)
    q, p = grid(n)
    phase = np.outer(q, np.ones_like(q)) - q[None, :]
    phase = phase * (p[:, None] - p[None, :])
    return roots_of_unity(n)[phase % n]


def dense_xi(n, signs=None):
    """``xi = sum mu chi chi^dag`` synthesized densely from the plane-wave basis.

    Independent of the FFT route used by `build_xi`; used as a cross-check.
    """
    n = check_dim(n)
    mu = xi_eigenvalues(n, signs).reshape(-1)
    x = chi_matrix(n)
    return (x * mu) @ x.conj().T
