"""Full invariant suite run by ``finitewigner verify``."""

import numpy as np

from .kernels import Report, SignPattern, XiKernel, build_k, verify_k, verify_xi, xi_eigenvalues
from .phase_space import check_dim, overlap_matrix
from .states import random_density
from .wigner import (
    left_rep, phase_point_ops, phase_space_rep, reconstruct, right_rep,
    trace_pair_kernel, trace_pair_phase_space, wigner_map, wigner_via_points,
)

__all__ = ["faulty_xi", "verify_phase_points", "verify_trials", "run_suite"]


def faulty_xi(n, signs=None):
    """A deliberately broken ``xi`` used to exercise failure reporting.

    Conjugates the eigenvalue on the partner of the first conjugate pair only,
    which destroys symmetry. Without pairs (``N = 2``) it flips an axis
    eigenvalue instead, which destroys the marginal conditions.
    """
    n = check_dim(n)
    signs = SignPattern.parse(n, signs)
    mu = xi_eigenvalues(n, signs)
    if n > 2:
        mu[n - 1, n - 1] = np.conj(mu[n - 1, n - 1])
    else:
        mu[0, 1] = -mu[0, 1]
    return XiKernel.from_eigenvalues(mu, signs)


def verify_phase_points(pts, tol=1e-10):
    n = pts.n
    ops = pts.operators.reshape(n * n, n, n)
    report = Report()
    report.add("hermiticity", np.abs(ops - ops.conj().transpose(0, 2, 1)).max(), tol)
    report.add("unit_trace", np.abs(np.einsum("sii->s", ops) - 1).max(), tol)
    gram = np.einsum("sab,tba->st", ops, ops)
    report.add("orthogonality", np.abs(gram - n * np.eye(n * n)).max(), tol)
    f = overlap_matrix(n)
    q_proj = np.einsum("qa,qb->qab", np.eye(n), np.eye(n))
    p_proj = np.einsum("ap,bp->pab", f, f.conj())
    report.add("sum_over_p", np.abs(pts.operators.sum(axis=1) - n * q_proj).max(), tol)
    report.add("sum_over_q", np.abs(pts.operators.sum(axis=0) - n * p_proj).max(), tol)
    report.add("completeness", np.abs(ops.sum(axis=0) / n - np.eye(n)).max(), tol)
    return report


def _random_operator(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def verify_trials(xi, pts, trials, rng, tol=1e-10):
    """Randomized checks: trace pairings, reality, marginals, round trips."""
    n = xi.n
    k = build_k(n)
    f = overlap_matrix(n)
    worst = dict.fromkeys([
        "trace_pair_kernel", "trace_pair_phase_space", "trace_pair_left_right",
        "reality", "marginal_position", "marginal_momentum",
        "points_vs_map", "reconstruction"], 0.0)
    for _ in range(trials):
        a, b = _random_operator(rng, n), _random_operator(rng, n)
        direct = np.trace(a @ b)
        scale = max(1.0, abs(direct))
        worst["trace_pair_kernel"] = max(worst["trace_pair_kernel"],
                                         abs(trace_pair_kernel(a, b, k) - direct) / scale)
        worst["trace_pair_phase_space"] = max(worst["trace_pair_phase_space"],
                                              abs(trace_pair_phase_space(a, b, xi) - direct) / scale)
        lr = n * np.sum(left_rep(a) * right_rep(b))
        worst["trace_pair_left_right"] = max(worst["trace_pair_left_right"], abs(lr - direct) / scale)

        h = a + a.conj().T
        worst["reality"] = max(worst["reality"], np.abs(phase_space_rep(h, xi).imag).max())

        rho = random_density(rng.integers(2**63), n)
        w = wigner_map(rho, xi)
        worst["marginal_position"] = max(worst["marginal_position"],
                                         np.abs(w.values.sum(axis=1) - np.diag(rho).real).max())
        p_diag = np.einsum("ap,ab,bp->p", f.conj(), rho, f).real
        worst["marginal_momentum"] = max(worst["marginal_momentum"],
                                         np.abs(w.values.sum(axis=0) - p_diag).max())
        worst["points_vs_map"] = max(worst["points_vs_map"],
                                     np.abs(wigner_via_points(rho, pts).values - w.values).max())
        worst["reconstruction"] = max(worst["reconstruction"],
                                      np.linalg.norm(reconstruct(w, pts) - rho))
    report = Report()
    for name, value in worst.items():
        report.add(name, value, tol)
    return report


def run_suite(n, signs=None, trials=20, seed=0, tol=1e-10, xi=None):
    """Kernel, ``xi``, phase-point and randomized checks for one dimension."""
    n = check_dim(n)
    signs = SignPattern.parse(n, signs)
    xi = XiKernel.from_eigenvalues(xi_eigenvalues(n, signs), signs) if xi is None else xi
    k = build_k(n)
    pts = phase_point_ops(xi)
    report = Report()
    report.extend(verify_k(k, tol), "K.")
    report.extend(verify_xi(xi, tol, k), "xi.")
    report.extend(verify_phase_points(pts, tol), "W.")
    rng = np.random.default_rng([seed, n])
    report.extend(verify_trials(xi, pts, trials, rng, tol), "trials.")
    return report
