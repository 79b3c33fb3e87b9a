"""Timing of kernel construction and application, generator vs dense."""

import time

import numpy as np

from .kernels import build_k, build_xi, dense_k, dense_xi, k_apply

__all__ = ["DENSE_LIMIT", "CapacityError", "time_call", "bench_one", "cross_check"]

DENSE_LIMIT = 32


class CapacityError(ValueError):
    """Requested size exceeds what the dense path is allowed to build."""


def time_call(fn, *args, repeat=3):
    """Best wall time over `repeat` calls and the last result."""
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_one(n, mode="generator", seed=0, repeat=3):
    rng = np.random.default_rng(seed)
    f = rng.standard_normal(n * n) + 1j * rng.standard_normal(n * n)
    row = {"n": n, "mode": mode}
    if mode == "generator":
        row["build_k_s"], k = time_call(build_k, n, repeat=repeat)
        row["build_xi_s"], _ = time_call(build_xi, n, repeat=repeat)
        row["apply_k_s"], _ = time_call(k_apply, k, f, "fft", repeat=repeat)
    elif mode == "dense":
        if n > DENSE_LIMIT:
            raise CapacityError(f"dense mode is capped at n <= {DENSE_LIMIT}, got n={n}")
        row["build_k_s"], kd = time_call(dense_k, n, repeat=repeat)
        row["build_xi_s"], xd = time_call(dense_xi, n, repeat=repeat)
        row["apply_k_s"], _ = time_call(np.dot, kd, f, repeat=repeat)
        row["xi_squared_residual"] = float(np.abs(xd @ xd - kd).max())
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return row


def cross_check(n=8, seed=0):
    """Largest difference between generator-based and dense results."""
    rng = np.random.default_rng(seed)
    f = rng.standard_normal(n * n) + 1j * rng.standard_normal(n * n)
    k = build_k(n)
    return {
        "n": n,
        "k_entries": float(np.abs(k.dense() - dense_k(n)).max()),
        "xi_entries": float(np.abs(build_xi(n).dense() - dense_xi(n)).max()),
        "k_apply": float(np.abs(k_apply(k, f, "fft") - dense_k(n) @ f).max()),
    }
