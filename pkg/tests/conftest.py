import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_hermitian(rng, n):
    a = random_complex(rng, n, n)
    return a + a.conj().T


# Literal matrices from the qubit worked example, (q,p) order (0,0),(0,1),(1,0),(1,1).
K2 = np.array([
    [1, 1, 1, -1],
    [1, 1, -1, 1],
    [1, -1, 1, 1],
    [-1, 1, 1, 1],
])

XI2 = np.array([
    [3 + 1j, 1 - 1j, 1 - 1j, -1 + 1j],
    [1 - 1j, 3 + 1j, -1 + 1j, 1 - 1j],
    [1 - 1j, -1 + 1j, 3 + 1j, 1 - 1j],
    [-1 + 1j, 1 - 1j, 1 - 1j, 3 + 1j],
]) / (2 * np.sqrt(2))

# Phase-point operators as displayed, keyed by the displayed labels.
W2_DISPLAYED = {
    (0, 0): np.array([[1, (1 - 1j) / 2], [(1 + 1j) / 2, 0]]),
    (0, 1): np.array([[0, (1 + 1j) / 2], [(1 - 1j) / 2, 1]]),
    (1, 0): np.array([[1, (-1 + 1j) / 2], [(-1 - 1j) / 2, 0]]),
    (1, 1): np.array([[0, (-1 - 1j) / 2], [(-1 + 1j) / 2, 1]]),
}


def bloch_table_displayed(a):
    """Displayed qubit Wigner arrangement (without normalization)."""
    a1, a2, a3 = a
    return np.array([
        [1 + a1 + a2 + a3, 1 + a1 - a2 - a3],
        [1 - a1 - a2 + a3, 1 - a1 + a2 - a3],
    ])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split("]")[1].split(".")[0])):
        terminalreporter.write_line(line)
