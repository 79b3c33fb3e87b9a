"""Discrete Wigner distributions for N-level quantum systems."""

from .kernels import (
    ConfigurationError, KernelK, PairTable, Report, SignPattern, XiKernel,
    build_k, build_xi, eigensystem_k, k_apply, pair_table, sign_slots, verify_k,
    verify_xi,
)
from .linalg import ShapeError
from .phase_space import PhasePoint, chi, point_of, recipe_basis, sigma_index, u_vector, v_vector
from .states import (
    BlochVector, bloch_density, momentum_state, position_state, random_density,
    wigner_extrema_scan,
)
from .wigner import (
    PhasePointSet, WignerFunction, left_rep, marginals, phase_point_ops,
    phase_space_rep, reconstruct, right_rep, trace_pair_kernel,
    trace_pair_phase_space, wigner_map, wigner_via_points,
)

__version__ = "0.1.0"
