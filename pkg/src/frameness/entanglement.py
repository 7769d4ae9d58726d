"""Dephasing upper bounds on the relative entropy of entanglement.

Dephasing one subsystem along any orthonormal basis is entanglement breaking,
unital and idempotent, so the relative-entropy distance from rho to the
channel's (separable) image is exactly the entropy gap of the lifted channel.
Minimizing that gap over the dephasing basis bounds the relative entropy of
entanglement from above; the coherent information S(rho_A) - S(rho_AB) bounds
it from below.  For two qubits the basis unitary is parameterized by two
angles and the optimization is a deterministic grid search plus local
refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.optimize

from .channels import KrausChannel
from .sampling import haar_unitary
from .states import (
    DensityOperator,
    ShapeMismatchError,
    partial_trace,
    von_neumann_entropy,
)

EIG_CUTOFF = 1e-12
TIGHT_TOL = 1e-4  # certificate threshold |upper - lower| for the tight flag
_UNITARY_TOL = 1e-10


@dataclass
class BipartiteState:
    """A state on H_A (x) H_B with A-major index ordering."""

    dim_a: int
    dim_b: int
    state: DensityOperator

    def __post_init__(self):
        if self.dim_a * self.dim_b != self.state.dim:
            raise ShapeMismatchError(
                f"dims {self.dim_a}x{self.dim_b} do not factor {self.state.dim}"
            )

    def reduced_a(self) -> DensityOperator:
        return partial_trace(self.state, (self.dim_a, self.dim_b), keep=0)


def bell_diagonal_state(p: float) -> BipartiteState:
    """p |phi+><phi+| + (1-p) |phi-><phi-| on two qubits."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {p}")
    plus = np.zeros(4, dtype=complex)
    plus[[0, 3]] = 1 / math.sqrt(2)
    minus = np.zeros(4, dtype=complex)
    minus[0], minus[3] = 1 / math.sqrt(2), -1 / math.sqrt(2)
    m = p * np.outer(plus, plus.conj()) + (1 - p) * np.outer(minus, minus.conj())
    return BipartiteState(2, 2, DensityOperator(m))


def _check_unitary(u: np.ndarray):
    dev = float(np.abs(u.conj().T @ u - np.eye(u.shape[0])).max())
    if dev > _UNITARY_TOL:
        raise ValueError(f"basis matrix is not unitary (deviation {dev:.3e})")


def dephasing_channel(basis_unitary) -> KrausChannel:
    """Measure-and-forget along the basis {U|k>}: Kraus set {U|k><k|U^dag}.

    Rank-1 projective pinching; entanglement breaking by construction, and
    idempotent because projecting twice is projecting once.
    """
    u = np.asarray(basis_unitary, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ShapeMismatchError(f"basis matrix must be square, got {u.shape}")
    _check_unitary(u)
    return KrausChannel([np.outer(u[:, k], u[:, k].conj()) for k in range(u.shape[0])])


def lifted_dephasing_channel(rho: BipartiteState, basis_unitary, side: str = "B") -> KrausChannel:
    """The dephasing lifted to the joint space: I (x) D_U (side B) or D_U (x) I."""
    local = dephasing_channel(basis_unitary)
    if side == "B":
        if local.dim != rho.dim_b:
            raise ShapeMismatchError(f"unitary dim {local.dim} vs B dim {rho.dim_b}")
        eye = np.eye(rho.dim_a)
        return KrausChannel([np.kron(eye, k) for k in local.kraus])
    if side == "A":
        if local.dim != rho.dim_a:
            raise ShapeMismatchError(f"unitary dim {local.dim} vs A dim {rho.dim_a}")
        eye = np.eye(rho.dim_b)
        return KrausChannel([np.kron(k, eye) for k in local.kraus])
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")


def dephasing_upper_bound(rho: BipartiteState, basis_unitary, side: str = "B") -> float:
    """S((I (x) D_U)(rho)) - S(rho): an upper bound on the relative entropy of entanglement."""
    ch = lifted_dephasing_channel(rho, basis_unitary, side)
    return von_neumann_entropy(ch.apply(rho.state)) - von_neumann_entropy(rho.state)


def two_qubit_parameterized_unitary(theta: float, gamma: float) -> np.ndarray:
    """cos(theta) diag(1,-1) + sin(theta) offdiag(e^{i gamma}, e^{-i gamma}).

    Hermitian with unit square, hence unitary for all angles; as theta and
    gamma sweep, the columns run over every orthonormal qubit basis.
    """
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [[c, s * np.exp(1j * gamma)], [s * np.exp(-1j * gamma), -c]], dtype=complex
    )


def hashing_lower_bound(rho: BipartiteState) -> float:
    """Coherent information S(rho_A) - S(rho_AB), clamped at zero."""
    gap = von_neumann_entropy(rho.reduced_a()) - von_neumann_entropy(rho.state)
    return max(0.0, gap)


@dataclass
class BoundReport:
    """Two-sided sandwich on the relative entropy of entanglement, in bits."""

    upper: float
    lower: float
    theta: float | None = None
    gamma: float | None = None
    unitary: np.ndarray | None = None

    @property
    def tight(self) -> bool:
        return abs(self.upper - self.lower) <= TIGHT_TOL

    def to_json_dict(self) -> dict:
        out = {"upper": self.upper, "lower": self.lower, "tight": self.tight}
        if self.theta is not None:
            out["theta"] = self.theta
            out["gamma"] = self.gamma
        return out


def _grid_upper_bounds(rho: BipartiteState, grid: int,
                       side: str = "B") -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized S(E_{theta,gamma}(rho)) - S(rho) over the full angle grid."""
    thetas = np.arange(grid) * math.pi / grid
    gammas = np.arange(grid) * 2.0 * math.pi / grid
    t = np.broadcast_to(np.cos(thetas)[:, None], (grid, grid))
    s = np.broadcast_to(np.sin(thetas)[:, None], (grid, grid))
    phase = np.broadcast_to(np.exp(1j * gammas)[None, :], (grid, grid))
    u = np.zeros((grid, grid, 2, 2), dtype=complex)
    u[..., 0, 0] = t
    u[..., 1, 1] = -t
    u[..., 0, 1] = s * phase
    u[..., 1, 0] = s * phase.conj()
    eye = np.eye(2)
    rho_m = rho.state.matrix
    out = np.zeros((grid, grid, 4, 4), dtype=complex)
    for k in range(2):
        col = u[..., :, k]
        proj = col[..., :, None] * col.conj()[..., None, :]
        if side == "B":
            lifted = np.einsum("ij,...kl->...ikjl", eye, proj).reshape(grid, grid, 4, 4)
        else:
            lifted = np.einsum("...kl,ij->...kilj", proj, eye).reshape(grid, grid, 4, 4)
        out += lifted @ rho_m @ np.conj(np.swapaxes(lifted, -1, -2))
    evals = np.linalg.eigvalsh(out)
    safe = np.where(evals > EIG_CUTOFF, evals, 1.0)
    entropies = -(safe * np.log2(safe)).sum(axis=-1)
    return thetas, gammas, entropies - von_neumann_entropy(rho.state)


def optimize_two_qubit_bound(rho: BipartiteState, grid: int = 64, side: str = "B") -> BoundReport:
    """Minimize the dephasing bound over the two-angle family on two qubits.

    Deterministic: a grid x grid scan of [0, pi) x [0, 2 pi) followed by
    Nelder-Mead refinement started from the three best grid points.  The
    returned angles are reduced to the canonical window.
    """
    if rho.dim_a != 2 or rho.dim_b != 2:
        raise ShapeMismatchError("two-angle optimization needs a 2 x 2 qubit pair")
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    thetas, gammas, values = _grid_upper_bounds(rho, grid, side)
    flat = values.ravel()
    order = np.argsort(flat, kind="stable")[:3]
    starts = [(thetas[i // grid], gammas[i % grid]) for i in order]

    def objective(x):
        return dephasing_upper_bound(rho, two_qubit_parameterized_unitary(x[0], x[1]), side)

    best_val = float(flat[order[0]])
    best_x = np.array(starts[0])
    for x0 in starts:
        res = scipy.optimize.minimize(
            objective, np.array(x0), method="Nelder-Mead",
            options={"xatol": 1e-7, "fatol": 1e-10, "maxiter": 200},
        )
        if res.fun < best_val:
            best_val, best_x = float(res.fun), res.x
    theta = float(best_x[0]) % math.pi
    gamma = float(best_x[1]) % (2.0 * math.pi)
    return BoundReport(
        upper=best_val,
        lower=hashing_lower_bound(rho),
        theta=theta,
        gamma=gamma,
        unitary=two_qubit_parameterized_unitary(theta, gamma),
    )


def optimize_dephasing_bound(rho: BipartiteState, unitaries=None, random_trials: int = 0,
                             seed: int = 0, side: str = "B") -> BoundReport:
    """Minimize the dephasing bound over user-supplied bases and/or random search.

    For subsystems beyond a qubit there is no two-angle parameterization, so
    the caller either provides candidate basis unitaries or requests a seeded
    Haar random search.  The identity basis is always included.
    """
    d = rho.dim_b if side == "B" else rho.dim_a
    candidates = [np.eye(d, dtype=complex)]
    if unitaries is not None:
        candidates.extend(np.asarray(u, dtype=complex) for u in unitaries)
    rng = np.random.default_rng(seed)
    candidates.extend(haar_unitary(d, rng) for _ in range(random_trials))
    best_u, best_val = None, math.inf
    for u in candidates:
        val = dephasing_upper_bound(rho, u, side)
        if val < best_val:
            best_u, best_val = u, val
    return BoundReport(upper=best_val, lower=hashing_lower_bound(rho), unitary=best_u)
