"""Dense state objects and the entropic functionals everything else consumes.

All entropies are in bits.  The single spectral primitive is the Hermitian
eigendecomposition (``numpy.linalg.eigvalsh``/``eigh``); every entropy routes
through it so that tolerances compose predictably.  Eigenvalues at or below
``EIG_CUTOFF`` count as exact zeros, both for ``0 log 0 = 0`` and for support
detection in the relative entropy.
"""

from __future__ import annotations

import math
import os

import numpy as np

LOG2E = math.log2(math.e)

# Effective support: eigenvalues <= EIG_CUTOFF are treated as exact zeros.
# Chosen well above double-precision eigensolver noise at desk-scale dims.
EIG_CUTOFF = 1e-12

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
PURE_NORM_TOL = 1e-12
DIST_TOL = 1e-10

_DEFAULT_MAX_DIM = 2**14


class FramenessError(Exception):
    """Base class for all toolkit errors."""


class InvalidStateError(FramenessError):
    """A matrix or vector violates the density-operator/pure-state invariants."""


class InvalidDistributionError(FramenessError):
    """A probability distribution is negative or not normalized."""


class ShapeMismatchError(FramenessError):
    """Operands have incompatible dimensions."""


class ResourceLimitError(FramenessError):
    """A requested workspace exceeds the configured dimension cap."""


def max_dim() -> int:
    """Dense-workspace dimension cap; env var FRAMENESS_MAX_DIM overrides 2**14."""
    return int(os.environ.get("FRAMENESS_MAX_DIM", _DEFAULT_MAX_DIM))


class DensityOperator:
    """Finite-dimensional density operator: Hermitian, unit trace, PSD.

    The matrix is symmetrized, frozen (read-only) and validated on
    construction; instances are immutable and safe to share across threads.
    """

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ShapeMismatchError(f"expected a square matrix, got shape {m.shape}")
        herm_dev = float(np.abs(m - m.conj().T).max()) if m.size else 0.0
        if herm_dev > HERM_TOL:
            raise InvalidStateError(f"not Hermitian: max deviation {herm_dev:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace {tr:.12g} differs from 1 beyond tolerance")
        m = 0.5 * (m + m.conj().T)
        lowest = float(np.linalg.eigvalsh(m)[0])
        if lowest < -PSD_TOL:
            raise InvalidStateError(f"not PSD: smallest eigenvalue {lowest:.3e}")
        m.setflags(write=False)
        self.dim = int(m.shape[0])
        self.matrix = m

    def eigenvalues(self) -> np.ndarray:
        """Ascending real spectrum."""
        return np.linalg.eigvalsh(self.matrix)

    def tensor(self, other: "DensityOperator") -> "DensityOperator":
        return DensityOperator(np.kron(self.matrix, other.matrix))

    def __repr__(self):
        return f"DensityOperator(dim={self.dim})"


class PureState:
    """Unit-norm state vector."""

    __slots__ = ("dim", "amplitudes")

    def __init__(self, amplitudes):
        v = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if v.size == 0:
            raise InvalidStateError("empty amplitude vector")
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > PURE_NORM_TOL:
            raise InvalidStateError(f"norm {norm:.15f} differs from 1 beyond 1e-12")
        v.setflags(write=False)
        self.dim = int(v.size)
        self.amplitudes = v

    def projector(self) -> DensityOperator:
        return DensityOperator(np.outer(self.amplitudes, self.amplitudes.conj()))

    def overlap(self, other: "PureState") -> complex:
        if self.dim != other.dim:
            raise ShapeMismatchError("pure states of different dimension")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def __repr__(self):
        return f"PureState(dim={self.dim})"


class ProbabilityDistribution:
    """Finite sequence of nonnegative weights summing to one (tolerance 1e-10)."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        w = np.asarray(weights, dtype=float).reshape(-1)
        if w.size == 0:
            raise InvalidDistributionError("empty distribution")
        if float(w.min()) < -DIST_TOL:
            raise InvalidDistributionError(f"negative weight {w.min():.3e}")
        total = float(w.sum())
        if abs(total - 1.0) > DIST_TOL:
            raise InvalidDistributionError(f"weights sum to {total:.12g}, expected 1")
        w = np.clip(w, 0.0, None)
        w.setflags(write=False)
        self.weights = w

    def __len__(self):
        return int(self.weights.size)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return float(self.weights[i])


def _as_weights(p) -> np.ndarray:
    if isinstance(p, ProbabilityDistribution):
        return p.weights
    return ProbabilityDistribution(p).weights


def _entropy_of_spectrum(lams: np.ndarray) -> float:
    lams = lams[lams > EIG_CUTOFF]
    return float(-(lams * np.log2(lams)).sum()) if lams.size else 0.0


def von_neumann_entropy(rho: DensityOperator) -> float:
    """S(rho) = -Tr rho log2 rho, with eigenvalues below the cutoff dropped."""
    return _entropy_of_spectrum(rho.eigenvalues())


def shannon_entropy(p) -> float:
    """H(p) = -sum p_i log2 p_i with 0 log 0 = 0."""
    return _entropy_of_spectrum(_as_weights(p))


def binary_entropy(p: float) -> float:
    """H2(p) for a single probability p in [0, 1]."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"binary entropy needs p in [0, 1], got {p}")
    return _entropy_of_spectrum(np.array([p, 1.0 - p]))


def relative_entropy(rho: DensityOperator, sigma: DensityOperator) -> float:
    """S(rho || sigma) in bits; math.inf when supp(rho) is not inside supp(sigma).

    Computed as -S(rho) - sum_i <v_i|rho|v_i> log2 s_i over the eigenpairs
    (s_i, v_i) of sigma with s_i above the cutoff.  The weight rho places on
    sigma's null space decides the infinity sentinel.
    """
    if rho.dim != sigma.dim:
        raise ShapeMismatchError(f"dims {rho.dim} and {sigma.dim} differ")
    s, vecs = np.linalg.eigh(sigma.matrix)
    # diagonal of V^dag rho V: weight of rho along each eigenvector of sigma
    w = np.einsum("ij,jk,ki->i", vecs.conj().T, rho.matrix, vecs).real
    null = s <= EIG_CUTOFF
    if float(w[null].sum()) > 1e-10:
        return math.inf
    keep = ~null
    cross = float((w[keep] * np.log2(s[keep])).sum())
    return -von_neumann_entropy(rho) - cross


def trace_distance(a: DensityOperator, b: DensityOperator) -> float:
    """Trace norm ||a - b||_1 (no 1/2 factor): orthogonal pure states give 2."""
    if a.dim != b.dim:
        raise ShapeMismatchError(f"dims {a.dim} and {b.dim} differ")
    return float(np.abs(np.linalg.eigvalsh(a.matrix - b.matrix)).sum())


def partial_trace(rho: DensityOperator, dims: tuple[int, int], keep: int) -> DensityOperator:
    """Reduced state of a bipartite operator with A-major index ordering.

    ``dims = (dA, dB)`` must factor ``rho.dim``; ``keep`` is 0 for the A
    factor, 1 for B.
    """
    da, db = int(dims[0]), int(dims[1])
    if da * db != rho.dim:
        raise ShapeMismatchError(f"dims {da}x{db} do not factor {rho.dim}")
    if keep not in (0, 1):
        raise ValueError("keep must be 0 (first factor) or 1 (second factor)")
    r = rho.matrix.reshape(da, db, da, db)
    red = np.einsum("ijkj->ik", r) if keep == 0 else np.einsum("ijil->jl", r)
    return DensityOperator(red)


def tensor_power(psi: PureState, n: int) -> PureState:
    """n-fold tensor power of a pure state, capped by the dense dimension budget."""
    if n < 1:
        raise ValueError("tensor power needs n >= 1")
    total = psi.dim**n
    if total > max_dim():
        raise ResourceLimitError(f"dim {psi.dim}**{n} = {total} exceeds cap {max_dim()}")
    out = psi.amplitudes
    for _ in range(n - 1):
        out = np.kron(out, psi.amplitudes)
    return PureState(out)


# ---------------------------------------------------------------------------
# JSON wire format.  Complex scalars serialize as [re, im]; matrices are
# row-major lists of rows.  Readers re-validate all invariants on load.

def complex_matrix_to_json(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def complex_matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(entry[0], entry[1]) for entry in row] for row in rows], dtype=complex)


def density_to_json(rho: DensityOperator) -> dict:
    return {"dim": rho.dim, "matrix": complex_matrix_to_json(rho.matrix)}


def density_from_json(obj: dict) -> DensityOperator:
    m = complex_matrix_from_json(obj["matrix"])
    if "dim" in obj and int(obj["dim"]) != m.shape[0]:
        raise InvalidStateError(f"declared dim {obj['dim']} but matrix is {m.shape[0]}x{m.shape[1]}")
    return DensityOperator(m)


def pure_state_to_json(psi: PureState) -> dict:
    return {"dim": psi.dim, "amplitudes": [[float(z.real), float(z.imag)] for z in psi.amplitudes]}


def pure_state_from_json(obj: dict) -> PureState:
    v = np.array([complex(a, b) for a, b in obj["amplitudes"]], dtype=complex)
    if "dim" in obj and int(obj["dim"]) != v.size:
        raise InvalidStateError(f"declared dim {obj['dim']} but vector has {v.size} entries")
    return PureState(v)
