"""Seeded random matrices and states used by the property suites.

Density operators are sampled by drawing eigenvalues uniformly from the
probability simplex and conjugating by a Haar unitary, so full rank holds
almost surely and the distribution is unitarily invariant by construction.
"""

from __future__ import annotations

import numpy as np

from .states import DensityOperator, PureState


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via phase-corrected QR of a Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases.conj()


def random_pure_state(dim: int, rng: np.random.Generator) -> PureState:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(v / np.linalg.norm(v))


def random_density_operator(dim: int, rng: np.random.Generator) -> DensityOperator:
    lams = rng.dirichlet(np.ones(dim))
    u = haar_unitary(dim, rng)
    return DensityOperator((u * lams) @ u.conj().T)


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (z + z.conj().T) / 2.0
