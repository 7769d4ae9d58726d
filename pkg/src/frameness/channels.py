"""Quantum channels in Kraus form and the unital-idempotent calculus.

The central fact used downstream: when a trace-preserving map is unital and
idempotent, the minimum relative-entropy distance from a state rho to the
channel's image is the entropy gap S(E(rho)) - S(rho), attained at E(rho)
itself.  :func:`relative_entropy_to_image` evaluates that gap after checking
both preconditions; the generators at the bottom produce test channels going
beyond group twirls (pinchings and conditional expectations onto random
block algebras).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sampling import haar_unitary, random_density_operator
from .states import (
    DensityOperator,
    FramenessError,
    ShapeMismatchError,
    complex_matrix_from_json,
    complex_matrix_to_json,
    von_neumann_entropy,
)

KRAUS_TOL = 1e-10
UNITAL_TOL = 1e-9
# Composition squares rounding error, so the superoperator check is looser
# than the state-level tolerances.
IDEMPOTENT_TOL = 1e-8
COMMUTANT_TOL = 1e-9


class ChannelPreconditionError(FramenessError):
    """An operation requires a unital and/or idempotent channel."""


class KrausChannel:
    """Completely positive trace-preserving map E(rho) = sum_a E_a rho E_a^dag."""

    __slots__ = ("dim", "kraus")

    def __init__(self, kraus):
        ops = [np.asarray(k, dtype=complex) for k in kraus]
        if not ops:
            raise FramenessError("a channel needs at least one Kraus operator")
        d = ops[0].shape[0]
        if any(k.shape != (d, d) for k in ops):
            raise ShapeMismatchError("Kraus operators must share one square shape")
        total = sum(k.conj().T @ k for k in ops)
        dev = float(np.abs(total - np.eye(d)).max())
        if dev > KRAUS_TOL:
            raise FramenessError(f"sum E^dag E deviates from identity by {dev:.3e}")
        for k in ops:
            k.setflags(write=False)
        self.dim = d
        self.kraus = tuple(ops)

    def apply_matrix(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=complex)
        if x.shape != (self.dim, self.dim):
            raise ShapeMismatchError(f"operator shape {x.shape} does not match dim {self.dim}")
        out = np.zeros_like(x)
        for k in self.kraus:
            out += k @ x @ k.conj().T
        return out

    def apply(self, rho: DensityOperator) -> DensityOperator:
        return DensityOperator(self.apply_matrix(rho.matrix))

    def adjoint_apply(self, a: np.ndarray) -> np.ndarray:
        """Heisenberg-picture action sum_a E_a^dag A E_a (Hilbert-Schmidt adjoint)."""
        a = np.asarray(a, dtype=complex)
        if a.shape != (self.dim, self.dim):
            raise ShapeMismatchError(f"operator shape {a.shape} does not match dim {self.dim}")
        out = np.zeros_like(a)
        for k in self.kraus:
            out += k.conj().T @ a @ k
        return out

    def superoperator(self) -> np.ndarray:
        """dim^2 x dim^2 matrix acting on row-major vectorized operators."""
        m = np.zeros((self.dim**2, self.dim**2), dtype=complex)
        for k in self.kraus:
            m += np.kron(k, k.conj())
        return m

    def is_unital(self, tol: float = UNITAL_TOL) -> bool:
        eye = np.eye(self.dim)
        return float(np.abs(self.apply_matrix(eye) - eye).max()) <= tol

    def is_idempotent(self, tol: float = IDEMPOTENT_TOL) -> bool:
        m = self.superoperator()
        return float(np.abs(m @ m - m).max()) <= tol

    def __repr__(self):
        return f"KrausChannel(dim={self.dim}, n_kraus={len(self.kraus)})"


def identity_channel(dim: int) -> KrausChannel:
    return KrausChannel([np.eye(dim)])


def kraus_channel_to_json(ch: KrausChannel) -> dict:
    return {"dim": ch.dim, "kraus": [complex_matrix_to_json(k) for k in ch.kraus]}


def kraus_channel_from_json(obj: dict) -> KrausChannel:
    ch = KrausChannel([complex_matrix_from_json(k) for k in obj["kraus"]])
    if "dim" in obj and int(obj["dim"]) != ch.dim:
        raise ShapeMismatchError(f"declared dim {obj['dim']} but operators are {ch.dim}x{ch.dim}")
    return ch


def commutant_fixed_point_check(ch: KrausChannel, tau: np.ndarray, tol: float = COMMUTANT_TOL) -> bool:
    """True iff tau commutes with every Kraus operator and its adjoint.

    For unital channels the commutant of {E_a, E_a^dag} is exactly the fixed
    point algebra, so a True verdict is cross-checked against the Schrodinger
    action on tau/Tr(tau).
    """
    if not ch.is_unital():
        raise ChannelPreconditionError("commutant fixed-point test needs a unital channel")
    tau = np.asarray(tau, dtype=complex)
    for k in ch.kraus:
        for e in (k, k.conj().T):
            if float(np.abs(tau @ e - e @ tau).max()) > tol:
                return False
    tr = complex(np.trace(tau))
    if abs(tr) > 1e-12:
        state = tau / tr
        dev = float(np.abs(ch.apply_matrix(state) - state).max())
        if dev > tol:
            raise FramenessError(
                f"commuting operator not fixed by the channel (dev {dev:.3e}); tolerances inconsistent"
            )
    return True


@dataclass
class ImageFixReport:
    """Numerical comparison of Image(E) and Fix(E) on sampled states."""

    idempotent: bool
    all_image_states_fixed: bool
    max_refix_deviation: float
    samples: int

    @property
    def consistent(self) -> bool:
        return self.idempotent == self.all_image_states_fixed


def image_fix_equivalence_check(ch: KrausChannel, samples: int = 50, seed: int = 0,
                                tol: float = 1e-8) -> ImageFixReport:
    """Check Image(E) = Fix(E) against idempotence of the superoperator.

    For ``samples`` random states rho the report records whether E(E(rho))
    equals E(rho); by the idempotence criterion both verdicts must agree.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        rho = random_density_operator(ch.dim, rng)
        image = ch.apply_matrix(rho.matrix)
        worst = max(worst, float(np.abs(ch.apply_matrix(image) - image).max()))
    return ImageFixReport(
        idempotent=ch.is_idempotent(),
        all_image_states_fixed=worst <= tol,
        max_refix_deviation=worst,
        samples=samples,
    )


def relative_entropy_to_image(ch: KrausChannel, rho: DensityOperator) -> float:
    """min over sigma in Image(E) of S(rho || sigma), as the entropy gap.

    Requires E unital and idempotent; then the minimum equals
    S(E(rho)) - S(rho) and is attained at sigma = E(rho).
    """
    if not ch.is_unital():
        raise ChannelPreconditionError("channel is not unital")
    if not ch.is_idempotent():
        raise ChannelPreconditionError("channel is not idempotent")
    return von_neumann_entropy(ch.apply(rho)) - von_neumann_entropy(rho)


# ---------------------------------------------------------------------------
# Generators for unital idempotent test channels


def pinching_channel(projectors) -> KrausChannel:
    """rho -> sum_k P_k rho P_k for a complete family of orthogonal projectors."""
    return KrausChannel([np.asarray(p, dtype=complex) for p in projectors])


def basis_dephasing_channel(dim: int, unitary: np.ndarray | None = None) -> KrausChannel:
    """Rank-1 pinching along the columns of ``unitary`` (computational basis if None)."""
    u = np.eye(dim, dtype=complex) if unitary is None else np.asarray(unitary, dtype=complex)
    return KrausChannel([np.outer(u[:, k], u[:, k].conj()) for k in range(dim)])


def conditional_expectation_channel(block_dims, unitary: np.ndarray | None = None) -> KrausChannel:
    """Projection onto a block algebra: sectors (m_q x n_q) with the m factor scrambled.

    ``block_dims`` is a list of (m_q, n_q) pairs with sum m_q * n_q equal to
    the total dimension; on each sector the channel replaces the m factor by
    the maximally mixed state and acts as the identity on the n factor.  An
    optional unitary conjugates the whole block structure.
    """
    dim = sum(m * n for m, n in block_dims)
    u = np.eye(dim, dtype=complex) if unitary is None else np.asarray(unitary, dtype=complex)
    kraus = []
    offset = 0
    for m, n in block_dims:
        for r in range(m):
            for s in range(m):
                op = np.zeros((dim, dim), dtype=complex)
                rows = offset + r * n + np.arange(n)
                cols = offset + s * n + np.arange(n)
                op[rows, cols] = 1.0 / np.sqrt(m)
                kraus.append(u @ op @ u.conj().T)
        offset += m * n
    return KrausChannel(kraus)


def twirl_channel(unitaries) -> KrausChannel:
    """Uniform average over a finite set of unitaries, rho -> mean U rho U^dag."""
    us = [np.asarray(u, dtype=complex) for u in unitaries]
    n = len(us)
    return KrausChannel([u / np.sqrt(n) for u in us])


def _random_block_dims(dim: int, rng: np.random.Generator, with_multiplicity: bool):
    """Random sector structure (m_q, n_q) with sum m_q n_q = dim."""
    blocks = []
    left = dim
    while left > 0:
        if with_multiplicity and left >= 4 and rng.random() < 0.5:
            m = int(rng.integers(2, int(np.sqrt(left)) + 1))
            n = int(rng.integers(1, left // m + 1))
        else:
            m = int(rng.integers(1, left + 1))
            n = 1
        blocks.append((m, n))
        left -= m * n
    return blocks


def random_unital_idempotent_channel(dim: int, rng: np.random.Generator) -> KrausChannel:
    """Sample one unital idempotent channel: pinching, finite twirl, or block projection.

    The twirl branch averages over a random cyclic phase group (order <= 8)
    conjugated by a Haar unitary; the other branches build pinchings and
    conditional expectations with random block structure.
    """
    kind = rng.integers(0, 3)
    u = haar_unitary(dim, rng)
    if kind == 0:
        # pinching onto a random partition of a rotated basis
        dims = [m for m, _ in _random_block_dims(dim, rng, with_multiplicity=False)]
        projectors = []
        offset = 0
        for m in dims:
            block = u[:, offset:offset + m]
            projectors.append(block @ block.conj().T)
            offset += m
        return pinching_channel(projectors)
    if kind == 1:
        order = int(rng.integers(2, 9))
        charges = rng.integers(0, order, size=dim)
        gens = [u @ np.diag(np.exp(2j * np.pi * k * charges / order)) @ u.conj().T
                for k in range(order)]
        return twirl_channel(gens)
    return conditional_expectation_channel(_random_block_dims(dim, rng, with_multiplicity=True), u)
