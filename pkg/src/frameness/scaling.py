"""Many-copy behavior of the asymmetry: exact convolution, bounds, witnesses.

For a pure state with 1-dimensional charge sectors, the asymmetry of N copies
is the Shannon entropy of the N-fold convolution of the single-copy charge
distribution, so the whole N-sweep runs on distributions without ever
materializing the 2^N-dimensional state.  The convolved entropy approaches
the discrete-Gaussian value

    (1/2) log2(2 pi N V) + c,

where c = (1/2) log2(e) in bits (the literal constant 1/2 of the natural-log
convention is available as ``GAUSSIAN_CONSTANT_HALF``).  Dividing by N sends
the asymmetry to zero; re-linearizing through L(x) = 2^(2x) instead recovers
a quantity proportional to the single-copy charge variance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .asymmetry import TwirlOperation, g_asymmetry
from .groups import ChargeGrading, CollectiveSpinRep, FiniteGroupRep, symmetric_subspace_dimension
from .states import (
    DensityOperator,
    ProbabilityDistribution,
    PureState,
    ResourceLimitError,
    max_dim,
    shannon_entropy,
    trace_distance,
)

GAUSSIAN_CONSTANT_BITS = 0.5 * math.log2(math.e)
GAUSSIAN_CONSTANT_HALF = 0.5  # natural-log convention, kept for literal reproduction

_MAX_CONVOLVED_SUPPORT = 1 << 22


def number_variance(grading: ChargeGrading, state) -> float:
    """V = Tr(rho N^2) - Tr(rho N)^2 for the grading's number operator."""
    if isinstance(state, PureState):
        weights = np.abs(state.amplitudes) ** 2
    elif isinstance(state, DensityOperator):
        weights = np.real(np.diagonal(state.matrix))
    else:
        raise TypeError("state must be a DensityOperator or PureState")
    if weights.size != grading.dim:
        raise ValueError(f"state dim {weights.size} does not match grading dim {grading.dim}")
    c = grading.charges.astype(float)
    return float(weights @ c**2 - (weights @ c) ** 2)


@dataclass
class NumberDistributionProfile:
    """Exact N-fold convolution of a per-copy charge distribution."""

    per_copy: ProbabilityDistribution
    copies: int
    convolved: ProbabilityDistribution

    def mean(self) -> float:
        w = self.convolved.weights
        return float(w @ np.arange(w.size))

    def variance(self) -> float:
        w = self.convolved.weights
        n = np.arange(w.size)
        return float(w @ n**2 - (w @ n) ** 2)


def convolve_copies(per_copy, n_copies: int) -> NumberDistributionProfile:
    """Dynamic-programming convolution of ``per_copy`` with itself N times."""
    p = per_copy if isinstance(per_copy, ProbabilityDistribution) else ProbabilityDistribution(per_copy)
    if n_copies < 1:
        raise ValueError("need at least one copy")
    support = n_copies * (len(p) - 1) + 1
    if support > _MAX_CONVOLVED_SUPPORT:
        raise ResourceLimitError(f"convolved support {support} exceeds {_MAX_CONVOLVED_SUPPORT}")
    acc = p.weights
    for _ in range(n_copies - 1):
        acc = np.convolve(acc, p.weights)
    return NumberDistributionProfile(p, n_copies, ProbabilityDistribution(acc))


def u1_ncopy_asymmetry(per_copy, n_copies: int) -> float:
    """Asymmetry of N copies of a pure state, from its charge distribution alone."""
    return shannon_entropy(convolve_copies(per_copy, n_copies).convolved)


def gaussian_entropy_model(variance: float, n_copies: int,
                           constant: float = GAUSSIAN_CONSTANT_BITS) -> float:
    """Discrete-Gaussian entropy model (1/2) log2(2 pi N V) + constant."""
    if variance <= 0:
        raise ValueError("gaussian model needs a positive variance")
    return 0.5 * math.log2(2 * math.pi * n_copies * variance) + constant


@dataclass
class ScalingRow:
    copies: int
    asymmetry: float
    model_value: float
    gap: float

    @property
    def a_over_n(self) -> float:
        return self.asymmetry / self.copies


@dataclass
class ScalingReport:
    """Asymmetry vs copy count, against the Gaussian-entropy model."""

    model: str
    variance: float
    rows: list[ScalingRow] = field(default_factory=list)

    CSV_HEADER = ("N", "A_bits", "model_bits", "gap_bits", "A_over_N")

    def csv_rows(self):
        for r in self.rows:
            yield (r.copies, r.asymmetry, r.model_value, r.gap, r.a_over_n)


def regularized_asymmetry_table(per_copy, n_list,
                                constant: float = GAUSSIAN_CONSTANT_BITS) -> ScalingReport:
    """Tabulate exact N-copy asymmetry, the Gaussian model and their gap.

    With a point-mass per-copy distribution every row is zero (the state is
    already invariant); otherwise A/N decays toward zero while the gap to the
    model shrinks, which is the numerical content of the log-N law.
    """
    p = per_copy if isinstance(per_copy, ProbabilityDistribution) else ProbabilityDistribution(per_copy)
    ns = sorted(set(int(n) for n in n_list))
    if not ns or ns[0] < 1:
        raise ValueError("n_list must contain positive copy counts")
    v1 = convolve_copies(p, 1).variance()
    rows = []
    for n in ns:
        a = u1_ncopy_asymmetry(p, n)
        model = gaussian_entropy_model(v1, n, constant) if v1 > 1e-15 else 0.0
        rows.append(ScalingRow(n, a, model, a - model))
    label = f"0.5*log2(2*pi*N*V) + {constant:.6f}"
    return ScalingReport(model=label, variance=v1, rows=rows)


# ---------------------------------------------------------------------------
# Group-family bounds on the N-copy asymmetry


@dataclass
class BoundRow:
    copies: int
    asymmetry: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.asymmetry <= self.bound + 1e-8


@dataclass
class FiniteGroupBoundReport:
    group_order: int
    rows: list[BoundRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def finite_group_bound_check(rep: FiniteGroupRep, rho: DensityOperator,
                             n_max: int) -> FiniteGroupBoundReport:
    """Check A_G(rho^(x)N) <= log2|G| for N = 1..n_max by explicit twirling.

    The N-copy representation acts by T(g)^(x)N, so the bound is independent
    of N; the table makes that visible.
    """
    if rho.dim != rep.dim:
        raise ValueError(f"state dim {rho.dim} does not match representation dim {rep.dim}")
    bound = math.log2(rep.order)
    rows = []
    state = rho.matrix
    unitaries = list(rep.unitaries)
    for n in range(1, n_max + 1):
        if rho.dim**n > max_dim():
            raise ResourceLimitError(f"dim {rho.dim}**{n} exceeds cap {max_dim()}")
        if n > 1:
            state = np.kron(state, rho.matrix)
            unitaries = [np.kron(u, base) for u, base in zip(unitaries, rep.unitaries)]
        ncopy_rep = FiniteGroupRep(rep.table, unitaries)
        result = g_asymmetry(TwirlOperation.finite(ncopy_rep), DensityOperator(state))
        rows.append(BoundRow(n, result.asymmetry, bound))
    return FiniteGroupBoundReport(rep.order, rows)


@dataclass
class LieGroupBound:
    """Design-cardinality bound on the N-copy asymmetry of d-level systems."""

    copies: int
    local_dim: int
    exact_bits: float       # 2 log2 C(N+d-1, d-1)
    asymptotic_bits: float  # 2 (d-1) log2 N


def lie_group_log_bound(n_copies: int, local_dim: int) -> LieGroupBound:
    if n_copies < 2 or local_dim < 2:
        raise ValueError("need n_copies >= 2 and local_dim >= 2")
    d_star = symmetric_subspace_dimension(n_copies, local_dim)
    return LieGroupBound(
        copies=n_copies,
        local_dim=local_dim,
        exact_bits=2.0 * math.log2(d_star),
        asymptotic_bits=2.0 * (local_dim - 1) * math.log2(n_copies),
    )


@dataclass
class Su2BoundReport:
    bound: LieGroupBound
    measured: list[float]

    @property
    def ok(self) -> bool:
        return all(a <= self.bound.exact_bits + 1e-8 for a in self.measured)


def su2_bound_check(rep: CollectiveSpinRep, states) -> Su2BoundReport:
    """Measure collective-SU(2) asymmetries against the qubit design bound."""
    twirl = TwirlOperation.su2(rep)
    measured = [g_asymmetry(twirl, rho).asymmetry for rho in states]
    return Su2BoundReport(lie_group_log_bound(rep.n_qubits, 2), measured)


# ---------------------------------------------------------------------------
# Variance discontinuity witness


def variance_witness_pair(n: int) -> tuple[PureState, PureState, ChargeGrading]:
    """Two nearby superpositions of charges 0 and 2n with variances n^2 and n^2 - 4n.

    The pair converges in trace norm as n grows while the variance gap 4n
    diverges relative to log n, witnessing that the variance fails asymptotic
    continuity even though every relative-entropy distance satisfies it.
    """
    if n <= 4:
        raise ValueError(f"witness needs n > 4, got {n}")
    psi = PureState(np.array([1.0, 1.0]) / math.sqrt(2))
    phi = PureState(np.array([math.sqrt(0.5 - 1 / math.sqrt(n)), math.sqrt(0.5 + 1 / math.sqrt(n))]))
    return psi, phi, ChargeGrading([0, 2 * n])


@dataclass
class WitnessRow:
    n: int
    variance_psi: float
    variance_phi: float
    variance_gap: float
    trace_dist: float
    gap_over_log: float


@dataclass
class WitnessReport:
    rows: list[WitnessRow]

    @property
    def trace_distances_decreasing(self) -> bool:
        t = [r.trace_dist for r in self.rows]
        return all(b < a for a, b in zip(t, t[1:]))

    @property
    def ratios_increasing(self) -> bool:
        r = [r.gap_over_log for r in self.rows]
        return all(b > a for a, b in zip(r, r[1:]))


def variance_discontinuity_witness(n_list) -> WitnessReport:
    """Tabulate the witness pair over n: variances, trace distance, gap / log2 n."""
    rows = []
    for n in sorted(set(int(n) for n in n_list)):
        psi, phi, grading = variance_witness_pair(n)
        v_psi = number_variance(grading, psi)
        v_phi = number_variance(grading, phi)
        td = trace_distance(psi.projector(), phi.projector())
        gap = v_psi - v_phi
        rows.append(WitnessRow(n, v_psi, v_phi, gap, td, gap / math.log2(n)))
    return WitnessReport(rows)


# ---------------------------------------------------------------------------
# Re-linearization


@dataclass
class RelinearizationRow:
    copies: int
    asymmetry: float
    relinearized: float

    @property
    def per_copy(self) -> float:
        return self.relinearized / self.copies


@dataclass
class RelinearizationReport:
    rows: list[RelinearizationRow]
    plateau: float         # L(A)/N at the largest tabulated N
    plateau_target: float  # 2 pi V 2^(2c), the exact large-N limit

    def relative_change(self, n_lo: int, n_hi: int) -> float:
        vals = {r.copies: r.per_copy for r in self.rows}
        return abs(vals[n_hi] - vals[n_lo]) / vals[n_lo]


def relinearized_monotone(per_copy, n_list,
                          constant: float = GAUSSIAN_CONSTANT_BITS) -> RelinearizationReport:
    """Apply L(x) = 2^(2x) to the exact N-copy asymmetry and normalize by N.

    L undoes the logarithm of the Gaussian-entropy law, so L(A)/N settles at
    2 pi V 2^(2c), an extensive quantity proportional to the per-copy charge
    variance (the asymmetry itself regularizes to zero).
    """
    p = per_copy if isinstance(per_copy, ProbabilityDistribution) else ProbabilityDistribution(per_copy)
    ns = sorted(set(int(n) for n in n_list))
    if not ns or ns[0] < 1:
        raise ValueError("n_list must contain positive copy counts")
    v1 = convolve_copies(p, 1).variance()
    rows = []
    for n in ns:
        a = u1_ncopy_asymmetry(p, n)
        rows.append(RelinearizationRow(n, a, 2.0 ** (2.0 * a)))
    target = 2.0 * math.pi * v1 * 2.0 ** (2.0 * constant)
    return RelinearizationReport(rows, rows[-1].per_copy, target)
