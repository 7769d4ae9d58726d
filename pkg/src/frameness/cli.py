"""Command-line front end: every experiment family as one subcommand.

JSON is the canonical output format (CSV is a row projection of the same
data); every artifact embeds the toolkit version, the parsed configuration
and the seed, so identical invocations produce byte-identical files.

Exit codes: 0 success, 2 validation failure, 3 resource limit exceeded,
64 unknown subcommand.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .asymmetry import (
    TwirlOperation,
    g_asymmetry,
    max_su2_asymmetry_value,
    max_u1_asymmetry_value,
    maximal_asymmetry_state,
)
from .channels import random_unital_idempotent_channel, relative_entropy_to_image
from .entanglement import (
    BipartiteState,
    bell_diagonal_state,
    optimize_dephasing_bound,
    optimize_two_qubit_bound,
)
from .estimation import holevo_bound_check, random_povm
from .groups import (
    ChargeGrading,
    build_collective_spin_rep,
    charge_grading_from_json,
    cyclic_phase_rep,
    finite_rep_from_json,
    quaternion_rep,
    validate_finite_rep,
    z2_phase_flip_rep,
)
from .sampling import random_density_operator
from .scaling import (
    GAUSSIAN_CONSTANT_BITS,
    GAUSSIAN_CONSTANT_HALF,
    finite_group_bound_check,
    lie_group_log_bound,
    regularized_asymmetry_table,
    relinearized_monotone,
    u1_ncopy_asymmetry,
    variance_discontinuity_witness,
)
from .states import (
    DensityOperator,
    FramenessError,
    ProbabilityDistribution,
    PureState,
    ResourceLimitError,
    density_from_json,
    density_to_json,
    pure_state_from_json,
    pure_state_to_json,
    relative_entropy,
)

_USAGE = """\
usage: frameness <command> [options]

commands:
  asymmetry   asymmetry of a state under a group twirl
  twirl       dump the twirled state
  extremal    maximal-asymmetry state and its value
  scaling     N-copy asymmetry table against the Gaussian-entropy model
  bounds      finite-group / Lie-group bound reports
  ree         dephasing bound sandwich on the relative entropy of entanglement
  estimate    Holevo-bound estimation report for a group orbit
  verify      run the seeded invariant suite

run `frameness <command> --help` for the options of each command.
"""

COMMANDS = {}


def _command(name):
    def deco(fn):
        COMMANDS[name] = fn
        return fn
    return deco


def _parser(name: str, description: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=f"frameness {name}", description=description)
    p.add_argument("--seed", type=int, default=0, help="seed recorded in the output")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output path (stdout if omitted)")
    return p


def _meta(command: str, ns: argparse.Namespace) -> dict:
    config = {}
    for key, value in sorted(vars(ns).items()):
        if key in ("out", "format") or value is None:
            continue
        config[key] = value if isinstance(value, (int, float, str, bool)) else str(value)
    return {
        "command": command,
        "config": config,
        "seed": int(ns.seed),
        "toolkit": "frameness",
        "version": __version__,
    }


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _emit_json(meta: dict, result, out):
    _write(json.dumps({"meta": meta, "result": result}, indent=2, sort_keys=True) + "\n", out)


def _emit_csv(meta: dict, header, rows, out):
    buf = io.StringIO()
    for key in ("toolkit", "version", "command", "seed"):
        buf.write(f"# {key}={meta[key]}\n")
    buf.write("# config=" + json.dumps(meta["config"], sort_keys=True) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    _write(buf.getvalue(), out)


def _emit(ns, meta, result, header, rows):
    if ns.format == "csv":
        _emit_csv(meta, header, rows, ns.out)
    else:
        _emit_json(meta, result, ns.out)


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _load_state(path: str) -> DensityOperator:
    obj = _load_json(path)
    if "amplitudes" in obj:
        return pure_state_from_json(obj).projector()
    return density_from_json(obj)


def _load_finite_rep(path: str):
    rep = finite_rep_from_json(_load_json(path))
    report = validate_finite_rep(rep)
    if not report.ok:
        raise FramenessError(f"invalid finite-group representation:\n{report}")
    return rep


def _group_args(p: argparse.ArgumentParser):
    p.add_argument("--group", choices=("finite", "u1", "su2"), required=True)
    p.add_argument("--rep", help="finite group JSON (order/table/unitaries)")
    p.add_argument("--charges",
                   help="charge grading JSON (dim/charges); defaults to one charge per level")
    p.add_argument("--qubits", type=int, help="register size for the collective su2 action")


def _build_twirl(ns, dim_hint: int | None = None) -> TwirlOperation:
    if ns.group == "finite":
        if not ns.rep:
            raise ValueError("--group finite needs --rep FILE")
        return TwirlOperation.finite(_load_finite_rep(ns.rep))
    if ns.group == "u1":
        if ns.charges:
            return TwirlOperation.u1(charge_grading_from_json(_load_json(ns.charges)))
        if dim_hint is None:
            raise ValueError("--group u1 needs --charges FILE")
        return TwirlOperation.u1(ChargeGrading(list(range(dim_hint))))
    if ns.qubits is None:
        raise ValueError("--group su2 needs --qubits N")
    return TwirlOperation.su2(build_collective_spin_rep(ns.qubits))


@_command("asymmetry")
def _cmd_asymmetry(args) -> int:
    p = _parser("asymmetry", "asymmetry of a state under a group twirl")
    _group_args(p)
    p.add_argument("--state", required=True, help="state JSON (density or pure)")
    ns = p.parse_args(args)
    rho = _load_state(ns.state)
    twirl = _build_twirl(ns, dim_hint=rho.dim)
    res = g_asymmetry(twirl, rho)
    result = {
        "asymmetry": res.asymmetry,
        "entropy_in": res.entropy_in,
        "entropy_out": res.entropy_out,
    }
    _emit(ns, _meta("asymmetry", ns), result,
          ("asymmetry", "entropy_in", "entropy_out"),
          [(res.asymmetry, res.entropy_in, res.entropy_out)])
    return 0


@_command("twirl")
def _cmd_twirl(args) -> int:
    p = _parser("twirl", "dump the twirled state")
    _group_args(p)
    p.add_argument("--state", required=True)
    ns = p.parse_args(args)
    rho = _load_state(ns.state)
    twirl = _build_twirl(ns, dim_hint=rho.dim)
    res = g_asymmetry(twirl, rho)
    result = {"asymmetry": res.asymmetry, "state": density_to_json(res.twirled_state)}
    rows = [
        (i, j, float(z.real), float(z.imag))
        for i, row in enumerate(res.twirled_state.matrix)
        for j, z in enumerate(row)
    ]
    _emit(ns, _meta("twirl", ns), result, ("row", "col", "re", "im"), rows)
    return 0


@_command("extremal")
def _cmd_extremal(args) -> int:
    p = _parser("extremal", "maximal-asymmetry state and its value")
    p.add_argument("--group", choices=("u1", "su2"), required=True)
    p.add_argument("--n-max", type=int, help="largest charge for the u1 family")
    p.add_argument("--qubits", type=int, help="register size for su2")
    ns = p.parse_args(args)
    if ns.group == "u1":
        if ns.n_max is None:
            raise ValueError("--group u1 needs --n-max")
        state = maximal_asymmetry_state("u1", n_max=ns.n_max)
        twirl = TwirlOperation.u1(ChargeGrading(list(range(ns.n_max + 1))))
        closed = max_u1_asymmetry_value(ns.n_max)
    else:
        if ns.qubits is None:
            raise ValueError("--group su2 needs --qubits")
        rep = build_collective_spin_rep(ns.qubits)
        state = maximal_asymmetry_state("su2", rep=rep)
        twirl = TwirlOperation.su2(rep)
        closed = max_su2_asymmetry_value(ns.qubits // 2)
    measured = g_asymmetry(twirl, state.projector()).asymmetry
    result = {"asymmetry": measured, "closed_form": closed, "state": pure_state_to_json(state)}
    _emit(ns, _meta("extremal", ns), result,
          ("asymmetry", "closed_form"), [(measured, closed)])
    return 0


def _per_copy_distribution(ns) -> ProbabilityDistribution:
    if ns.state:
        if not ns.charges:
            raise ValueError("--state also needs --charges to define the per-copy distribution")
        grading = charge_grading_from_json(_load_json(ns.charges))
        rho = _load_state(ns.state)
        weights = np.zeros(int(grading.charges.max()) + 1)
        diag = np.real(np.diagonal(rho.matrix))
        for c, w in zip(grading.charges, diag):
            weights[c] += w
        return ProbabilityDistribution(weights)
    return ProbabilityDistribution([1.0 - ns.p, ns.p])


def _default_n_list(n_top: int):
    ladder = [1, 2, 5, 10, 20, 50, 100, 150, 200, 500, 1000]
    ns = sorted({n for n in ladder if n <= n_top} | {n_top})
    return ns


@_command("scaling")
def _cmd_scaling(args) -> int:
    p = _parser("scaling", "N-copy asymmetry against the Gaussian-entropy model")
    p.add_argument("--p", type=float, default=0.5, help="per-copy Bernoulli weight on charge 1")
    p.add_argument("--state", help="per-copy pure state JSON (with --charges)")
    p.add_argument("--charges", help="charge grading JSON for --state")
    p.add_argument("--copies", type=int, default=200, help="largest N tabulated")
    p.add_argument("--n-list", help="comma-separated copy counts, overrides the ladder")
    p.add_argument("--constant", choices=("bits", "half"), default="bits",
                   help="additive model constant: (1/2)log2(e) or the literal 1/2")
    ns = p.parse_args(args)
    per_copy = _per_copy_distribution(ns)
    n_list = ([int(x) for x in ns.n_list.split(",")] if ns.n_list else _default_n_list(ns.copies))
    constant = GAUSSIAN_CONSTANT_BITS if ns.constant == "bits" else GAUSSIAN_CONSTANT_HALF
    report = regularized_asymmetry_table(per_copy, n_list, constant)
    result = {
        "model": report.model,
        "variance": report.variance,
        "rows": [
            {"N": r.copies, "A_bits": r.asymmetry, "model_bits": r.model_value,
             "gap_bits": r.gap, "A_over_N": r.a_over_n}
            for r in report.rows
        ],
    }
    _emit(ns, _meta("scaling", ns), result, report.CSV_HEADER, list(report.csv_rows()))
    return 0


@_command("bounds")
def _cmd_bounds(args) -> int:
    p = _parser("bounds", "finite-group / Lie-group bound reports")
    _group_args(p)
    p.add_argument("--state", help="base state for the finite-group N-copy check")
    p.add_argument("--copies", type=int, default=3)
    ns = p.parse_args(args)
    meta = _meta("bounds", ns)
    if ns.group == "finite":
        rep = _load_finite_rep(ns.rep) if ns.rep else quaternion_rep()
        rho = _load_state(ns.state) if ns.state else random_density_operator(
            rep.dim, np.random.default_rng(ns.seed))
        report = finite_group_bound_check(rep, rho, ns.copies)
        result = {
            "group_order": report.group_order,
            "ok": report.ok,
            "rows": [{"N": r.copies, "A_bits": r.asymmetry, "bound_bits": r.bound, "ok": r.ok}
                     for r in report.rows],
        }
        rows = [(r.copies, r.asymmetry, r.bound, r.ok) for r in report.rows]
        _emit(ns, meta, result, ("N", "A_bits", "bound_bits", "ok"), rows)
        return 0
    if ns.group == "su2":
        if ns.qubits is None:
            raise ValueError("--group su2 needs --qubits")
        rep = build_collective_spin_rep(ns.qubits)
        bound = lie_group_log_bound(ns.qubits, 2)
        state = maximal_asymmetry_state("su2", rep=rep).projector()
        measured = g_asymmetry(TwirlOperation.su2(rep), state).asymmetry
        result = {
            "exact_bits": bound.exact_bits,
            "asymptotic_bits": bound.asymptotic_bits,
            "measured_bits": measured,
            "ok": measured <= bound.exact_bits + 1e-8,
        }
        _emit(ns, meta, result,
              ("exact_bits", "asymptotic_bits", "measured_bits", "ok"),
              [(bound.exact_bits, bound.asymptotic_bits, measured, result["ok"])])
        return 0
    raise ValueError("bounds supports --group finite or --group su2")


@_command("ree")
def _cmd_ree(args) -> int:
    p = _parser("ree", "dephasing bound sandwich on the relative entropy of entanglement")
    p.add_argument("--family", choices=("bell-diagonal",), default="bell-diagonal")
    p.add_argument("--p", type=float, help="mixing weight for the bell-diagonal family")
    p.add_argument("--sweep", help="comma-separated p values; emits one row per value")
    p.add_argument("--state", help="bipartite state JSON (overrides the family)")
    p.add_argument("--dims", default="2,2", help="dA,dB for --state")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--side", choices=("A", "B"), default="B",
                   help="subsystem to dephase for non-qubit inputs")
    p.add_argument("--random-trials", type=int, default=0,
                   help="random basis search size when B is not a qubit")
    ns = p.parse_args(args)
    meta = _meta("ree", ns)

    if ns.sweep:
        rows = []
        for pv in (float(x) for x in ns.sweep.split(",")):
            rep = optimize_two_qubit_bound(bell_diagonal_state(pv), grid=ns.grid, side=ns.side)
            rows.append((pv, rep.upper, rep.lower, rep.theta, rep.gamma, rep.tight))
        result = [
            {"p": r[0], "upper": r[1], "lower": r[2], "theta": r[3], "gamma": r[4], "tight": r[5]}
            for r in rows
        ]
        _emit(ns, meta, result, ("p", "upper", "lower", "theta", "gamma", "tight"), rows)
        return 0

    if ns.state:
        da, db = (int(x) for x in ns.dims.split(","))
        bip = BipartiteState(da, db, _load_state(ns.state))
    else:
        if ns.p is None:
            raise ValueError("ree needs --p, --sweep or --state")
        bip = bell_diagonal_state(ns.p)
    if bip.dim_a == 2 and bip.dim_b == 2:
        report = optimize_two_qubit_bound(bip, grid=ns.grid, side=ns.side)
    else:
        report = optimize_dephasing_bound(bip, random_trials=ns.random_trials,
                                          seed=ns.seed, side=ns.side)
    result = report.to_json_dict()
    header = tuple(sorted(result))
    _emit(ns, meta, result, header, [tuple(result[k] for k in header)])
    return 0


@_command("estimate")
def _cmd_estimate(args) -> int:
    p = _parser("estimate", "Holevo-bound estimation report for a group orbit")
    p.add_argument("--rep", help="finite group JSON; defaults to the qubit Z2 {I, Z}")
    p.add_argument("--charges", help="charge grading JSON for a u1 phase subgroup")
    p.add_argument("--subgroup", type=int, default=0,
                   help="order M of the Z_M phase subgroup (with --charges)")
    p.add_argument("--state", required=True)
    p.add_argument("--povms", type=int, default=0, help="extra random POVMs to try")
    ns = p.parse_args(args)
    if ns.charges and ns.subgroup:
        grading = charge_grading_from_json(_load_json(ns.charges))
        rep = cyclic_phase_rep(grading.charges, ns.subgroup)
    elif ns.rep:
        rep = _load_finite_rep(ns.rep)
    else:
        rep = z2_phase_flip_rep()
    rho = _load_state(ns.state)
    rng = np.random.default_rng(ns.seed)
    extra = [random_povm(rho.dim, rep.order, rng) for _ in range(ns.povms)]
    report = holevo_bound_check(rep, rho, povms=extra)
    result = {
        "A_G": report.asymmetry,
        "best_info": report.best_info,
        "povm": report.best_label,
        "ratio": report.ratio,
        "ok": report.ok,
        "tried": [{"povm": k, "info": v} for k, v in report.results],
    }
    _emit(ns, _meta("estimate", ns), result,
          ("povm", "info"), [(k, v) for k, v in report.results])
    return 0


# ---------------------------------------------------------------------------
# verify: the seeded invariant battery


def _verify_checks(seed: int):
    rng = np.random.default_rng(seed)

    def klein():
        worst = 0.0
        for _ in range(20):
            a = random_density_operator(4, rng)
            b = random_density_operator(4, rng)
            worst = min(worst, relative_entropy(a, b))
        return worst >= -1e-9, f"min sampled relative entropy {worst:.2e}"

    def twirl_channels():
        reps = [TwirlOperation.finite(z2_phase_flip_rep()),
                TwirlOperation.finite(quaternion_rep()),
                TwirlOperation.u1(ChargeGrading([0, 1, 1, 2])),
                TwirlOperation.su2(build_collective_spin_rep(2))]
        for tw in reps:
            ch = tw.kraus_channel()
            if not (ch.is_unital() and ch.is_idempotent()):
                return False, f"{tw.kind} twirl failed unital/idempotent"
        return True, "finite/u1/su2 twirls unital and idempotent"

    def minimizer_identity():
        gradings = TwirlOperation.u1(ChargeGrading([0, 1, 2]))
        worst = 0.0
        for _ in range(10):
            rho = random_density_operator(3, rng)
            res = g_asymmetry(gradings, rho)
            worst = max(worst, abs(res.asymmetry - relative_entropy(rho, res.twirled_state)))
        return worst <= 1e-8, f"max |A - S(rho||G(rho))| = {worst:.2e}"

    def channel_identity():
        worst = 0.0
        for _ in range(5):
            ch = random_unital_idempotent_channel(5, rng)
            rho = random_density_operator(5, rng)
            gap = relative_entropy_to_image(ch, rho)
            worst = max(worst, abs(gap - relative_entropy(rho, ch.apply(rho))))
        return worst <= 1e-8, f"max identity deviation {worst:.2e}"

    def holevo():
        plus = PureState(np.array([1, 1]) / math.sqrt(2)).projector()
        report = holevo_bound_check(z2_phase_flip_rep(), plus,
                                    povms=[random_povm(2, 2, rng) for _ in range(3)])
        return report.ok and abs(report.best_info - 1.0) <= 1e-8, \
            f"best info {report.best_info:.6f} vs cap {report.asymmetry:.6f}"

    def finite_bound():
        rho = random_density_operator(2, rng)
        rep_ok = finite_group_bound_check(quaternion_rep(), rho, 2).ok
        return rep_ok, "A_G(rho^N) <= log2|G| for Q8, N <= 2"

    def gaussian_law():
        a200 = u1_ncopy_asymmetry([0.5, 0.5], 200)
        model = 0.5 * math.log2(2 * math.pi * 200 * 0.25) + GAUSSIAN_CONSTANT_BITS
        return abs(a200 - model) <= 0.02 and a200 / 200 <= 0.05, \
            f"A(200) = {a200:.5f}, model {model:.5f}"

    def witness():
        report = variance_discontinuity_witness([8, 16, 64, 256])
        return report.trace_distances_decreasing and report.ratios_increasing, \
            "trace distance down, variance gap / log2 n up"

    def relinearized():
        report = relinearized_monotone([0.5, 0.5], [100, 200])
        return report.relative_change(100, 200) < 0.02, \
            f"L(A)/N change {report.relative_change(100, 200):.2e}"

    def ree_family():
        report = optimize_two_qubit_bound(bell_diagonal_state(0.75))
        target = 1.0 - (-(0.75 * math.log2(0.75) + 0.25 * math.log2(0.25)))
        return report.tight and abs(report.upper - target) <= 1e-4, \
            f"upper {report.upper:.6f}, lower {report.lower:.6f}"

    return [
        ("klein_nonnegativity", klein),
        ("twirl_channels_unital_idempotent", twirl_channels),
        ("asymmetry_equals_distance_to_twirl", minimizer_identity),
        ("entropy_gap_equals_distance_to_image", channel_identity),
        ("holevo_cap_and_z2_saturation", holevo),
        ("finite_group_bound", finite_bound),
        ("gaussian_entropy_law", gaussian_law),
        ("variance_discontinuity_witness", witness),
        ("relinearized_monotone_plateau", relinearized),
        ("bell_diagonal_bound_tight", ree_family),
    ]


@_command("verify")
def _cmd_verify(args) -> int:
    p = _parser("verify", "run the seeded invariant suite")
    ns = p.parse_args(args)
    results = []
    for name, check in _verify_checks(ns.seed):
        ok, detail = check()
        results.append({"check": name, "ok": bool(ok), "detail": detail})
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    result = {"all_ok": all(r["ok"] for r in results), "checks": results}
    if ns.out or ns.format == "csv":
        _emit(ns, _meta("verify", ns), result, ("check", "ok", "detail"),
              [(r["check"], r["ok"], r["detail"]) for r in results])
    return 0 if result["all_ok"] else 2


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(_USAGE)
        return 0
    if argv[0] in ("--version",):
        sys.stdout.write(f"frameness {__version__}\n")
        return 0
    name, rest = argv[0], argv[1:]
    if name not in COMMANDS:
        sys.stderr.write(f"unknown command: {name}\n\n{_USAGE}")
        return 64
    try:
        return COMMANDS[name](rest)
    except SystemExit as exc:  # argparse --help or usage errors
        return int(exc.code or 0)
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return 3
    except (FramenessError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
