"""Command-line interface.

Subcommands: trajectory, verify, montecarlo, sweep, anb-cycles.  Output is
text, JSON (JSON-lines for trajectory rows, a single document elsewhere), or
CSV; every JSON payload names its schema, shipped under collatzlab/schemas/.

Exit codes are a stable contract: 0 success, 1 usage error, 2 step limit or
failed/inconclusive check, 3 resource limit.  Output bytes depend only on the
run configuration: stochastic commands embed their seed, and worker counts
never appear in (or affect) the payload.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import statistics
import sys

import numpy as np

from . import anb as anb_mod
from . import halfsplit as halfsplit_mod
from . import identities as ident_mod
from . import stats as stats_mod
from .dynamics import (
    DEFAULT_MAX_STEPS,
    AnbParams,
    Termination,
    trajectory_general,
    trajectory_odd,
)
from .reference_table import FIXTURE_NAME, REFERENCE_ROWS, SAMPLE_LENGTH
from .sweep import survey_range

EX_OK = 0
EX_USAGE = 1
EX_INCONCLUSIVE = 2
EX_RESOURCE = 3

M_SEED_RANGE = 1 << 20  # residue-shift m values are drawn below this bound


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 - argparse hook
        raise UsageError(message)


def _json_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _json_doc(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _finite(x: float) -> float | str:
    return x if math.isfinite(x) else repr(x)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="collatzlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_traj = sub.add_parser("trajectory", help="print one orbit with step directions")
    p_traj.add_argument("x0", type=int, help="start value")
    p_traj.add_argument(
        "--map",
        choices=["general", "odd", "anb"],
        default="general",
        help="shortcut map, odd-to-odd map, or generalized (a*x+b)/2^k",
    )
    p_traj.add_argument("--a", type=int, default=5, help="multiplier for --map anb")
    p_traj.add_argument("--b", type=int, default=1, help="offset for --map anb")
    p_traj.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    _add_output_args(p_traj)

    p_verify = sub.add_parser("verify", help="run one exhaustive identity check")
    p_verify.add_argument(
        "check",
        choices=["lemma7", "eq2", "bohm", "geom", "anb-eq", "halfsplit"],
        help=(
            "lemma7: residue-class shift law; eq2: odd-trajectory closed form; "
            "bohm: start reconstruction from division exponents; geom: geometric "
            "tail sum; anb-eq: generalized closed form; halfsplit: step tallies "
            "over 1..2^M"
        ),
    )
    p_verify.add_argument("--max-k", type=int, default=12, help="lemma7: largest modulus exponent")
    p_verify.add_argument("--samples", type=int, default=100, help="lemma7/anb-eq: seeded draws")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-x0", type=int, default=9999, help="eq2/bohm: odd-start bound")
    p_verify.add_argument("--max-n", type=int, default=50, help="geom/anb-eq: step bound")
    p_verify.add_argument("--max-m", type=int, default=50, help="geom: extra-step bound")
    p_verify.add_argument("--a", type=int, default=5)
    p_verify.add_argument("--b", type=int, default=1)
    p_verify.add_argument("--M", type=int, default=10, help="halfsplit: range is 1..2^M")
    p_verify.add_argument("--steps", type=int, default=None, help="halfsplit: steps to tally")
    p_verify.add_argument("--lo", type=int, default=None, help="halfsplit: subrange low end")
    p_verify.add_argument("--hi", type=int, default=None, help="halfsplit: subrange high end")
    p_verify.add_argument("--method", choices=["direct", "classes"], default="direct")
    _add_output_args(p_verify)

    p_mc = sub.add_parser("montecarlo", help="seeded 0/1 drift-ratio experiment")
    p_mc.add_argument("--length", type=int, default=SAMPLE_LENGTH, help="bits per sample")
    p_mc.add_argument("--samples", type=int, default=14)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument(
        "--level",
        choices=["95", "98", "99", "all"],
        default="all",
        help="confidence level(s) for the interval block",
    )
    p_mc.add_argument(
        "--fixture",
        choices=[FIXTURE_NAME],
        default=None,
        help="use the embedded published 14-row table instead of generating",
    )
    _add_output_args(p_mc)

    p_sweep = sub.add_parser("sweep", help="walk every start in 1..limit to 1")
    p_sweep.add_argument("--limit", type=int, required=True)
    p_sweep.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p_sweep.add_argument("--threads", type=int, default=1, help="worker processes")
    _add_output_args(p_sweep)

    p_cyc = sub.add_parser("anb-cycles", help="catalog cycles of one (a, b) map")
    p_cyc.add_argument("--a", type=int, default=5)
    p_cyc.add_argument("--b", type=int, default=1)
    p_cyc.add_argument("--limit", type=int, default=100, help="odd starts searched")
    p_cyc.add_argument("--max-steps", type=int, default=10**4)
    _add_output_args(p_cyc)

    return parser


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--output", default=None, help="file path (default: stdout)")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    handlers = {
        "trajectory": _cmd_trajectory,
        "verify": _cmd_verify,
        "montecarlo": _cmd_montecarlo,
        "sweep": _cmd_sweep,
        "anb-cycles": _cmd_cycles,
    }
    try:
        text, code = handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except halfsplit_mod.ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EX_RESOURCE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


# ---------------------------------------------------------------- trajectory


def _cmd_trajectory(args: argparse.Namespace) -> tuple[str, int]:
    if args.x0 < 1:
        raise UsageError("x0 must be >= 1")
    if args.max_steps < 0:
        raise UsageError("max-steps must be >= 0")
    params = None
    cycle = None
    try:
        if args.map == "general":
            traj = trajectory_general(args.x0, max_steps=args.max_steps)
            exponents = [None] * traj.step_count
        elif args.map == "odd":
            traj, pe = trajectory_odd(args.x0, max_steps=args.max_steps)
            exponents = list(pe.exponents)
        else:
            params = AnbParams(a=args.a, b=args.b)
            traj, pe = anb_mod.trajectory_anb(args.x0, params, max_steps=args.max_steps)
            exponents = list(pe.exponents)
            if traj.terminated is Termination.REACHED_CYCLE:
                record = anb_mod.find_cycle(args.x0, params, max_steps=args.max_steps + 1)
                cycle = list(record.members) if record else None
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    header = {
        "type": "header",
        "schema": "collatzlab/trajectory/v1",
        "start": args.x0,
        "map": args.map,
        "a": params.a if params else None,
        "b": params.b if params else None,
        "max_steps": args.max_steps,
    }
    rows = [
        {
            "type": "step",
            "step": i + 1,
            "from": traj.values[i],
            "to": traj.values[i + 1],
            "kind": traj.steps[i].value,
            "exponent": exponents[i],
        }
        for i in range(traj.step_count)
    ]
    summary = {
        "type": "summary",
        "terminated": traj.terminated.value,
        "steps": traj.step_count,
        "final": traj.final,
        "cycle": cycle,
    }
    code = EX_INCONCLUSIVE if traj.terminated is Termination.STEP_LIMIT else EX_OK

    if args.format == "json":
        lines = [_json_line(header)] + [_json_line(r) for r in rows] + [_json_line(summary)]
        return "\n".join(lines) + "\n", code
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["step", "from", "to", "kind", "exponent"])
        for r in rows:
            writer.writerow([r["step"], r["from"], r["to"], r["kind"], r["exponent"] or ""])
        buf.write(f"# terminated={summary['terminated']} final={summary['final']}\n")
        return buf.getvalue(), code
    lines = [
        f"# start={args.x0} map={args.map}"
        + (f" a={params.a} b={params.b}" if params else "")
        + f" max_steps={args.max_steps}"
    ]
    for r in rows:
        k = f" k={r['exponent']}" if r["exponent"] is not None else ""
        lines.append(f"{r['step']:>5} {r['from']} -> {r['to']} {r['kind']}{k}")
    lines.append(f"# terminated={summary['terminated']} steps={summary['steps']} final={summary['final']}")
    if cycle:
        lines.append(f"# cycle={cycle}")
    return "\n".join(lines) + "\n", code


# -------------------------------------------------------------------- verify


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    runners = {
        "lemma7": _verify_lemma7,
        "eq2": _verify_eq2,
        "bohm": _verify_bohm,
        "geom": _verify_geom,
        "anb-eq": _verify_anb_eq,
        "halfsplit": _verify_halfsplit,
    }
    try:
        doc = runners[args.check](args)
    except halfsplit_mod.ResourceLimitError as exc:
        doc = {
            "schema": "collatzlab/verify/v1",
            "check": args.check,
            "parameters": {},
            "checks_run": 0,
            "failures": 0,
            "passed": None,
            "counterexample": None,
            "partial": True,
            "error": str(exc),
            "report": None,
        }
        return _render_verify(doc, args), EX_RESOURCE
    if doc["passed"] is False:
        code = EX_INCONCLUSIVE
    else:
        code = EX_OK
    return _render_verify(doc, args), code


def _verify_doc(check: str, parameters: dict) -> dict:
    return {
        "schema": "collatzlab/verify/v1",
        "check": check,
        "parameters": parameters,
        "checks_run": 0,
        "failures": 0,
        "passed": True,
        "counterexample": None,
        "partial": False,
        "report": None,
    }


def _note_failure(doc: dict, counterexample: dict) -> None:
    doc["failures"] += 1
    doc["passed"] = False
    if doc["counterexample"] is None:
        doc["counterexample"] = counterexample


def _verify_lemma7(args: argparse.Namespace) -> dict:
    if args.max_k < 1:
        raise UsageError("--max-k must be >= 1")
    doc = _verify_doc(
        "lemma7", {"max_k": args.max_k, "samples": args.samples, "seed": args.seed}
    )
    ms = np.random.default_rng(args.seed).integers(0, M_SEED_RANGE, size=args.samples)
    for k in range(1, args.max_k + 1):
        for i in range(1 << k):
            for m in ms:
                res = ident_mod.residue_shift_check(k, int(m), i)
                doc["checks_run"] += 1
                if not res.holds:
                    _note_failure(
                        doc, {"k": k, "m": int(m), "i": i, "lhs": res.lhs, "rhs": res.rhs}
                    )
    return doc


def _verify_eq2(args: argparse.Namespace) -> dict:
    doc = _verify_doc("eq2", {"max_x0": args.max_x0})
    for x0 in range(1, args.max_x0 + 1, 2):
        traj, pe = trajectory_odd(x0)
        for n in range(1, pe.step_count + 1):
            res = ident_mod.closed_form_check(x0, n, exponents=pe.exponents)
            doc["checks_run"] += 1
            if not res.holds:
                _note_failure(doc, {"x0": x0, "n": n, "lhs": res.lhs, "rhs": res.rhs})
    return doc


def _verify_bohm(args: argparse.Namespace) -> dict:
    doc = _verify_doc("bohm", {"max_x0": args.max_x0})
    for x0 in range(1, args.max_x0 + 1, 2):
        traj, pe = trajectory_odd(x0)
        if traj.terminated is not Termination.REACHED_ONE:
            continue
        prefix = pe.prefix_sums
        if pe.step_count == 0:  # x0 == 1: use one step of the fixed point
            prefix = (0, 2)
        value = ident_mod.reconstruct_start(prefix)
        doc["checks_run"] += 1
        if value != x0:
            _note_failure(doc, {"x0": x0, "reconstructed": str(value)})
    return doc


def _verify_geom(args: argparse.Namespace) -> dict:
    doc = _verify_doc("geom", {"max_n": args.max_n, "max_m": args.max_m})
    for n in range(args.max_n + 1):
        for m in range(args.max_m + 1):
            res = ident_mod.geometric_tail_identity(n, m)
            doc["checks_run"] += 1
            if not res.holds:
                _note_failure(doc, {"n": n, "m": m, "lhs": str(res.lhs), "rhs": str(res.rhs)})
    return doc


def _verify_anb_eq(args: argparse.Namespace) -> dict:
    try:
        params = AnbParams(a=args.a, b=args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = _verify_doc(
        "anb-eq",
        {
            "a": args.a,
            "b": args.b,
            "starts": args.samples,
            "max_n": args.max_n,
            "seed": args.seed,
        },
    )
    rng = np.random.default_rng(args.seed)
    starts = 2 * rng.integers(0, M_SEED_RANGE // 2, size=args.samples) + 1
    for x0 in starts:
        x0 = int(x0)
        _, exps = anb_mod.anb_steps_extended(x0, params, args.max_n)
        for n in range(1, args.max_n + 1):
            res = anb_mod.closed_form_anb_check(x0, params, n, exponents=exps)
            doc["checks_run"] += 1
            if not res.holds:
                _note_failure(doc, {"x0": x0, "n": n, "lhs": res.lhs, "rhs": res.rhs})
    return doc


def _verify_halfsplit(args: argparse.Namespace) -> dict:
    if (args.lo is None) != (args.hi is None):
        raise UsageError("--lo and --hi must be given together")
    subrange = (args.lo, args.hi) if args.lo is not None else None
    try:
        report = halfsplit_mod.halfsplit_verify(
            args.M, subrange=subrange, steps=args.steps, method=args.method
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = _verify_doc(
        "halfsplit",
        {"M": args.M, "steps": args.steps, "subrange": list(subrange) if subrange else None,
         "method": args.method},
    )
    within = [t for t in report.tallies if t.within_theorem]
    doc["checks_run"] = len(within)
    if report.covers_full_range:
        half = report.element_count // 2
        for t in within:
            if (t.increases, t.decreases) != (half, half):
                _note_failure(
                    doc,
                    {"step": t.step, "increases": t.increases, "decreases": t.decreases,
                     "expected": half},
                )
    else:
        doc["passed"] = None  # subrange tallies are data; the statement is full-range
    doc["report"] = {
        "M": report.M,
        "intervals": [list(iv) for iv in report.intervals],
        "tallies": [
            {
                "step": t.step,
                "increases": t.increases,
                "decreases": t.decreases,
                "within_theorem": t.within_theorem,
            }
            for t in report.tallies
        ],
    }
    return doc


def _render_verify(doc: dict, args: argparse.Namespace) -> str:
    if args.format == "json":
        return _json_doc(doc)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        if doc.get("report"):
            writer.writerow(["step", "increases", "decreases", "within_theorem"])
            for t in doc["report"]["tallies"]:
                writer.writerow(
                    [t["step"], t["increases"], t["decreases"], t["within_theorem"]]
                )
        else:
            writer.writerow(["check", "checks_run", "failures", "passed"])
            writer.writerow(
                [doc["check"], doc["checks_run"], doc["failures"], doc["passed"]]
            )
        return buf.getvalue()
    lines = [
        f"check={doc['check']} parameters={doc['parameters']}",
        f"checks_run={doc['checks_run']} failures={doc['failures']} passed={doc['passed']}",
    ]
    if doc.get("error"):
        lines.append(f"error: {doc['error']}")
    if doc["counterexample"] is not None:
        lines.append(f"first counterexample: {doc['counterexample']}")
    if doc.get("report"):
        for t in doc["report"]["tallies"]:
            flag = "" if t["within_theorem"] else "  [outside theorem range]"
            lines.append(
                f"step {t['step']:>3}: increases={t['increases']} "
                f"decreases={t['decreases']}{flag}"
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- montecarlo


def _cmd_montecarlo(args: argparse.Namespace) -> tuple[str, int]:
    if args.fixture:
        rows = [
            {
                "sample": r.sample,
                "zeros": r.zeros,
                "ones": r.ones,
                "xi": r.xi,
                "one_plus_xi": r.one_plus_xi,
                "indicator_std": r.indicator_std,
                "chi": r.chi,
            }
            for r in REFERENCE_ROWS
        ]
        source = f"fixture:{args.fixture}"
        seed = None
        length = SAMPLE_LENGTH
        published = stats_mod.interval_discrepancy_report()
        published = {
            "mean_one_plus_xi": published["mean_one_plus_xi"],
            "reproducible": published["reproducible"],
            "note": published["note"],
            "levels": {
                str(int(level * 100)): {
                    "published": list(block["published"]),
                    "computed_mu_normal": list(block["computed_mu_normal"]),
                    "computed_mu_t": list(block["computed_mu_t"]),
                    "computed_chi_normal": list(block["computed_chi_normal"]),
                    "computed_chi_t": list(block["computed_chi_t"]),
                }
                for level, block in published["levels"].items()
            },
        }
    else:
        if args.length < 2:
            raise UsageError("--length must be >= 2")
        if args.samples < 2:
            raise UsageError("--samples must be >= 2")
        samples = stats_mod.sample_ratios(args.length, args.samples, args.seed)
        rows = [
            {
                "sample": j + 1,
                "zeros": s.zeros,
                "ones": s.ones,
                "xi": _finite(s.xi),
                "one_plus_xi": _finite(1 + s.xi),
                "indicator_std": stats_mod.indicator_sample_std(s.zeros, s.ones),
                "chi": _finite(2.0 ** (1 + s.xi)) if math.isfinite(s.xi) else "inf",
            }
            for j, s in enumerate(samples)
        ]
        source = "generated"
        seed = args.seed
        length = args.length
        published = None

    one_plus = [r["one_plus_xi"] for r in rows if isinstance(r["one_plus_xi"], float)]
    if len(one_plus) < 2:
        raise UsageError(
            "almost every sample drew zero increase bits; increase --length"
        )
    stats_block = {
        "mean_xi": statistics.fmean(
            r["xi"] for r in rows if isinstance(r["xi"], float)
        ),
        "mean_one_plus_xi": statistics.fmean(one_plus),
        "std_one_plus_xi": statistics.stdev(one_plus) if len(one_plus) > 1 else 0.0,
        "mean_indicator_std": statistics.fmean(r["indicator_std"] for r in rows),
    }
    levels = [0.95, 0.98, 0.99] if args.level == "all" else [int(args.level) / 100]
    intervals = {}
    for level in levels:
        st = stats_mod.SampleStats.from_values(one_plus, level=level)
        mu_n = stats_mod.confidence_interval(st, mode="normal")
        mu_t = stats_mod.confidence_interval(st, mode="t")
        intervals[str(int(level * 100))] = {
            "mu_normal": list(mu_n),
            "mu_t": list(mu_t),
            "chi_normal": list(stats_mod.exponentiate_interval(*mu_n)),
            "chi_t": list(stats_mod.exponentiate_interval(*mu_t)),
        }
    doc = {
        "schema": "collatzlab/montecarlo/v1",
        "source": source,
        "seed": seed,
        "length": length,
        "samples": len(rows),
        "rows": rows,
        "stats": stats_block,
        "intervals": intervals,
        "published_comparison": published,
    }
    if args.format == "json":
        return _json_doc(doc), EX_OK
    if args.format == "csv":
        buf = io.StringIO()
        buf.write(f"# source={source} seed={seed} length={length} samples={len(rows)}\n")
        writer = csv.writer(buf)
        writer.writerow(["sample", "xi", "one_plus_xi", "indicator_std", "chi"])
        for r in rows:
            writer.writerow(
                [r["sample"], r["xi"], r["one_plus_xi"],
                 f"{r['indicator_std']:.4f}", r["chi"]]
            )
        return buf.getvalue(), EX_OK
    lines = [f"# source={source} seed={seed} length={length} samples={len(rows)}"]
    lines.append(f"{'sample':>6} {'xi':>8} {'1+xi':>8} {'s':>8} {'2^(1+xi)':>10}")
    for r in rows:
        lines.append(
            f"{r['sample']:>6} {r['xi']:>8.4f} {r['one_plus_xi']:>8.4f} "
            f"{r['indicator_std']:>8.4f} {r['chi']:>10.4f}"
            if isinstance(r["xi"], float)
            else f"{r['sample']:>6} {r['xi']:>8} {r['one_plus_xi']:>8} "
            f"{r['indicator_std']:>8.4f} {r['chi']:>10}"
        )
    lines.append(
        "mean(xi)={mean_xi:.6f} mean(1+xi)={mean_one_plus_xi:.6f} "
        "std(1+xi)={std_one_plus_xi:.6f} mean(s)={mean_indicator_std:.6f}".format(
            **stats_block
        )
    )
    for key in sorted(intervals):
        block = intervals[key]
        lines.append(
            f"{key}% mu normal [{block['mu_normal'][0]:.4f}, {block['mu_normal'][1]:.4f}] "
            f"t [{block['mu_t'][0]:.4f}, {block['mu_t'][1]:.4f}] "
            f"chi normal [{block['chi_normal'][0]:.4f}, {block['chi_normal'][1]:.4f}] "
            f"t [{block['chi_t'][0]:.4f}, {block['chi_t'][1]:.4f}]"
        )
    if published:
        lines.append(
            "published bounds (same numbers in both printed tables) are not "
            "reproduced by these rows:"
        )
        for key in sorted(published["levels"]):
            block = published["levels"][key]
            lines.append(
                f"  {key}%: published [{block['published'][0]:.4f}, "
                f"{block['published'][1]:.4f}] vs computed chi "
                f"[{block['computed_chi_normal'][0]:.4f}, "
                f"{block['computed_chi_normal'][1]:.4f}]"
            )
    return "\n".join(lines) + "\n", EX_OK


# --------------------------------------------------------------------- sweep


def _cmd_sweep(args: argparse.Namespace) -> tuple[str, int]:
    if args.limit < 1:
        raise UsageError("--limit must be >= 1")
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    survey = survey_range(
        1, args.limit + 1, max_steps=args.max_steps, workers=args.threads
    )
    doc = {
        "schema": "collatzlab/sweep/v1",
        "limit": args.limit,
        "max_steps": args.max_steps,
        "verified": survey.verified,
        "failures": list(survey.failures),
        "max_total_stopping_time": survey.max_total_stopping_time,
        "tst_argmax": survey.tst_argmax,
        "max_ratio": survey.max_ratio,
        "ratio_argmax": survey.ratio_argmax,
        "max_excursion": survey.peak,
    }
    code = EX_INCONCLUSIVE if survey.failures else EX_OK
    if args.format == "json":
        return _json_doc(doc), code
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        keys = [
            "limit", "max_steps", "verified", "failures",
            "max_total_stopping_time", "tst_argmax", "max_ratio",
            "ratio_argmax", "max_excursion",
        ]
        writer.writerow(keys)
        writer.writerow(
            [len(doc["failures"]) if k == "failures" else doc[k] for k in keys]
        )
        return buf.getvalue(), code
    lines = [
        f"verified {doc['verified']} of {doc['limit']} starts reach 1 "
        f"within {doc['max_steps']} steps",
        f"failures: {doc['failures'] if doc['failures'] else 'none'}",
        f"max total stopping time: {doc['max_total_stopping_time']} "
        f"at x={doc['tst_argmax']}",
        f"max total/ln(x): {doc['max_ratio']} at x={doc['ratio_argmax']}",
        f"max excursion: {doc['max_excursion']}",
    ]
    return "\n".join(lines) + "\n", code


# -------------------------------------------------------------------- cycles


def _cmd_cycles(args: argparse.Namespace) -> tuple[str, int]:
    try:
        params = AnbParams(a=args.a, b=args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.limit < 1:
        raise UsageError("--limit must be >= 1")
    catalog = anb_mod.cycle_catalog(params, args.limit, max_steps=args.max_steps)
    cycles = []
    for record in catalog:
        lhs, rhs, ok = record.product_identity()
        cycles.append(
            {
                "members": list(record.members),
                "exponents": list(record.exponents),
                "sum_exponents": record.sum_exponents,
                "product_lhs": lhs,
                "product_rhs": rhs,
                "verified": ok,
            }
        )
    doc = {
        "schema": "collatzlab/cycles/v1",
        "a": args.a,
        "b": args.b,
        "start_limit": args.limit,
        "max_steps": args.max_steps,
        "cycles": cycles,
    }
    if args.format == "json":
        return _json_doc(doc), EX_OK
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["members", "exponents", "sum_exponents", "verified"])
        for c in cycles:
            writer.writerow(
                [" ".join(map(str, c["members"])), " ".join(map(str, c["exponents"])),
                 c["sum_exponents"], c["verified"]]
            )
        return buf.getvalue(), EX_OK
    lines = [f"map ({args.a}n+{args.b}), odd starts 1..{args.limit}:"]
    for c in cycles:
        lines.append(
            f"  cycle {c['members']} exponents {c['exponents']} "
            f"(2^{c['sum_exponents']} product identity "
            f"{'verified' if c['verified'] else 'FAILED'})"
        )
    if not cycles:
        lines.append("  no cycles entered within the step budget")
    return "\n".join(lines) + "\n", EX_OK


if __name__ == "__main__":
    sys.exit(main())
