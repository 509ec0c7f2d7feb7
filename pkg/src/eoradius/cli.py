"""Command-line interface: compute radii, evaluate bounds, run suites.

Subcommands
-----------
compute  INPUT           radii of the tuple in a tuple file
bounds   INPUT [flags]   single-tuple upper bounds and their ratios
verify   [flags]         lemma / bound / block-matrix suites

Exit codes: 0 all good, 1 at least one inequality record failed,
2 usage or I/O error.

Tuple files are JSON with complex entries encoded as [re, im] pairs::

    {"d": 1, "dim": 2,
     "matrices": [[[[0.0, 0.0], [1.0, 0.0]],
                   [[0.0, 0.0], [0.0, 0.0]]]]}

All randomness flows from ``--seed`` (default 42, never wall clock), and
report files contain no volatile metadata, so identical invocations write
byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, replace

import numpy as np

from . import __version__
from ._backend import BACKEND
from .errors import EoradiusError, ParseError
from .matfun import power_pair, sqrt_pair
from .radii import (
    OperatorTuple,
    RadiusConfig,
    SweepConfig,
    euclidean_radius,
    numerical_radius,
    tuple_op_norm,
)
from . import bounds as bnd
from . import verify as ver

SCHEMA_VERSION = 1
DEFAULT_SEED = 42
PARAM_GRID = [round(0.1 * i, 1) for i in range(11)]


def _fmt(x: float) -> str:
    return f"{x:.6g}"


# --------------------------------------------------------------------------
# tuple file I/O


def _complex_from_pair(pair, where: str) -> complex:
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(v, (int, float)) for v in pair)
    ):
        raise ParseError(f"{where}: expected [re, im] pair, got {pair!r}")
    z = complex(pair[0], pair[1])
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ParseError(f"{where}: non-finite entry {pair!r}")
    return z


def parse_tuple_data(data) -> OperatorTuple:
    """Decode the tuple-file JSON object into an OperatorTuple."""
    if not isinstance(data, dict):
        raise ParseError("tuple file must be a JSON object")
    for key in ("d", "dim", "matrices"):
        if key not in data:
            raise ParseError(f"tuple file is missing the {key!r} field")
    d, dim, mats = data["d"], data["dim"], data["matrices"]
    if not isinstance(d, int) or not isinstance(dim, int) or d < 1 or dim < 1:
        raise ParseError(f"d and dim must be positive integers, got d={d!r} dim={dim!r}")
    if not isinstance(mats, list) or len(mats) != d:
        raise ParseError(f"expected {d} matrices, got {len(mats) if isinstance(mats, list) else type(mats).__name__}")
    out = []
    for k, mat in enumerate(mats):
        if not isinstance(mat, list) or len(mat) != dim:
            raise ParseError(f"matrix {k}: expected {dim} rows")
        rows = []
        for i, row in enumerate(mat):
            if not isinstance(row, list) or len(row) != dim:
                raise ParseError(f"matrix {k}, row {i}: expected {dim} entries")
            rows.append(
                [_complex_from_pair(v, f"matrix {k}, row {i}, column {j}") for j, v in enumerate(row)]
            )
        out.append(np.array(rows, dtype=np.complex128))
    return OperatorTuple(out)


def read_tuple_file(path: str) -> OperatorTuple:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return parse_tuple_data(data)


def tuple_to_data(tup: OperatorTuple) -> dict:
    """Encode an OperatorTuple as the tuple-file JSON object."""
    return {
        "d": tup.d,
        "dim": tup.dim,
        "matrices": [
            [[[float(z.real), float(z.imag)] for z in row] for row in mat]
            for mat in tup.stack
        ],
    }


def write_tuple_file(path: str, tup: OperatorTuple):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tuple_to_data(tup), fh, indent=2, sort_keys=True)
        fh.write("\n")


# --------------------------------------------------------------------------
# report files


def _report_doc(command: str, params: dict, seed: int, body: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "eoradius", "version": __version__, "backend": BACKEND},
        "command": command,
        "params": params,
        "seed": seed,
        **body,
    }


def _write_json(path: str, doc: dict):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["bound_id", "trial_seed", "lhs", "rhs", "slack", "pass"])
    for r in records:
        writer.writerow(
            [r.bound_id, r.trial_seed, repr(r.lhs), repr(r.rhs), repr(r.slack), str(r.passed).lower()]
        )
    return buf.getvalue()


# --------------------------------------------------------------------------
# subcommands


def _radius_cfg(args) -> RadiusConfig:
    return RadiusConfig(restarts=args.restarts, seed=args.seed)


def cmd_compute(args) -> int:
    tup = read_tuple_file(args.input)
    cfg = _radius_cfg(args)
    est = euclidean_radius(tup, cfg)
    norm = tuple_op_norm(tup)
    per_entry = [numerical_radius(m, SweepConfig()) for m in tup]
    print(f"d = {tup.d}, dim = {tup.dim}  (backend: {BACKEND})")
    print(f"w_e (certified lower bound) = {_fmt(est.value)}   [{est.method}, {est.iterations} iterations]")
    print(f"tuple operator norm         = {_fmt(norm)}")
    for k, e in enumerate(per_entry):
        print(f"w(A_{k + 1}) = {_fmt(e.value)}")
    if args.json:
        doc = _report_doc(
            "compute",
            {"input": args.input, "restarts": cfg.restarts},
            args.seed,
            {
                "results": {
                    "euclidean_radius": est.value,
                    "certified_lower": est.certified_lower,
                    "method": est.method,
                    "tuple_op_norm": norm,
                    "numerical_radii": [e.value for e in per_entry],
                }
            },
        )
        _write_json(args.json, doc)
    return 0


def _single_tuple_reports(tup, t, alpha, fg_label, cfg):
    fg = sqrt_pair() if fg_label == "sqrt" else power_pair(alpha)
    reports = []
    reports.extend(bnd.polar_power_bounds(tup, t, cfg))
    reports.extend(bnd.imaginary_combo_bound(tup, t, cfg))
    reports.extend(bnd.fg_polar_bounds(tup, t, fg, cfg))
    reports.extend(bnd.remark_bound(tup, alpha, t, cfg))
    reports.append(bnd.quarter_polar_bound(tup, t, cfg))
    return reports


def cmd_bounds(args) -> int:
    tup = read_tuple_file(args.input)
    cfg = _radius_cfg(args)
    we = euclidean_radius(tup, replace(cfg, restarts=4 * cfg.restarts)).value
    lower, upper = bnd.sandwich(tup)
    reports = []
    if args.all:
        for t in PARAM_GRID:
            reports.extend(bnd.polar_power_bounds(tup, t, cfg))
            reports.extend(bnd.imaginary_combo_bound(tup, t, cfg))
            reports.append(bnd.quarter_polar_bound(tup, t, cfg))
        for alpha in PARAM_GRID:
            reports.extend(bnd.remark_bound(tup, alpha, 0.5, cfg))
        reports.append(bnd.abstract_bound(tup, cfg))
    else:
        reports = _single_tuple_reports(tup, args.t, args.alpha, args.fg, cfg)
    print(f"w_e estimate (certified lower bound): {_fmt(we)}")
    print(f"SANDWICH: {_fmt(lower)} <= w_e <= {_fmt(upper)}")
    header = f"{'bound_id':<14} {'params':<24} {'value':>12} {'ratio':>10}"
    print(header)
    print("-" * len(header))
    for rep in reports:
        shown = {k: v for k, v in rep.params.items() if k != "d"}
        ptxt = ",".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in shown.items())
        ratio = rep.value / we if we > 0 else float("inf")
        print(f"{rep.bound_id:<14} {ptxt:<24} {_fmt(rep.value):>12} {_fmt(ratio):>10}")
    if args.json:
        doc = _report_doc(
            "bounds",
            {
                "input": args.input,
                "t": args.t,
                "alpha": args.alpha,
                "fg": args.fg,
                "all": args.all,
                "restarts": cfg.restarts,
            },
            args.seed,
            {
                "results": {
                    "euclidean_radius": we,
                    "sandwich": [lower, upper],
                    "reports": [asdict(rep) for rep in reports],
                }
            },
        )
        _write_json(args.json, doc)
    return 0


def cmd_verify(args) -> int:
    cfg = ver.SuiteConfig(
        suite=args.suite,
        trials=args.trials,
        master_seed=args.seed,
        workers=args.workers,
    )
    records = ver.run_suite(cfg)
    failures = [r for r in records if not r.passed]
    n_pass = len(records) - len(failures)
    print(ver.POLICY)
    print(f"suite={args.suite} trials={args.trials} seed={args.seed}: "
          f"{n_pass}/{len(records)} records passed")
    for rec in failures:
        print(
            f"FAIL {rec.bound_id}: lhs={rec.lhs!r} rhs={rec.rhs!r} "
            f"slack={rec.slack!r} seed={rec.trial_seed}"
        )
    if args.out:
        if args.out.endswith(".csv"):
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(f"# {ver.POLICY}\n")
                fh.write(records_to_csv(records))
        else:
            doc = _report_doc(
                "verify",
                {"suite": args.suite, "trials": args.trials},
                args.seed,
                {
                    "policy": ver.POLICY,
                    "records": [asdict(r) for r in records],
                    "summary": ver.tightness_report(records),
                    "failing_seeds": [r.trial_seed for r in failures],
                },
            )
            _write_json(args.out, doc)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eoradius",
        description="Euclidean operator radius toolkit: radii, bounds, verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"eoradius {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="radii of a tuple file")
    p.add_argument("input", help="tuple file (JSON, [re, im] complex entries)")
    p.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=32)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="upper bounds for the tuple's w_e")
    p.add_argument("input")
    p.add_argument("--t", type=float, default=0.5, help="polar interpolation exponent in [0, 1]")
    p.add_argument("--alpha", type=float, default=0.5, help="power-pair exponent in [0, 1]")
    p.add_argument("--fg", choices=("sqrt", "power"), default="sqrt",
                   help="function pair: sqrt, or the power pair at --alpha")
    p.add_argument("--all", action="store_true",
                   help="sweep t and alpha over {0, 0.1, ..., 1.0}")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=32)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=tuple(ver.SUITES), default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", metavar="PATH", help=".csv for records, anything else for JSON")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EoradiusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
