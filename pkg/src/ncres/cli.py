"""Command-line front end.

Subcommands:
  compute  - evaluate one operator-pair configuration and report cases,
             the boundary sum, the dimension constant and comparisons
  verify   - run the printed-formula checks, vanishing theorems and the
             numeric oracle; exit 0 iff every hard check passes
  oracle   - standalone numeric verification document for one configuration
  catalog  - dump the symbol catalog with equation tags

Exit codes: 0 success / soft-pass, 1 strict failure, 2 unsupported
configuration, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import boundary, printed
from .oracle import QuadratureConfig, run_oracle
from .reporting import (
    comparison_dict,
    dumps_canonical,
    oracle_report_dict,
    render_text,
    theorem_report_dict,
)
from .symbols import UnsupportedConfigurationError, build_catalog, resolve_config

EXIT_OK = 0
EXIT_STRICT = 1
EXIT_UNSUPPORTED = 2
EXIT_USAGE = 64

VERIFY_GROUPS = ("trace-tables", "projection", "assembly", "integrands",
                 "values", "vanishing", "oracle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p: _Parser):
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--out", type=Path, default=None, help="write the report to a file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--h-value", type=float, default=None, dest="h_value")
    p.add_argument("--tol-rel", type=float, default=None, dest="tol_rel")
    p.add_argument("--tol-abs", type=float, default=None, dest="tol_abs")
    p.add_argument("--samples", type=int, default=None, help="sphere sample count")
    p.add_argument("--config", type=Path, default=None,
                   help="JSON file with default values for any flag (flags win)")


def _add_target(p: _Parser):
    p.add_argument("--theorem", choices=("1.1", "3.1", "3.2", "3.3", "3.4"))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p1", type=int)
    p.add_argument("--p2", type=int)


def build_parser() -> _Parser:
    parser = _Parser(prog="ncres", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute one configuration")
    _add_target(pc)
    pc.add_argument("--no-oracle", action="store_true",
                    help="skip the numeric cross-check")
    _add_common(pc)

    pv = sub.add_parser("verify", help="run the verification suite")
    pv.add_argument("--m-max", type=int, default=4, dest="m_max")
    pv.add_argument("--strict", action="store_true",
                    help="fail on soft (documented-discrepancy) mismatches too")
    pv.add_argument("--only", choices=VERIFY_GROUPS, default=None)
    _add_common(pv)

    po = sub.add_parser("oracle", help="standalone numeric verification")
    _add_target(po)
    _add_common(po)

    pk = sub.add_parser("catalog", help="dump the symbol catalog")
    _add_target(pk)
    pk.add_argument("--entry", default=None, help="print a single catalog entry")
    _add_common(pk)
    return parser


def _apply_config_file(args: argparse.Namespace):
    if getattr(args, "config", None) is None:
        return
    data = json.loads(Path(args.config).read_text())
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    for key, value in data.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise UsageError(f"unknown config key {key!r}")
        if getattr(args, attr) in (None, False):
            setattr(args, attr, value)


def _fill_defaults(args: argparse.Namespace):
    for attr, default in (("seed", 42), ("h_value", 1.0), ("tol_rel", 1e-6),
                          ("tol_abs", 1e-8), ("samples", 64), ("format", "text")):
        if getattr(args, attr, None) is None:
            setattr(args, attr, default)


def _resolve_target(args: argparse.Namespace) -> tuple[int, int, int]:
    has_theorem = args.theorem is not None
    has_triple = args.n is not None or args.p1 is not None or args.p2 is not None
    if has_theorem and has_triple:
        raise UsageError("give either --theorem/--m or --n/--p1/--p2, not both")
    if has_theorem:
        if args.m is None:
            raise UsageError("--theorem requires --m")
        return boundary.config_for(args.theorem, args.m)
    if has_triple:
        if None in (args.n, args.p1, args.p2):
            raise UsageError("--n, --p1 and --p2 must be given together")
        return args.n, args.p1, args.p2
    raise UsageError("no target: give --theorem/--m or --n/--p1/--p2")


def _emit(args, doc: dict) -> None:
    text = dumps_canonical(doc) if args.format == "json" else render_text(doc)
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    n, p1, p2 = _resolve_target(args)
    try:
        m, theorem = resolve_config(n, p1, p2)
    except UnsupportedConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    tr = boundary.theorem_report(theorem, m)
    comparisons = printed.run_printed_checks(ms=(m,))
    oracle_rep = None
    if not args.no_oracle:
        cfg = QuadratureConfig(sphere_samples=args.samples, seed=args.seed,
                               h_value=args.h_value)
        oracle_rep = run_oracle(n, p1, p2, cfg, args.tol_rel, args.tol_abs)
    doc = theorem_report_dict(tr, comparisons, oracle_rep, args.h_value)
    _emit(args, doc)
    if oracle_rep is not None and not oracle_rep.agreement:
        return EXIT_STRICT
    return EXIT_OK


def _vanishing_checks(m_max: int) -> list[printed.ComparisonResult]:
    out = []
    for theorem in ("3.2", "3.3", "3.4"):
        fails = []
        for m in range(1, min(m_max, 3) + 1):
            phi = boundary.compute_phi(*boundary.config_for(theorem, m))
            if not phi.phi.is_zero() or any(not c.value.is_zero() for c in phi.cases):
                fails.append(f"m={m}")
        out.append(printed.ComparisonResult(
            f"vanishing-{theorem}",
            f"boundary sum of the ({theorem}) configuration vanishes, m <= {min(m_max, 3)}",
            "match" if not fails else "mismatch", "; ".join(fails)))
    return out


def _oracle_checks(args, m_max: int) -> tuple[list[printed.ComparisonResult], list[dict]]:
    results, docs = [], []
    fails = []
    for theorem in ("1.1", "3.1", "3.2", "3.3", "3.4"):
        for m in range(1, min(m_max, 2) + 1):
            n, p1, p2 = boundary.config_for(theorem, m)
            cfg = QuadratureConfig(sphere_samples=args.samples, seed=args.seed,
                                   h_value=args.h_value)
            rep = run_oracle(n, p1, p2, cfg, args.tol_rel, args.tol_abs)
            docs.append(oracle_report_dict(rep))
            if not rep.agreement:
                fails.append(f"({theorem}, m={m})")
    results.append(printed.ComparisonResult(
        "oracle", f"numeric agreement across the five configurations, m <= {min(m_max, 2)}",
        "match" if not fails else "mismatch", "; ".join(fails)))
    return results, docs


def cmd_verify(args) -> int:
    ms = tuple(range(1, args.m_max + 1))
    results: list[printed.ComparisonResult] = []
    oracle_docs: list[dict] = []
    if args.only in (None, "trace-tables", "projection", "assembly", "integrands", "values"):
        results.extend(printed.run_printed_checks(ms=ms, only=args.only))
    if args.only in (None, "vanishing"):
        results.extend(_vanishing_checks(args.m_max))
    if args.only in (None, "oracle"):
        oracle_results, oracle_docs = _oracle_checks(args, args.m_max)
        results.extend(oracle_results)

    hard_fail = [r for r in results if not r.ok and r.severity == "hard"]
    soft_fail = [r for r in results if not r.ok and r.severity == "soft"]
    doc = {
        "m_max": args.m_max,
        "checks": [comparison_dict(r) for r in results],
        "hard_failures": len(hard_fail),
        "soft_warnings": len(soft_fail),
        "strict": bool(args.strict),
        "oracle_runs": oracle_docs,
    }
    _emit(args, doc)
    if hard_fail:
        return EXIT_STRICT
    if args.strict and soft_fail:
        return EXIT_STRICT
    return EXIT_OK


def cmd_oracle(args) -> int:
    n, p1, p2 = _resolve_target(args)
    try:
        resolve_config(n, p1, p2)
    except UnsupportedConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    cfg = QuadratureConfig(sphere_samples=args.samples, seed=args.seed,
                           h_value=args.h_value)
    rep = run_oracle(n, p1, p2, cfg, args.tol_rel, args.tol_abs)
    _emit(args, oracle_report_dict(rep))
    return EXIT_OK if rep.agreement else EXIT_STRICT


def cmd_catalog(args) -> int:
    if args.theorem is None and args.n is None and args.m is not None:
        n, p1, p2 = boundary.config_for("1.1", args.m)
    else:
        n, p1, p2 = _resolve_target(args)
    try:
        cat = build_catalog(n, p1, p2)
    except UnsupportedConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    entries = cat.entries()
    if args.entry is not None:
        entries = [e for e in entries if e.label == args.entry]
        if not entries:
            print(f"error: no catalog entry {args.entry!r}", file=sys.stderr)
            return EXIT_UNSUPPORTED
    doc = {
        "config": {"n": cat.n, "p1": cat.p1, "p2": cat.p2, "m": cat.m,
                   "theorem": cat.theorem},
        "entries": [{
            "label": e.label, "eq": e.eq_tag, "kind": e.kind, "order": e.order,
            "value": e.value.describe(),
            "dxn": None if e.dxn is None else e.dxn.describe(),
        } for e in entries],
    }
    if cat.m > 4:
        doc["warning"] = f"m={cat.m}: large pole orders, sizable report"
    _emit(args, doc)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config_file(args)
        _fill_defaults(args)
        handler = {"compute": cmd_compute, "verify": cmd_verify,
                   "oracle": cmd_oracle, "catalog": cmd_catalog}[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
