"""Command line entry point: spectra, enumeration, verification and conjecture scans.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from .closed_forms import closed_steklov, es_sigma_pm_exact
from .enumeration import ClassBoundError, TreeClassQuery, enumerate_free_trees, trees_in_class
from .extremal import DEFAULT_TOL, explore_conjecture, verify
from .graph import FamilySpec, TreeGraph, canonical_code
from .spectra import EigenSolverError, laplacian_spectrum, steklov_spectrum

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
TOL_ENV = "STEKLOV_TREES_TOL"


def _env_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        return DEFAULT_TOL


ENV_TOL = _env_tol()  # read once at import


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    target: Union[FamilySpec, TreeClassQuery, TreeGraph, None] = None
    tol: float = DEFAULT_TOL
    fmt: str = "text"
    out: Optional[Path] = None
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise UsageError(f"tolerance must be positive, got {self.tol}")


def _fmt_num(x: float) -> str:
    return repr(float(x))


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


# ---------------------------------------------------------------------------
# spectrum


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.family:
        family = FamilySpec.parse(args.family)
        tree = family.build()
    else:
        family = None
        try:
            tree = TreeGraph.from_edge_list(Path(args.tree).read_text())
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    cfg = RunConfig("spectrum", family or tree, args.tol, args.format, args.out)
    if args.closed_form and (family is None or args.operator != "steklov"):
        raise UsageError("--closed-form needs --family and the steklov operator")

    spec = steklov_spectrum(tree) if args.operator == "steklov" else laplacian_spectrum(tree)
    closed = closed_steklov(family) if args.closed_form else None
    extra: dict = {}
    if closed is not None:
        extra["closed_form"] = closed.to_dict()
        cv = closed.values()
        extra["max_abs_diff"] = float(np.max(np.abs(cv - spec.values))) if len(cv) == len(spec.values) else None
    if args.closed_form and family is not None and family.kind == "es":
        lo, hi = es_sigma_pm_exact(*family.params)
        extra["sigma_pm"] = {"minus": float(lo), "plus": float(hi), "minus_exact": str(lo), "plus_exact": str(hi)}
    if args.closed_form and closed is None:
        extra["closed_form"] = None

    source = str(family) if family else args.tree
    if cfg.fmt == "json":
        payload = {"source": source, "operator": args.operator, "values": [float(v) for v in spec.values], **extra}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "value"])
        for k, v in enumerate(spec.values, 1):
            w.writerow([k, _fmt_num(v)])
        text = buf.getvalue()
    else:
        lines = [f"{source} {args.operator}: " + " ".join(f"{v:.12g}" for v in spec.values)]
        if "sigma_pm" in extra:
            pm = extra["sigma_pm"]
            lines.append(f"sigma- = {pm['minus_exact']} = {pm['minus']:.12g}")
            lines.append(f"sigma+ = {pm['plus_exact']} = {pm['plus']:.12g}")
        if extra.get("closed_form"):
            for e in extra["closed_form"]["entries"]:
                lines.append(f"  {e['exact']} x{e['multiplicity']} ({e['label']})")
            lines.append(f"max |closed - numeric| = {extra['max_abs_diff']:.3g}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n is not None:
        trees = enumerate_free_trees(args.n)
    else:
        trees = trees_in_class(TreeClassQuery.parse(args.klass))
    if args.count_only:
        _emit(f"{sum(1 for _ in trees)}\n", args.out)
        return EXIT_OK
    chunks = []
    for t in trees:
        chunks.append(canonical_code(t).decode() + "\n" if args.format == "code" else t.to_edge_list() + "\n")
    _emit("".join(chunks), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / conjecture


def _reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theorem", "class", "case", "claim", "bound", "max", "argmax", "expected", "passed"])
    for r in reports:
        w.writerow([r.theorem, r.query, r.case, r.claim, _fmt_num(r.bound), _fmt_num(r.observed_max),
                    " ".join(r.argmax), " ".join(r.expected), r.passed])
    return buf.getvalue()


def cmd_verify(args: argparse.Namespace) -> int:
    reports = verify(args.theorem, max_n=args.max_n, max_b=args.max_b, max_m=args.max_m, tol=args.tol)
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _reports_csv(reports)
    else:
        text = "".join(
            f"{'PASS' if r.passed else 'FAIL'} {r.theorem} {r.query} [{r.case}] bound={r.bound:.12g} max={r.observed_max:.12g}\n"
            for r in reports
        )
    _emit(text, args.out)
    failed = [r for r in reports if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(reports)} class checks failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    rep = explore_conjecture(args.b, args.r, args.operator, args.tol)
    if args.format == "text":
        text = (
            f"b={rep.b} r={rep.r} {rep.operator}: class max {rep.class_max:.12g} over {rep.n_trees} trees, "
            f"conjectured {rep.conjectured_value:.12g}, gap {rep.gap:.3g}, agrees={rep.agrees}\n"
            f"argmax {' '.join(rep.argmax)}\nES code {rep.es_code}\n"
        )
    else:
        text = json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep exit 2 but route through UsageError
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="steklov-trees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("json", "csv", "text"), default="text"):
        sp.add_argument("--tol", type=float, default=ENV_TOL)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", type=Path)

    sp = sub.add_parser("spectrum", help="Steklov or Laplacian spectrum of a tree")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="path:n, star:n, spider:p1xL1,..., crab:b1,b2,r, es:b,p")
    src.add_argument("--tree", help="edge-list file")
    sp.add_argument("--operator", choices=("steklov", "laplacian"), default="steklov")
    sp.add_argument("--closed-form", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("enumerate", help="free trees by order or class")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--class", dest="klass", help="n=K,m=J or b=K,m=J")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--format", choices=("code", "edges"), default="edges")
    sp.add_argument("--out", type=Path)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="exhaustive check of an extremal bound")
    sp.add_argument("--theorem", choices=("slope", "fell", "older", "ranch", "unit"), required=True)
    sp.add_argument("--max-n", type=int, default=10)
    sp.add_argument("--max-b", type=int, default=4)
    sp.add_argument("--max-m", type=int, default=4)
    common(sp, default="json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("conjecture", help="scan the class the extra special tree is conjectured to win")
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--operator", choices=("steklov", "laplacian"), default="steklov")
    common(sp, formats=("json", "text"), default="json")
    sp.set_defaults(func=cmd_conjecture)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "tol", 1.0) <= 0:
            raise UsageError("--tol must be positive")
        return args.func(args)
    except (UsageError, ValueError, ClassBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL if isinstance(exc, ClassBoundError) else EXIT_USAGE
    except (EigenSolverError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
