"""Command line front end.

    cksquare generators --series sa --field R --N 2
    cksquare closure --series sa --field C --N 2 --minimal
    cksquare identify --series sy --field Q --N 1 --omega 1
    cksquare square --N 2 --omega 1,1 --format json
    cksquare check --depth 2

Exit codes: 0 ok, 1 check failures, 2 usage errors, 3 closure bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import analyze_site, describe
from .checks import run_checks
from .generators import (OmegaVector, Series, basis, build_generator, double, graded_lambda,
                         min_generator_labels, parse_label, site_realization)
from .matrix import ambient_dim, to_json
from .scalar import FieldTag
from .span import ClosureBoundExceeded, LieBasis, lie_closure, same_span
from .square import build_square, emit

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _config(args):
    try:
        series = Series.parse(args.series)
        field = FieldTag.parse(args.field)
        omega = OmegaVector.parse(args.omega) if args.omega else OmegaVector.ones(args.N)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    if args.N < 1:
        raise UsageError("--N must be at least 1")
    if omega.N != args.N:
        raise UsageError(f"--omega has {omega.N} values but --N is {args.N}")
    return series, field, omega


def site_name(series: Series, field: FieldTag, N: int) -> str:
    return f"{series.name}({series.order(N)},{field.symbol})"


def cmd_generators(args) -> str:
    series, field, omega = _config(args)
    labeled = basis(series, field, args.N, omega)
    if args.format == "json":
        return _dump([{"label": str(lab), "matrix": to_json(m)} for lab, m in labeled])
    out = [f"{site_name(series, field, args.N)}: {len(labeled)} basis matrices"]
    for lab, m in labeled:
        out.append("")
        out.append(str(lab))
        out.append(str(m))
    return "\n".join(out) + "\n"


def cmd_closure(args) -> str:
    series, field, omega = _config(args)
    if args.minimal:
        labels = min_generator_labels(series, field, args.N)
    elif args.labels:
        try:
            labels = [parse_label(t) for t in args.labels]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("give generator labels or --minimal")
    site = site_realization(series, field, args.N, omega)
    graded = site[0][1].order != series.order(args.N)
    mats = []
    for lab in labels:
        try:
            m = build_generator(lab, args.N, omega, field)
            if graded:
                m = double(m, graded_lambda(lab))
        except (ValueError, IndexError) as exc:
            raise UsageError(f"{lab}: {exc}") from None
        if m.order != site[0][1].order:
            raise UsageError(f"{lab} does not belong to the {series.name} series")
        mats.append(m)
    bound = args.max_dim if args.max_dim is not None else ambient_dim(mats[0].order, field)
    closed = lie_closure(mats, max_dim=bound, labels=[str(lab) for lab in labels])
    full = LieBasis.from_matrices([m for _, m in site])
    equal = same_span(closed, full)
    name = site_name(series, field, args.N)
    if args.format == "json":
        return _dump({"dim": closed.dim, "basis": [closed.label(i) for i in range(closed.dim)],
                      "site": name, "site_dim": full.dim, "equals_site": equal})
    lines = [f"dim {closed.dim}, equals {name} basis span: {'yes' if equal else 'no'}"]
    lines += [f"  {closed.label(i)}" for i in range(closed.dim)]
    return "\n".join(lines) + "\n"


def cmd_identify(args) -> str:
    series, field, omega = _config(args)
    if args.format == "json":
        site = analyze_site(series, field, args.N, omega)
        payload = site.descriptor.to_json()
        payload["structure_constants"] = site.constants.to_json()
        return _dump(payload)
    return describe(series, field, args.N, omega).summary() + "\n"


def cmd_square(args) -> str:
    _, _, omega = _config(args)
    if args.extended and args.N not in (1, 2):
        raise UsageError("--extended is only available for N = 1 or 2")
    return emit(build_square(args.N, omega, extended=args.extended), args.format)


def cmd_check(args) -> tuple:
    if args.depth < 1:
        raise UsageError("--depth must be at least 1")
    lines, failed = [], 0
    for name, fails in run_checks(args.depth):
        lines.append(f"{'PASS' if not fails else 'FAIL'}  {name}")
        lines += [f"      {msg}" for msg in fails]
        failed += bool(fails)
    lines.append(f"{failed} check group(s) failed" if failed else "all checks passed")
    return "\n".join(lines) + "\n", EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=2, help="number of coefficients (default 2)")
    common.add_argument("--omega", default=None,
                        help="comma separated rationals, e.g. 1,-1 or 1/2,3 (default all 1)")
    common.add_argument("--series", default="sa", choices=["sa", "sl", "sy"])
    common.add_argument("--field", default="R", choices=["R", "C", "Q", "H"],
                        help="R, C or Q (H is accepted for Q)")
    common.add_argument("--format", default="table", choices=["table", "json"])
    common.add_argument("--out", default=None, help="write output to this file")

    ap = argparse.ArgumentParser(prog="cksquare", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("generators", parents=[common], help="print a site's basis matrices")
    p = sub.add_parser("closure", parents=[common], help="Lie closure of named generators")
    p.add_argument("labels", nargs="*", help='generator labels such as "J(0,1)" "M(0,1)^1"')
    p.add_argument("--minimal", action="store_true", help="use the site's minimal generating set")
    p.add_argument("--max-dim", type=int, default=None, help="closure dimension bound")
    sub.add_parser("identify", parents=[common], help="describe a site")
    p = sub.add_parser("square", parents=[common], help="emit the 3x3 square")
    p.add_argument("--extended", action="store_true", help="append the printed 4x4 square")
    p = sub.add_parser("check", parents=[common], help="run the invariant suite")
    p.add_argument("--depth", type=int, default=2, help="largest N to check (default 2)")
    return ap


COMMANDS = {
    "generators": cmd_generators,
    "closure": cmd_closure,
    "identify": cmd_identify,
    "square": cmd_square,
    "check": cmd_check,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cksquare: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClosureBoundExceeded as exc:
        print(f"cksquare: closure bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
