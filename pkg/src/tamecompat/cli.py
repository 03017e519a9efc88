"""Command line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .acs4 import OrientationMismatch, decide_tame_compatible, tame_report
from .exactla import parse_rational
from .lie import LieAlgebra, catalog, lookup, validate
from .oracle import SampleConfig, cross_validate
from .repro import run_checks
from .wedge4 import Orientation

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _resolve_algebra(target: str) -> LieAlgebra:
    path = Path(target)
    if path.exists():
        try:
            return formats.load_algebra(path)
        except formats.FormatError as exc:
            raise InputError(str(exc)) from None
    try:
        return lookup(target)
    except KeyError as exc:
        raise InputError(f"{target}: no such file or catalog algebra ({exc.args[0]})") from None


def _orientations(args) -> list[Orientation]:
    try:
        scale = parse_rational(args.orientation_scale)
    except ValueError as exc:
        raise InputError(f"--orientation-scale: {exc}") from None
    if scale <= 0:
        raise InputError("--orientation-scale must be positive; use --orientation for the sign")
    signs = {"+": [1], "-": [-1], "both": [1, -1]}[args.orientation]
    return [Orientation(s * scale) for s in signs]


def _emit(args, docs: list[formats.ReportDocument], text: str) -> None:
    if args.json:
        print(json.dumps({"reports": [d.to_dict() for d in docs]}, indent=2))
    else:
        print(text)


def cmd_validate(args) -> int:
    g = _resolve_algebra(args.target)
    rep = validate(g)
    if args.json:
        print(json.dumps({"algebra": g.name, "valid": rep.ok,
                          "violations": [[v.i, v.j, v.k, v.l, str(v.value)] for v in rep.violations]}, indent=2))
    elif rep.ok:
        print(f"{g.name}: Jacobi identity holds")
    else:
        print(f"{g.name}: {len(rep.violations)} Jacobi violation(s)")
        for v in rep.violations:
            print(f"  {v}")
    return OK if rep.ok else FAILED


def _check_analyzable(g: LieAlgebra) -> None:
    if g.dim != 4:
        raise InputError(f"{g.name}: dimension {g.dim}; the tame-compatible analysis covers 4-dimensional algebras only")
    if not validate(g).ok:
        raise InputError(f"{g.name}: not a Lie algebra (run 'validate' for details)")


def cmd_analyze(args) -> int:
    g = _resolve_algebra(args.target)
    _check_analyzable(g)
    docs, lines = [], [f"algebra {g.name}"]
    status = OK
    for mu in _orientations(args):
        v = decide_tame_compatible(g, mu, witness=args.witness)
        doc = formats.report_from_verdict(g, v)
        docs.append(doc)
        lines.append(f"  orientation {mu} e^1234: B2 signature {tuple(v.b2_signature)}, "
                     f"Z2 signature {tuple(v.z2_signature)} -> {v.kind.value}")
        if v.witness_j is not None:
            lines.append(f"    witness J: lambda = {v.witness_j.lam}, M = {v.witness_j.m.to_strings()}")
            lines.append(f"    taming form: {v.report.taming_form}; compatible: {v.report.compatible}")
        if args.samples:
            cv = cross_validate(g, mu, SampleConfig(seed=args.seed, count=args.samples))
            doc.detail = json.dumps(cv.to_dict())
            lines.append(f"    cross-validation: {cv.samples} samples, {cv.tamed} tamed, "
                         f"{cv.compatible} compatible, {len(cv.mismatches)} mismatches")
            if not cv.ok:
                status = FAILED
    lines.insert(1, f"  closed 2-forms: dim {len(docs[0].z2_basis)}, "
                    f"boundary 2-vectors: dim {len(docs[0].b2_basis)}")
    _emit(args, docs, "\n".join(lines))
    return status


def cmd_check_j(args) -> int:
    g = _resolve_algebra(args.target)
    _check_analyzable(g)
    try:
        j = formats.load_acs(args.jfile)
    except formats.FormatError as exc:
        raise InputError(str(exc)) from None
    if j.dim != 4:
        raise InputError(f"{args.jfile}: J must be 4x4")
    if args.orientation == "both":
        raise InputError("check-j needs a single orientation: --orientation + or -")
    docs, lines = [], []
    for mu in _orientations(args):
        try:
            rep = tame_report(g, mu, j)
        except OrientationMismatch as exc:
            raise InputError(str(exc)) from None
        doc = formats.report_from_tame(g, mu.c, j, rep)
        docs.append(doc)
        lines.append(f"{g.name}, orientation {mu}: tamed={rep.tamed}, compatible={rep.compatible}")
        if rep.taming_form is not None:
            lines.append(f"  taming form: {rep.taming_form}")
        if rep.compatible_form is not None:
            lines.append(f"  compatible form: {rep.compatible_form}")
    _emit(args, docs, "\n".join(lines))
    return OK


def _linear(coeffs) -> str:
    out = ""
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        out += (" - " if c < 0 else " + ") if out else ("-" if c < 0 else "")
        out += f"{mag}e{k + 1}"
    return out


def cmd_catalog(args) -> int:
    algs = catalog()
    if args.write:
        out = Path(args.write)
        out.mkdir(parents=True, exist_ok=True)
        for g in algs:
            fname = g.name.replace(",", "").replace("+", "_") + ".json"
            (out / fname).write_text(json.dumps(formats.algebra_to_dict(g), indent=2) + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps([formats.algebra_to_dict(g) for g in algs], indent=2))
    else:
        for g in algs:
            brackets = ", ".join(
                f"[e{i + 1},e{j + 1}] = " + _linear(cs) for (i, j), cs in g.constants
            ) or "all brackets vanish"
            print(f"{g.name}: {brackets}")
    return OK


def cmd_repro(args) -> int:
    results = run_checks()
    if args.json:
        docs = [
            formats.ReportDocument(algebra="", orientation="", verdict="pass" if r.passed else "fail",
                                   check=r.name, detail=r.detail)
            for r in results
        ]
        print(json.dumps({"reports": [d.to_dict() for d in docs]}, indent=2))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return OK if all(r.passed for r in results) else FAILED


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # the subcommand copy uses SUPPRESS so flags given before the subcommand survive
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    common.add_argument("--orientation", choices=["+", "-", "both"], default=d("both"),
                        help="+ for e^1234, - for -e^1234 (default: both)")
    common.add_argument("--orientation-scale", default=d("1"), metavar="P/Q",
                        help="positive rational scale c of the volume form c e^1234")
    common.add_argument("--witness", action="store_true", default=d(False),
                        help="on failure, build and certify a tamed non-compatible J")
    common.add_argument("--seed", type=int, default=d(0))
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="tamecompat", parents=[_common_flags(suppress=False)],
                                     description="Tame/compatible analysis of 4-dimensional Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the Jacobi identity")
    p.add_argument("target", help="algebra file or catalog name")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", parents=[common], help="decide the tame-compatible property")
    p.add_argument("target", help="algebra file or catalog name")
    p.add_argument("--samples", type=int, default=0, help="cross-validate with this many random J")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-j", parents=[common], help="tame/compatible verdict for a given J")
    p.add_argument("target", help="algebra file or catalog name")
    p.add_argument("jfile", help="almost complex structure file")
    p.set_defaults(func=cmd_check_j)

    p = sub.add_parser("catalog", parents=[common], help="list built-in algebras")
    p.add_argument("--write", metavar="DIR", help="also write each algebra as a JSON file into DIR")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("repro", parents=[common], help="recompute the worked examples")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
