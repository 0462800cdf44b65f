"""Command-line front end: compute, localize, table, expand, verify.

Exit codes: 0 success, 2 usage, 3 verification failure or disagreement,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence

from . import io
from .algebra.errors import KpqError, NotInSpan, NotPolynomial, NotSymmetric, OutOfRank
from .algebra.mpoly import MPoly, parse
from .combinatorics.partitions import LieType, Partition, StrictPartition
from .functions.backends import BACKENDS, applicable, gx_finite
from .functions.basis import expand_in_basis
from .functions.grothendieck import grothendieck_g
from .functions.kinds import FnKind
from .localization.points import localize
from .localization.psi import gkm_check, localization_table, psi_table

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_INTERNAL = 0, 2, 3, 4

PF_MAX_N = 6


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Output:
    text: str
    code: int = EXIT_OK


def _kind(text: str) -> FnKind:
    try:
        return FnKind.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _strict(text: str) -> StrictPartition:
    try:
        return StrictPartition.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad strict partition {text!r}: {exc}") from None


def _shape(kind: FnKind, text: str) -> StrictPartition | Partition:
    if kind == FnKind.GA:
        try:
            return Partition.parse(text)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad partition {text!r}: {exc}") from None
    return _strict(text)


def _lie_type(text: str) -> LieType:
    try:
        t = LieType(text.upper())
    except ValueError:
        raise UsageError(f"unknown type {text!r}") from None
    if t == LieType.A:
        raise UsageError("tables are available for types B, C and D")
    return t


def _polynomial(kind: FnKind, lam, n: int, backend: str) -> MPoly:
    if kind == FnKind.GA:
        return grothendieck_g(lam, n)
    return gx_finite(kind, lam, n, backend)


def _backends_for(kind: FnKind, n: int) -> list[str]:
    if kind == FnKind.GA:
        return ["hl"]
    out = [bk for bk in BACKENDS if applicable(kind, bk, n)]
    if kind not in (FnKind.GP, FnKind.GQ) or n > PF_MAX_N:
        out.remove("pf")
    return out


def cmd_compute(args) -> Output:
    kind = _kind(args.kind)
    lam = _shape(kind, args.lam)
    n = args.n
    if n < 1:
        raise UsageError("n must be positive")
    if len(lam) > n:
        raise UsageError(f"{lam} has more than n={n} parts")
    allowed = _backends_for(kind, n)
    if args.backend != "all" and args.backend not in allowed:
        raise UsageError(f"backend {args.backend} does not apply to {kind} at n={n}; choose from {', '.join(allowed)}")
    chosen = allowed if args.backend == "all" else [args.backend]
    polys = {bk: _polynomial(kind, lam, n, bk) for bk in chosen}
    agree = len(set(polys.values())) == 1
    meta = dict(kind=kind, **{"lambda": lam}, n=n)
    if args.format == "json":
        docs = [io.poly_document(p, backend=bk, **meta) for bk, p in polys.items()]
        if len(docs) == 1:
            return Output(io.dumps(docs[0]))
        doc = {"format": io.FORMAT, "type": "comparison", "agree": agree, "documents": docs}
        return Output(io.dumps(doc), EXIT_OK if agree else EXIT_FAIL)
    if len(polys) == 1:
        return Output(str(next(iter(polys.values()))))
    lines = [f"{bk}: {p}" for bk, p in polys.items()]
    lines.append(f"agree: {'true' if agree else 'false'}")
    return Output("\n".join(lines), EXIT_OK if agree else EXIT_FAIL)


def cmd_localize(args) -> Output:
    kind = _kind(args.kind)
    lam = _shape(kind, args.lam)
    mu = _shape(kind, args.mu)
    if args.n is not None and args.n < 1:
        raise UsageError("n must be positive")
    try:
        value = localize(kind, lam, mu, args.n)
    except OutOfRank as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        doc = {"format": io.FORMAT, "type": "localization", "metadata": {"kind": str(kind), "lambda": str(lam), "mu": str(mu), "version": io.VERSION}}
        doc["value"] = io.relem_json(value)
        return Output(io.dumps(doc))
    return Output(str(value))


def cmd_table(args) -> Output:
    type_ = _lie_type(args.type)
    if args.n < 1:
        raise UsageError("n must be positive")
    table = psi_table(type_, args.n)
    loc = localization_table(type_, args.n)
    mismatches = table.mismatches(loc)
    report = gkm_check(table)
    ok = report.ok and not mismatches
    if args.format == "json":
        doc = io.table_document(table)
        doc["checks"] = {
            "gkm": report.ok,
            "gkm_pairs": len(report.entries),
            "localization_agrees": not mismatches,
            "mismatches": [f"{lam}|{mu}" for lam, mu in mismatches],
        }
        return Output(io.dumps(doc), EXIT_OK if ok else EXIT_FAIL)
    lines = [f"type {type_} n={args.n}: {len(table.shapes)} x {len(table.shapes)} table"]
    for lam in table.shapes:
        for mu in table.shapes:
            lines.append(f"psi[{lam}]({mu}) = {table[lam, mu]}")
    lines.append(f"gkm: {'pass' if report.ok else 'FAIL'} ({len(report.entries)} checks)")
    for e in report.failures()[:1]:
        lines.append(f"  first failure: lam={e.lam} mu={e.mu} root={e.root}: {e.detail}")
    lines.append(f"recurrence vs localization: {'agree' if not mismatches else 'DIFFER'}")
    for lam, mu in mismatches[:1]:
        lines.append(f"  first mismatch: {lam}|{mu}: {table[lam, mu]} vs {loc[lam, mu]}")
    return Output("\n".join(lines), EXIT_OK if ok else EXIT_FAIL)


def cmd_expand(args) -> Output:
    basis = _kind(args.basis)
    if basis not in (FnKind.GP, FnKind.GQ, FnKind.GA):
        raise UsageError("expansion bases are GP, GQ and GrothendieckA")
    if (args.poly is None) == (args.of is None):
        raise UsageError("give exactly one of --poly and --of")
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.poly is not None:
        try:
            F = parse(args.poly)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"cannot parse polynomial: {exc}") from None
    else:
        kind = _kind(args.of[0])
        lam = _shape(kind, args.of[1])
        if len(lam) > args.n:
            raise UsageError(f"{lam} has more than n={args.n} parts")
        F = _polynomial(kind, lam, args.n, "hl")
    try:
        coeffs = expand_in_basis(F, basis, args.n, args.equivariant)
    except (NotInSpan, NotSymmetric) as exc:
        return Output(f"not in the span of {basis}: {exc}", EXIT_FAIL)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        doc = {
            "format": io.FORMAT,
            "type": "expansion",
            "metadata": {"basis": str(basis), "n": str(args.n), "equivariant": args.equivariant, "version": io.VERSION},
            "coefficients": {str(s): io.relem_json(c) if args.equivariant else io.poly_document(c)["terms"] for s, c in coeffs.items()},
        }
        return Output(io.dumps(doc))
    if not coeffs:
        return Output("0")
    return Output("\n".join(f"{basis}[{s}]: {c}" for s, c in coeffs.items()))


def _verify_config(args):
    from .verify import VerifyConfig

    kwargs = {"max_n": args.max_n, "d_parity": args.d_parity, "wtb": args.wtb, "workers": args.workers}
    if args.max_lambda is not None:
        kwargs["max_lambda"] = _strict(args.max_lambda)
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    return VerifyConfig(**kwargs)


def cmd_verify(args) -> Output:
    from .verify import run_suite

    cfg = _verify_config(args)
    results = run_suite(args.suite, cfg)
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {"format": io.FORMAT, "type": "verification", "suite": args.suite, "passed": ok, "criteria": [r.as_dict() for r in results]}
        return Output(io.dumps(doc), EXIT_OK if ok else EXIT_FAIL)
    lines = [r.line() for r in results]
    lines.append(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
    return Output("\n".join(lines), EXIT_OK if ok else EXIT_FAIL)


def build_parser() -> argparse.ArgumentParser:
    from .combinatorics.partitions import DIAGONAL_CONVENTIONS
    from .functions.eyd_formula import WTB_CONVENTIONS
    from .verify import SUITES

    p = argparse.ArgumentParser(prog="kpq", description="K-theoretic factorial Schur P- and Q-functions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {io.VERSION}")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compute", parents=[fmt], help="expand GX_lambda^(n) as a polynomial")
    c.add_argument("kind", help="GP, GQ, GB, GC, GD or GrothendieckA")
    c.add_argument("lam", help="comma-separated parts, '-' for the empty partition")
    c.add_argument("n", type=int)
    c.add_argument("--backend", choices=BACKENDS + ("all",), default="hl")
    c.set_defaults(func=cmd_compute)

    lo = sub.add_parser("localize", parents=[fmt], help="restrict GX_lambda to the fixed point of mu")
    lo.add_argument("kind")
    lo.add_argument("lam")
    lo.add_argument("mu")
    lo.add_argument("--n", type=int, default=None, help="rank (default: the least sufficient one)")
    lo.set_defaults(func=cmd_localize)

    t = sub.add_parser("table", parents=[fmt], help="restriction table with GKM and localization checks")
    t.add_argument("type", help="B, C or D")
    t.add_argument("n", type=int)
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("expand", parents=[fmt], help="expand a symmetric polynomial in a basis")
    e.add_argument("basis", help="GP, GQ or GrothendieckA")
    e.add_argument("n", type=int)
    e.add_argument("--poly", help="polynomial in canonical text form")
    e.add_argument("--of", nargs=2, metavar=("KIND", "LAMBDA"), help="expand GX_lambda^(n) itself")
    e.add_argument("--equivariant", action="store_true", help="use the basis with parameters b")
    e.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify", parents=[fmt], help="run an acceptance suite")
    v.add_argument("suite", choices=tuple(SUITES))
    v.add_argument("--max-lambda", default=None, help="largest strict partition in the sweeps (default 4,3,2,1)")
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--d-parity", choices=DIAGONAL_CONVENTIONS, default="odd-hat")
    v.add_argument("--wtb", choices=WTB_CONVENTIONS, default="uniform")
    v.add_argument("--workers", type=int, default=None, help="worker processes (default: $KPQ_MAX_WORKERS or 1)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"kpq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotPolynomial as exc:
        print(f"kpq: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except KpqError as exc:
        print(f"kpq: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out.text + "\n")
    return out.code


if __name__ == "__main__":
    sys.exit(main())
