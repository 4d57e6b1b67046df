"""Command-line front end.

Exit codes: 0 success, 2 usage or malformed partition, 3 partition outside
the box, 4 ``l + k != n``, 5 a verification suite found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from qschubert import kernels
from qschubert.partitions import (
    GrassmannianContext,
    PartitionError,
    durfee,
    fits_in_box,
    format_partition,
    largest_square_in_overlap,
    parse_partition,
)
from qschubert.quantum import gw_invariant, quantum_product_basis
from qschubert.rimhooks import n_core, sign_from_widths
from qschubert.verify import SCHEMA, SUITE_NAMES, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BOX = 3
EXIT_SPLIT = 4
EXIT_COUNTEREXAMPLE = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _partition_arg(args: argparse.Namespace, name: str) -> tuple[int, ...]:
    text = getattr(args, name)
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise CliError(EXIT_USAGE, f"--{name}: {exc}") from None


def _context(args: argparse.Namespace) -> GrassmannianContext:
    if args.l < 1 or args.k < 1:
        raise CliError(EXIT_USAGE, f"--l and --k must be positive, got l={args.l}, k={args.k}")
    return GrassmannianContext(args.l, args.k)


def _boxed(args: argparse.Namespace, ctx: GrassmannianContext, *names: str) -> list[tuple[int, ...]]:
    out = []
    for name in names:
        p = _partition_arg(args, name)
        if not fits_in_box(p, ctx):
            raise CliError(EXIT_BOX, f"--{name}={format_partition(p)} does not fit in the {ctx.l}x{ctx.k} box")
        out.append(p)
    return out


def _document(command: str, args: dict, ctx: GrassmannianContext | None, payload: dict) -> dict:
    return {
        "schema": SCHEMA,
        "command": {"name": command, "args": args},
        "context": None if ctx is None else {"l": ctx.l, "k": ctx.k},
        "payload": payload,
    }


def cmd_product(args: argparse.Namespace) -> tuple[dict, list[str], int]:
    ctx = _context(args)
    lam, mu = _boxed(args, ctx, "lambda", "mu")
    product = quantum_product_basis(lam, mu, ctx)
    terms = [{"d": d, "nu": list(nu), "coeff": c} for (d, nu), c in product]
    lines = [f"q^{d} * sigma[{format_partition(nu)}] : {c}" for (d, nu), c in product] or ["0"]
    doc = _document("product", {"lambda": list(lam), "mu": list(mu)}, ctx, {"terms": terms})
    return doc, lines, EXIT_OK


def cmd_core(args: argparse.Namespace) -> tuple[dict, list[str], int]:
    if args.n is None or args.n < 2:
        raise CliError(EXIT_USAGE, f"--n must be at least 2, got {args.n}")
    rho = _partition_arg(args, "rho")
    ctx = None
    if args.l is not None or args.k is not None:
        if args.l is None or args.k is None:
            raise CliError(EXIT_USAGE, "--l and --k must be given together")
        ctx = _context(args)
        if ctx.n != args.n:
            raise CliError(EXIT_SPLIT, f"--l + --k = {ctx.n} does not equal --n={args.n}")
    trace = n_core(rho, args.n)
    if ctx is not None:
        eps = sign_from_widths(trace.widths, ctx.k)
    elif trace.r % 2 == 0:
        # r*k is even, so the sign does not depend on how n splits
        eps = sign_from_widths(trace.widths, 0)
    else:
        eps = None
    payload = {
        "rho": list(rho),
        "n": args.n,
        "core": list(trace.core),
        "r": trace.r,
        "widths": trace.widths,
        "epsilon": eps,
    }
    lines = [
        f"core: {format_partition(trace.core)}",
        f"r: {trace.r}",
        f"widths: {','.join(map(str, trace.widths)) or '-'}",
        f"epsilon: {'n/a' if eps is None else f'{eps:+d}'}",
    ]
    doc = _document("core", {"n": args.n, "rho": list(rho)}, ctx, payload)
    return doc, lines, EXIT_OK


def cmd_dmin_dmax(args: argparse.Namespace) -> tuple[dict, list[str], int]:
    ctx = _context(args)
    lam, mu = _boxed(args, ctx, "lambda", "mu")
    degrees = quantum_product_basis(lam, mu, ctx).degrees()
    payload = {
        "d_min": degrees[0] if degrees else None,
        "square": largest_square_in_overlap(lam, mu, ctx),
        "d_max": degrees[-1] if degrees else None,
        "bound": min(durfee(lam), durfee(mu)),
        "degrees": degrees,
    }
    lines = [f"{key}: {'none' if value is None else value}" for key, value in payload.items() if key != "degrees"]
    lines.append(f"degrees: {','.join(map(str, degrees)) or '-'}")
    doc = _document("dmin-dmax", {"lambda": list(lam), "mu": list(mu)}, ctx, payload)
    return doc, lines, EXIT_OK


def cmd_gw(args: argparse.Namespace) -> tuple[dict, list[str], int]:
    ctx = _context(args)
    lam, mu, nu = _boxed(args, ctx, "lambda", "mu", "nu")
    if args.d < 0:
        raise CliError(EXIT_USAGE, f"--d must be nonnegative, got {args.d}")
    value = gw_invariant(lam, mu, nu, args.d, ctx)
    doc = _document("gw", {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "d": args.d}, ctx, {"value": value})
    return doc, [str(value)], EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[dict, list[str], int]:
    names = [s for s in SUITE_NAMES] if args.suite == "all" else [args.suite]
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    reports = []
    for name in names:
        options: dict[str, Any] = {}
        if name == "core-orders" and args.max_n is not None:
            options = {"ns": range(2, min(6, args.max_n) + 1), "max_size": min(14, 2 * args.max_n)}
        reports += run_sweep(
            name,
            max_n=args.max_n,
            max_side=args.max_side,
            all_splits=args.all_splits,
            workers=workers,
            sample=args.sample,
            seed=args.seed,
            **options,
        )
    passed = all(r.passed for r in reports)
    payload = {"passed": passed, "reports": [r.to_dict(timing=not args.no_timing) for r in reports]}
    lines = [r.summary() for r in reports]
    for r in reports:
        for fail in r.counterexamples:
            lines.append(f"  counterexample [{r.suite}] {json.dumps(fail, sort_keys=True)}")
    lines.append("PASS" if passed else "FAIL")
    doc = _document(
        "verify",
        {"suite": args.suite, "max_n": args.max_n, "max_side": args.max_side, "all_splits": args.all_splits,
         "sample": args.sample, "seed": args.seed},
        None,
        payload,
    )
    return doc, lines, EXIT_OK if passed else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschubert",
        description="Quantum Schubert calculus on Grassmannians via the rim-hook rule.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s ({SCHEMA}, {kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("product", help="quantum product sigma_lambda * sigma_mu")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    common(p)
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("core", help="n-core, rim-hook count, widths and sign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rho", required=True, metavar="PARTITION")
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int)
    common(p)
    p.set_defaults(handler=cmd_core)

    p = sub.add_parser("dmin-dmax", help="smallest and largest q-degrees of a product")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    common(p)
    p.set_defaults(handler=cmd_dmin_dmax)

    p = sub.add_parser("gw", help="three-point genus-zero invariant <lambda, mu, nu>_d")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    p.add_argument("--nu", required=True, metavar="PARTITION")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(handler=cmd_gw)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suite", choices=SUITE_NAMES + ["all"], required=True)
    p.add_argument("--max-n", type=int, help="bound on l+k")
    p.add_argument("--max-side", type=int, help="bound on max(l, k)")
    p.add_argument("--all-splits", action="store_true", help="include l > k for product-level suites")
    p.add_argument("--workers", type=int, help="worker processes (default: logical CPUs)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, help="check only a seeded random subset of this many cases per box")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times, for byte-identical output")
    common(p)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, lines, code = args.handler(args)
    except CliError as exc:
        print(f"qschubert: error: {exc}", file=sys.stderr)
        return exc.code
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
