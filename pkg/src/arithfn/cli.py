"""Command-line interface.

Exit codes: 0 success, 1 a check or identity verification failed,
2 usage, parse, format or domain errors.  Diagnostics go to stderr;
data goes to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as fnio
from .catalogue import verify_identities
from .dirichlet import ArithFn
from .errors import ArithfnError
from .expr import EvalOptions, eval_expr, parse_expr
from .numerics import DEFAULT_EPS, DEFAULT_TOL, get_backend
from .sieve import build_sieve
from .structure import (
    CheckResult,
    is_additive,
    is_completely_additive,
    is_completely_multiplicative,
    is_multiplicative,
    mobius_additivity_test,
)
from .transcend import dexp, dlog, psi, psi_inv

#: Hard cap on the truncation bound; the smallest-prime-factor table is
#: dense, so memory is the binding constraint.
MAX_BOUND = 10_000_000

_CHECKS = {
    "multiplicative": is_multiplicative,
    "completely-multiplicative": is_completely_multiplicative,
    "additive": is_additive,
    "completely-additive": is_completely_additive,
    "additive-mobius": mobius_additivity_test,
}

_TRANSFORMS = {"psi": psi, "psiinv": psi_inv, "log": dlog, "exp": dexp}


def _add_common(p, *, default_n: int, n_help: str | None = None):
    p.add_argument("--n", type=int, default=default_n, metavar="N",
                   help=n_help or f"truncation bound (default {default_n}, max {MAX_BOUND})")
    p.add_argument("--backend", choices=("rational", "complex"), default="rational",
                   help="coefficient backend (default: rational; exact)")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS,
                   help=f"float threshold below which a value counts as zero (default {DEFAULT_EPS})")
    p.add_argument("--normalize-unit", action="store_true",
                   help="let log/psi divide the input by a(1) instead of rejecting a(1) != 1")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="arithfn",
        description="Dirichlet-ring calculator for arithmetical functions truncated at a bound N.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the value of EXPR at a single index")
    p.add_argument("expr")
    p.add_argument("index", type=int, help="index n; the bound defaults to n")
    _add_common(p, default_n=0,
                n_help=f"truncation bound (defaults to the index, max {MAX_BOUND})")

    p = sub.add_parser("table", help="print EXPR tabulated for n = 1..N")
    p.add_argument("expr")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_common(p, default_n=1000)

    p = sub.add_parser("check", help="run a structure predicate on EXPR")
    p.add_argument("kind", choices=sorted(_CHECKS))
    p.add_argument("expr")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help=f"comparison tolerance in the complex backend (default {DEFAULT_TOL})")
    _add_common(p, default_n=1000)

    p = sub.add_parser("transform", help="apply psi/psiinv/log/exp and write the table to a file")
    p.add_argument("op", choices=sorted(_TRANSFORMS))
    p.add_argument("expr")
    p.add_argument("--out", required=True, help="output file (.json -> JSON, otherwise CSV)")
    p.add_argument("--format", choices=("csv", "json"), default=None,
                   help="force the output format instead of inferring from the extension")
    _add_common(p, default_n=1000)

    p = sub.add_parser("bell", help="print the per-prime series of EXPR at one prime as JSON")
    p.add_argument("expr")
    p.add_argument("--prime", type=int, required=True)
    _add_common(p, default_n=1000)

    p = sub.add_parser("verify", help="run the closed-form identity suite")
    p.add_argument("what", choices=("identities",))
    p.add_argument("--n", type=int, default=10000, metavar="N")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("import", help="validate a stored function table and summarize it")
    p.add_argument("file")
    p.add_argument("--backend", choices=("rational", "complex"), default="rational",
                   help="backend for CSV tables (JSON tables are self-describing)")

    return ap


def _checked_bound(n: int) -> int:
    if not 1 <= n <= MAX_BOUND:
        raise ArithfnError(f"bound must be in 1..{MAX_BOUND}, got {n}")
    return n


def _evaluate(args, bound: int) -> ArithFn:
    backend = get_backend(args.backend)
    sieve = build_sieve(bound)
    node = parse_expr(args.expr)
    options = EvalOptions(normalize_unit=args.normalize_unit, eps=args.eps)
    return eval_expr(node, sieve, backend, bound, options)


def _format_witness(res: CheckResult) -> str:
    if res.witness_kind == "pair":
        m, n = res.witness
        return f"({m},{n})"
    if res.witness_kind == "prime_power":
        p, k = res.witness
        return f"(p={p},k={k})"
    return f"(n={res.witness})"


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ArithfnError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "eval":
        bound = _checked_bound(args.n if args.n else args.index)
        if not 1 <= args.index <= bound:
            raise ArithfnError(f"index {args.index} outside 1..{bound}")
        fn = _evaluate(args, bound)
        print(fn.backend.format(fn[args.index]))
        return 0

    if cmd == "table":
        bound = _checked_bound(args.n)
        fn = _evaluate(args, bound)
        if args.format == "csv":
            sys.stdout.write(fnio.dump_csv(fn))
        elif args.format == "json":
            print(fnio.dump_json(fn))
        else:
            fmt = fn.backend.format
            for n, v in fn.items():
                print(f"{n}\t{fmt(v)}")
        return 0

    if cmd == "check":
        bound = _checked_bound(args.n)
        fn = _evaluate(args, bound)
        predicate = _CHECKS[args.kind]
        if args.kind in ("multiplicative", "additive"):
            res = predicate(fn, tol=args.tol)
        else:
            res = predicate(fn, sieve=build_sieve(bound), tol=args.tol)
        if res.ok:
            print(f"{args.kind}: true")
            return 0
        print(f"{args.kind}: false witness={_format_witness(res)}")
        return 1

    if cmd == "transform":
        bound = _checked_bound(args.n)
        fn = _evaluate(args, bound)
        op = _TRANSFORMS[args.op]
        if args.op in ("psi", "log"):
            out = op(fn, normalize_unit=args.normalize_unit)
        else:
            out = op(fn)
        fmt = args.format or ("json" if Path(args.out).suffix.lower() == ".json" else "csv")
        if fmt == "json":
            fnio.write_json(out, args.out)
        else:
            fnio.write_csv(out, args.out)
        return 0

    if cmd == "bell":
        bound = _checked_bound(args.n)
        fn = _evaluate(args, bound)
        sieve = build_sieve(bound)
        p = args.prime
        if not (2 <= p <= bound and sieve.is_prime(p)):
            raise ArithfnError(f"--prime must be a prime <= {bound}, got {p}")
        cap = sieve.prime_power_cap(p, bound)
        coeffs = [fn[p**k] if k else fn[1] for k in range(cap + 1)]
        print(json.dumps({"prime": p, "coeffs": [fn.backend.to_json(c) for c in coeffs]}))
        return 0

    if cmd == "verify":
        bound = _checked_bound(args.n)
        report = verify_identities(build_sieve(bound), bound, tol=args.tol)
        for line in report.lines():
            print(line)
        return 0 if report.all_passed else 1

    if cmd == "import":
        backend = get_backend(args.backend)
        fn = fnio.read_function(args.file, backend=backend)
        print(f"bound={fn.bound} backend={fn.backend.name} nonzero={len(fn.support())}")
        return 0

    raise AssertionError(cmd)  # pragma: no cover


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
