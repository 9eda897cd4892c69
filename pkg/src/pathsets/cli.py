"""Command-line front end.

    pathsets <verb> [flags] [files...]

Presentations are read from JSON files, or from stdin when the file is
``-``. Set-valued verbs print a presentation; the others print a JSON report.
Exit status: 0 success, 1 domain error (reported as JSON on stdout), 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arithmetic, core, dimension, oracle, rational, setops
from .errors import PathSetError
from .io import dumps, loads

VERBS = (
    "validate", "standardize", "split", "eq", "add", "sum", "mul", "union", "intersect",
    "decimate", "shift", "dim", "prefixes", "count", "check", "singleton", "expand",
)


def _fmt(x: float) -> float:
    return float(f"{x:.12g}")


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True)


class _Reader:
    """Loads presentation arguments; ``-`` reads stdin once."""

    def __init__(self, stdin):
        self.stdin = stdin
        self._stdin_text = None

    def __call__(self, path: str):
        if path == "-":
            if self._stdin_text is None:
                self._stdin_text = self.stdin.read()
            return loads(self._stdin_text)
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())


def _rational_arg(text: str) -> Fraction:
    try:
        return rational.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathsets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, help, files=1):
        sp = sub.add_parser(name, help=help)
        if files:
            sp.add_argument("files", nargs=files, metavar="FILE")
        return sp

    verb("validate", "check standard/trimmed properties")
    verb("standardize", "trim, determinize and relabel to a standard presentation")
    verb("split", "split vertices until right-separating")
    verb("eq", "test whether two presentations denote the same set", files=2)
    verb("add", "add a p-integral rational").add_argument("-r", type=_rational_arg, required=True)
    verb("sum", "Minkowski sum", files=2).add_argument(
        "--raw", action="store_true", help="emit the product graph before standardization"
    )
    verb("mul", "multiply by a p-integral rational").add_argument(
        "-r", type=_rational_arg, required=True
    )
    verb("union", "set union", files=2)
    verb("intersect", "set intersection", files=2)
    sp = verb("decimate", "keep digits j, j+m, j+2m, ...")
    sp.add_argument("-j", type=_nonneg, required=True)
    sp.add_argument("-m", type=_positive, required=True)
    verb("shift", "drop the lowest digit")
    sp = verb("dim", "spectral radius and Hausdorff dimension")
    sp.add_argument("--per-vertex", action="store_true")
    sp.add_argument("--json", action="store_true", help="JSON report (the default)")
    sp = verb("prefixes", "enumerate depth-n digit prefixes")
    sp.add_argument("-n", type=_nonneg, required=True)
    sp.add_argument("--values", action="store_true", help="print residues mod p^n instead")
    verb("count", "count depth-n prefixes exactly").add_argument("-n", type=_nonneg, required=True)
    sp = verb("check", "verify an arithmetic result against prefix enumeration", files=0)
    sp.add_argument("--op", choices=("add", "sum", "mul"), required=True)
    sp.add_argument("--r", "-r", dest="r", type=_rational_arg)
    sp.add_argument("--in", dest="inputs", action="append", required=True)
    sp.add_argument("--out", dest="output", required=True)
    sp.add_argument("-n", type=_nonneg, required=True)
    verb("singleton", "recognize a one-point set and print its rational value")
    sp = verb("expand", "p-adic expansion of a rational", files=0)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-r", type=_rational_arg, required=True)
    return parser


def _fix_negative_rationals(argv: list[str]) -> list[str]:
    # argparse reads "-1/4" as an option; glue it onto its flag instead
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("-r", "--r"):
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def _dispatch(args, read) -> str:
    v = args.verb
    files = getattr(args, "files", None) or []
    if v == "expand":
        if not core.is_prime(args.p):
            raise PathSetError(f"p={args.p} is not a prime")
        exp = rational.p_adic_digits(args.r, args.p)
        return _emit({"preperiod": list(exp.preperiod), "period": list(exp.period)})
    if v == "check":
        inputs = [read(f) for f in args.inputs]
        out = read(args.output)
        ok = oracle.check_arith(args.op, inputs, out, args.n, args.r)
        return _emit(ok)

    Ps = [read(f) for f in files]
    if v == "validate":
        rep = core.validate(Ps[0])
        return _emit(
            {
                "right_resolving": rep.right_resolving,
                "reachable": rep.reachable,
                "injective_digit_map": rep.injective_digit_map,
                "all_vertices_have_exit": rep.all_vertices_have_exit,
                "offending_items": [[item, reason] for item, reason in rep.offending_items],
            }
        )
    if v == "standardize":
        return dumps(core.standardize(Ps[0]))
    if v == "split":
        return dumps(core.split_right_separating(Ps[0]))
    if v == "eq":
        return _emit(core.equivalent(*Ps))
    if v == "add":
        return dumps(arithmetic.add_rational(Ps[0], args.r))
    if v == "sum":
        res = arithmetic.minkowski_sum(*Ps, raw=args.raw)
        if res is None:
            res = core.PathSet.empty_set(Ps[0].p)
        return dumps(res)
    if v == "mul":
        return dumps(arithmetic.mul_rational(Ps[0], args.r))
    if v == "union":
        return dumps(setops.union(*Ps))
    if v == "intersect":
        return dumps(setops.intersect(*Ps))
    if v == "decimate":
        return dumps(setops.decimate(Ps[0], args.j, args.m))
    if v == "shift":
        return dumps(setops.shift(Ps[0]))
    if v == "dim":
        rep = dimension.hausdorff_dim(Ps[0])
        payload = {"spectral_radius": _fmt(rep.spectral_radius), "dimension": _fmt(rep.dimension)}
        if args.per_vertex:
            payload["per_vertex"] = {str(k): _fmt(d) for k, d in rep.per_vertex.items()}
            payload["sccs"] = [
                {"vertices": list(s.vertices), "spectral_radius": _fmt(s.spectral_radius)}
                for s in rep.scc_decomposition
            ]
        return _emit(payload)
    if v == "prefixes":
        P = Ps[0]
        trimmed = core.trim(P)
        ps = oracle.prefixes(trimmed if trimmed is not None else core.PathSet.empty_set(P.p), args.n)
        if args.values:
            return _emit(sorted(ps.values))
        return _emit(sorted(list(s) for s in ps.strings))
    if v == "count":
        return _emit(oracle.count_prefixes(core.standardize(Ps[0]), args.n))
    if v == "singleton":
        try:
            r = rational.recognize_singleton(Ps[0])
        except rational.NotSingleton:
            return _emit({"singleton": False})
        return _emit({"singleton": True, "value": str(r)})
    raise AssertionError(f"unhandled verb {v}")  # pragma: no cover


def run(argv=None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_fix_negative_rationals(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _dispatch(args, _Reader(stdin))
    except PathSetError as exc:
        stdout.write(_emit({"error": exc.code, "detail": str(exc)}) + "\n")
        return 1
    except (ValueError, ArithmeticError) as exc:
        stdout.write(_emit({"error": type(exc).__name__, "detail": str(exc)}) + "\n")
        return 1
    except OSError as exc:
        print(f"pathsets: {exc}", file=sys.stderr)
        return 2
    stdout.write(text + "\n")
    return 0


def main():
    sys.exit(run())
