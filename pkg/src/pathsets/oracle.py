"""Brute-force ground truth.

The depth-n prefixes of a path set are the cylinders of the nested
construction whose limit is the fractal: every y in Y lies in exactly one
residue class mod p**n coming from a length-n walk from the start vertex.
Enumerating them directly gives an independent check on every automaton
construction, since (y + r), (r*y) and (y1 + y2) mod p**n depend only on the
inputs mod p**n.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .core import PathSet, Presentation, as_pathset, trim
from .errors import EmptySet, EnumerationTooLarge
from .rational import mod_pn, parse_rational

DEFAULT_BUDGET = 10**7


def enumeration_budget() -> int:
    return int(os.environ.get("PATHSET_ENUM_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class PrefixSet:
    p: int
    depth: int
    values: frozenset  # residues mod p**depth

    @property
    def strings(self) -> frozenset:
        """Digit tuples (a0, ..., a_{n-1}), lowest digit first."""
        return frozenset(to_digits(v, self.p, self.depth) for v in self.values)

    def __len__(self):
        return len(self.values)


def to_digits(value: int, p: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        value, d = divmod(value, p)
        out.append(d)
    return tuple(out)


def _presentation(P) -> Presentation | None:
    if isinstance(P, PathSet):
        return P.presentation
    return P


def prefixes(P: Presentation | PathSet, n: int, budget: int | None = None) -> PrefixSet:
    """All length-n digit strings spelled by walks from the start vertex.

    Works on any presentation (nondeterministic, foreign alphabet). Walks
    into dead ends still contribute, so pass a trimmed presentation when the
    prefixes should all extend to infinite walks.
    """
    budget = enumeration_budget() if budget is None else budget
    G = _presentation(P)
    p = P.p
    if G is None:
        return PrefixSet(p, n, frozenset())
    # vertex -> residues of walks of the current length ending there
    layer = {G.start: {0}}
    weight = 1
    for _ in range(n):
        nxt: dict = {}
        size = 0
        for v, vals in layer.items():
            for dst, label in G.out_edges[v]:
                step = G.digit(label) * weight
                bucket = nxt.setdefault(dst, set())
                before = len(bucket)
                bucket.update(x + step for x in vals)
                size += len(bucket) - before
                if size > budget:
                    raise EnumerationTooLarge(f"more than {budget} (prefix, vertex) pairs")
        layer = nxt
        weight *= p
    values = set()
    for vals in layer.values():
        values |= vals
    return PrefixSet(p, n, frozenset(values))


def count_prefixes(P: Presentation | PathSet, n: int) -> int:
    """Number of length-n walks from the start vertex, as an exact integer.

    For a right-resolving presentation this equals the number of distinct
    depth-n prefixes.
    """
    G = _presentation(P)
    if G is None:
        return 0
    vec = {G.start: 1}
    for _ in range(n):
        nxt: dict = {}
        for v, c in vec.items():
            for dst, _ in G.out_edges[v]:
                nxt[dst] = nxt.get(dst, 0) + c
        vec = nxt
    return sum(vec.values())


def empirical_dim(P: PathSet | Presentation, n: int) -> float:
    """log_p(number of depth-n prefixes) / n."""
    H = as_pathset(P)
    if H.empty:
        raise EmptySet("empty path set has no growth rate")
    if n <= 0:
        raise ValueError("depth must be positive")
    return math.log(count_prefixes(H, n)) / (n * math.log(H.p))


def _values(P, n) -> set:
    if isinstance(P, Presentation):
        P = trim(P) or PathSet.empty_set(P.p)
    return set(prefixes(P, n).values)


def check_arith(kind: str, inputs, output, n: int, r: Fraction | str | int | None = None) -> bool:
    """Compare output prefixes mod p**n with the exact image of the inputs.

    ``kind`` is ``"add"`` (y + r), ``"sum"`` (y1 + y2) or ``"mul"`` (r * y).
    Inputs and output may be handles or presentations; presentations are
    trimmed first so that every enumerated prefix extends.
    """
    if not isinstance(inputs, (list, tuple)):
        inputs = [inputs]
    p = output.p
    m = p**n
    out_vals = _values(output, n)
    if kind == "add":
        (Y,) = inputs
        rr = mod_pn(parse_rational(r), p, n)
        expected = {(y + rr) % m for y in _values(Y, n)}
    elif kind == "mul":
        (Y,) = inputs
        rr = mod_pn(parse_rational(r), p, n)
        expected = {(y * rr) % m for y in _values(Y, n)}
    elif kind == "sum":
        Y1, Y2 = inputs
        v2 = _values(Y2, n)
        expected = {(a + b) % m for a in _values(Y1, n) for b in v2}
    else:
        raise ValueError(f"unknown arithmetic kind {kind!r}")
    return out_vals == expected
