"""Carry-digit automata for arithmetic on path set fractals.

Each construction walks the input presentation digit by digit while holding
a bounded carry, emitting one output digit per input digit. Because p-adic
carries only move toward higher powers of p, output digit n depends only on
input digits 0..n, so a finite product graph suffices.

All public operations take and return :class:`~pathsets.core.PathSet`
handles. The ``*_automaton`` functions expose the raw construction together
with its state tuples so callers can check carry and size bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .core import (
    PathSet,
    Presentation,
    as_pathset,
    check_same_p,
    explore,
    standardize,
)
from .errors import BoundViolation, NotCoprime, NotPIntegral
from .rational import p_adic_digits, parse_rational, require_p_integral, singleton


class CarryState(NamedTuple):
    base: object  # input vertex, or (v1, v2) for Minkowski sums
    index: int | None  # position in the expansion of r (add_rational only)
    carry: int


@dataclass(frozen=True)
class CarryAutomaton:
    presentation: Presentation
    states: tuple  # CarryState per vertex id
    bound: int  # proved state-count bound for this construction
    carry_range: tuple  # (lo, hi) inclusive

    def check(self):
        lo, hi = self.carry_range
        for s in self.states:
            if not lo <= s.carry <= hi:
                raise BoundViolation(f"carry {s.carry} outside [{lo}, {hi}] at {s}")
        if len(self.states) > self.bound:
            raise BoundViolation(f"{len(self.states)} states exceed the bound {self.bound}")
        return self


def _state_name(G: Presentation):
    def name(s: CarryState) -> str:
        base = ",".join(G.name(v) for v in s.base) if isinstance(s.base, tuple) else G.name(s.base)
        idx = "" if s.index is None else f",{s.index}"
        return f"({base}{idx},{s.carry})"

    return name


def _working(P) -> PathSet:
    return as_pathset(P)


def add_rational_automaton(G: Presentation, r) -> CarryAutomaton:
    """Presentation of G + r, r p-integral.

    State (v, idx, e): idx walks the preperiod of r linearly and then cycles
    through the period. An edge v -> v' with digit l1 becomes an edge with
    digit (e + l1 + c) mod p and carry (e + l1 + c - digit) / p, where c is the
    digit of r at idx.
    """
    p = G.p
    exp = p_adic_digits(r, p)
    q0, q = len(exp.preperiod), len(exp.period)
    last = q0 + q - 1
    out = G.out_edges

    def successors(s: CarryState):
        c = exp.digit(s.index)
        nxt = s.index + 1 if s.index < last else q0
        for dst, l1 in out[s.base]:
            total = s.carry + l1 + c
            yield total % p, CarryState(dst, nxt, total // p)

    Q, states = explore(p, CarryState(G.start, 0, 0), successors, _state_name(G))
    return CarryAutomaton(Q, tuple(states), 2 * p * (q0 + q) * len(G), (0, 2)).check()


def add_rational(P, r) -> PathSet:
    """{y + r : y in Y}."""
    H = _working(P)
    r = require_p_integral(parse_rational(r), H.p)
    if H.empty:
        return H
    return PathSet(H.p, add_rational_automaton(H.presentation, r).presentation)


def minkowski_automaton(G1: Presentation, G2: Presentation) -> CarryAutomaton:
    """Raw product presentation of the sum set; generally not right-resolving."""
    p = G1.p
    out1, out2 = G1.out_edges, G2.out_edges

    def successors(s: CarryState):
        v1, v2 = s.base
        for d1, l1 in out1[v1]:
            for d2, l2 in out2[v2]:
                total = s.carry + l1 + l2
                yield total % p, CarryState((d1, d2), None, total // p)

    def name(s: CarryState) -> str:
        v1, v2 = s.base
        return f"({G1.name(v1)},{G2.name(v2)},{s.carry})"

    Q, states = explore(p, CarryState((G1.start, G2.start), None, 0), successors, name)
    return CarryAutomaton(Q, tuple(states), 3 * len(G1) * len(G2), (0, 2)).check()


def minkowski_sum(P1, P2, raw: bool = False):
    """{y1 + y2 : y1 in Y1, y2 in Y2}.

    Returns the standardized handle, or with ``raw=True`` the unprocessed
    product presentation (``None`` when either input is empty).
    """
    check_same_p(P1, P2)
    H1, H2 = _working(P1), _working(P2)
    if H1.empty or H2.empty:
        return None if raw else PathSet.empty_set(H1.p)
    A = minkowski_automaton(H1.presentation, H2.presentation)
    return A.presentation if raw else standardize(A.presentation)


def _require_coprime(M: int, p: int):
    if not isinstance(M, int) or M < 1:
        raise ValueError(f"multiplier must be a positive integer, got {M!r}")
    if gcd(M, p) != 1:
        raise NotCoprime(f"{M} is divisible by p={p}")


def mul_coprime_automaton(G: Presentation, M: int) -> CarryAutomaton:
    """Presentation of M*Y: digit (M*l + e) mod p, carry (e + M*l - digit) / p."""
    p = G.p
    _require_coprime(M, p)
    out = G.out_edges

    def successors(s: CarryState):
        for dst, l in out[s.base]:
            total = s.carry + M * l
            yield total % p, CarryState(dst, None, total // p)

    Q, states = explore(p, CarryState(G.start, None, 0), successors, _state_name(G))
    return CarryAutomaton(Q, tuple(states), (M + 1) * len(G), (0, M)).check()


def div_coprime_automaton(G: Presentation, M: int) -> CarryAutomaton:
    """Presentation of Y/M: digit d solves M*d = l - e (mod p), carry (e + M*d - l) / p."""
    p = G.p
    _require_coprime(M, p)
    Minv = pow(M, -1, p)
    out = G.out_edges

    def successors(s: CarryState):
        for dst, l in out[s.base]:
            d = (l - s.carry) * Minv % p
            yield d, CarryState(dst, None, (s.carry + M * d - l) // p)

    Q, states = explore(p, CarryState(G.start, None, 0), successors, _state_name(G))
    return CarryAutomaton(Q, tuple(states), (M + 1) * len(G), (0, M)).check()


def mul_coprime_int(P, M: int) -> PathSet:
    H = _working(P)
    _require_coprime(M, H.p)
    if H.empty:
        return H
    return PathSet(H.p, mul_coprime_automaton(H.presentation, M).presentation)


def div_coprime_int(P, M: int) -> PathSet:
    H = _working(P)
    _require_coprime(M, H.p)
    if H.empty:
        return H
    return PathSet(H.p, div_coprime_automaton(H.presentation, M).presentation)


def negate_automaton(G: Presentation) -> CarryAutomaton:
    """Presentation of -Y.

    While the carry is 0, digit 0 maps to 0; the first nonzero digit l maps to
    p - l and the carry drops to -1 for good, after which l maps to p - l - 1.
    """
    p = G.p
    out = G.out_edges

    def successors(s: CarryState):
        for dst, l in out[s.base]:
            if s.carry == 0 and l == 0:
                yield 0, CarryState(dst, None, 0)
            elif s.carry == 0:
                yield p - l, CarryState(dst, None, -1)
            else:
                yield p - l - 1, CarryState(dst, None, -1)

    Q, states = explore(p, CarryState(G.start, None, 0), successors, _state_name(G))
    return CarryAutomaton(Q, tuple(states), 2 * len(G), (-1, 0)).check()


def negate(P) -> PathSet:
    H = _working(P)
    if H.empty:
        return H
    return PathSet(H.p, negate_automaton(H.presentation).presentation)


def mul_p_power(P, k: int) -> PathSet:
    """p**k * Y: a chain of k zero-labeled vertices ahead of the old start."""
    H = _working(P)
    if k < 0:
        raise NotPIntegral(f"p^{k} maps Z_p outside Z_p")
    if H.empty or k == 0:
        return H
    G = H.presentation
    shift = {v: k + i for i, v in enumerate(G.vertices)}
    edges = [(j, j + 1, 0) for j in range(k - 1)] + [(k - 1, shift[G.start], 0)]
    edges += [(shift[s], shift[d], a) for s, d, a in G.edges]
    names = {j: f"z{j}" for j in range(k)}
    names.update({shift[v]: G.name(v) for v in G.vertices})
    Q = Presentation(p=G.p, vertices=range(k + len(G)), start=0, edges=edges, names=names)
    return PathSet(H.p, Q)


def zero_set(p: int) -> PathSet:
    return PathSet(p, Presentation(p=p, vertices=[0], start=0, edges=[(0, 0, 0)]))


def factor_rational(r: Fraction, p: int) -> tuple[int, int, int, int]:
    """Write r = (-1)^a p^k M1/M2 with p coprime to M1*M2; returns (a, k, M1, M2)."""
    r = require_p_integral(r, p)
    if r == 0:
        raise ValueError("zero has no such factorization")
    a = 1 if r < 0 else 0
    num, den = abs(r.numerator), r.denominator
    k = 0
    while num % p == 0:
        num //= p
        k += 1
    return a, k, num, den


def mul_rational(P, r) -> PathSet:
    """{r*y : y in Y} for p-integral r.

    Factor r = (-1)^a p^k M1/M2, then multiply by M1, divide by M2, negate
    a times and prepend k zero digits.
    """
    H = _working(P)
    r = require_p_integral(parse_rational(r), H.p)
    if H.empty:
        return H
    if r == 0:
        return zero_set(H.p)
    a, k, M1, M2 = factor_rational(r, H.p)
    out = H
    if M1 != 1:
        out = mul_coprime_int(out, M1)
    if M2 != 1:
        out = div_coprime_int(out, M2)
    if a:
        out = negate(out)
    return mul_p_power(out, k)


def singleton_set(r, p: int) -> PathSet:
    return standardize(singleton(r, p))
