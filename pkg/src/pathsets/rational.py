"""Eventually periodic p-adic expansions of p-integral rationals.

A rational r = a/b (lowest terms) lies in Z_p exactly when p does not divide
b. Its digits come from the exact recurrence

    d = a * b^{-1} mod p,    a <- (a - d*b) / p

with b fixed. The numerators a are exactly the successive tails of the
expansion, so the first repeated numerator pins down the minimal preperiod
and period.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import PathSet, Presentation, as_pathset
from .errors import NotPIntegral, NotSingleton

Rational = Fraction


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` (sign allowed) into a reduced Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def is_p_integral(r: Fraction, p: int) -> bool:
    return Fraction(r).denominator % p != 0


def require_p_integral(r: Fraction, p: int) -> Fraction:
    r = Fraction(r)
    if r.denominator % p == 0:
        raise NotPIntegral(f"{r} is not {p}-integral")
    return r


def mod_pn(r: Fraction, p: int, n: int) -> int:
    """Residue of a p-integral rational modulo p**n."""
    r = require_p_integral(r, p)
    m = p**n
    return r.numerator * pow(r.denominator, -1, m) % m if m > 1 else 0


@dataclass(frozen=True)
class RationalExpansion:
    p: int
    preperiod: tuple
    period: tuple

    def digits(self, n: int) -> list[int]:
        """The first ``n`` digits of the stream."""
        out = list(self.preperiod[:n])
        while len(out) < n:
            out.extend(self.period[: n - len(out)])
        return out

    def digit(self, j: int) -> int:
        q0 = len(self.preperiod)
        if j < q0:
            return self.preperiod[j]
        return self.period[(j - q0) % len(self.period)]

    def value(self) -> Fraction:
        """Exact value: pre + p^Q0 * per / (1 - p^Q)."""
        p = self.p
        pre = sum(d * p**j for j, d in enumerate(self.preperiod))
        per = sum(d * p**j for j, d in enumerate(self.period))
        return pre + Fraction(p ** len(self.preperiod) * per, 1 - p ** len(self.period))


def _normalize(p: int, preperiod: list, period: list) -> RationalExpansion:
    """Shortest period, then roll back preperiod digits the period absorbs."""
    q = len(period)
    for d in range(1, q + 1):
        if q % d == 0 and period == period[:d] * (q // d):
            period = period[:d]
            break
    while preperiod and preperiod[-1] == period[-1]:
        period = [preperiod.pop()] + period[:-1]
    return RationalExpansion(p, tuple(preperiod), tuple(period))


def p_adic_digits(r: Fraction | int | str, p: int) -> RationalExpansion:
    r = require_p_integral(parse_rational(r), p)
    a, b = r.numerator, r.denominator
    binv = pow(b, -1, p)
    seen = {}
    digits = []
    while a not in seen:
        seen[a] = len(digits)
        d = a * binv % p
        digits.append(d)
        a = (a - d * b) // p
    q0 = seen[a]
    return _normalize(p, digits[:q0], digits[q0:])


def singleton(r: Fraction | int | str, p: int) -> Presentation:
    """Standard presentation of {r}: a preperiod chain feeding a cycle."""
    exp = p_adic_digits(r, p)
    q0, q = len(exp.preperiod), len(exp.period)
    n = q0 + q
    edges = [(j, j + 1, exp.digit(j)) for j in range(n - 1)]
    edges.append((n - 1, q0, exp.digit(n - 1)))
    return Presentation(p=p, vertices=range(n), start=0, edges=edges)


def recognize_singleton(P: PathSet | Presentation) -> Fraction:
    """Return r when the path set is exactly {r}; raise NotSingleton otherwise.

    In a trimmed right-resolving graph, one exit edge per vertex leaves a
    single infinite walk, which runs into a cycle.
    """
    H = as_pathset(P)
    if H.empty:
        raise NotSingleton("empty path set")
    G = H.presentation
    if any(len(G.out_edges[v]) != 1 for v in G.vertices):
        raise NotSingleton("some vertex has more than one exit edge")
    digits, pos = [], {}
    v = G.start
    while v not in pos:
        pos[v] = len(digits)
        (dst, label), = G.out_edges[v]
        digits.append(label)
        v = dst
    q0 = pos[v]
    return _normalize(G.p, digits[:q0], digits[q0:]).value()
