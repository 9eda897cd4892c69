"""Shared fixtures: hand-entered presentations of worked examples and random generators."""

import itertools
import random
from fractions import Fraction

from pathsets import Presentation, standardize


def cantor(p, digits):
    """Sigma_p(D): one vertex with a self-loop per digit."""
    return Presentation(p=p, vertices=[0], start=0, edges=[(0, 0, d) for d in digits])


CANTOR01 = cantor(3, [0, 1])

# Y01 + 2 entered by hand, vertices 0200, 0011, 0000, 0001.
CANTOR01_PLUS_2 = Presentation(
    p=3,
    vertices=[0, 1, 2, 3],
    start=0,
    edges=[(0, 2, 2), (0, 1, 0), (1, 2, 1), (1, 3, 2), (2, 2, 0), (2, 3, 1), (3, 3, 1), (3, 2, 0)],
    names={0: "0200", 1: "0011", 2: "0000", 3: "0001"},
)

# (1/4) Y01 entered by hand from a drawing, vertices 00, 01, 02, 03.
QUARTER_CANTOR_DRAWN = Presentation(
    p=3,
    vertices=[0, 1, 2, 3],
    start=0,
    edges=[(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 3, 2), (2, 2, 1), (2, 3, 2), (3, 0, 0), (3, 2, 1)],
    names={0: "00", 1: "01", 2: "02", 3: "03"},
)

# The same graph with the 0-labeled exit of 03 pointing at 01, as the carry rule gives.
QUARTER_CANTOR = Presentation(
    p=3,
    vertices=[0, 1, 2, 3],
    start=0,
    edges=[(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 3, 2), (2, 2, 1), (2, 3, 2), (3, 1, 0), (3, 2, 1)],
    names={0: "00", 1: "01", 2: "02", 3: "03"},
)

GOLDEN_MEAN = Presentation(
    p=3, vertices=[0, 1], start=0, edges=[(0, 0, 0), (0, 1, 1), (1, 0, 0)],
    names={0: "000", 1: "001"},
)

Y14_MATRIX = [
    [1, 1, 1, 0, 0],
    [1, 1, 1, 0, 0],
    [1, 1, 0, 1, 1],
    [1, 1, 0, 1, 1],
    [1, 1, 0, 1, 1],
]


def random_presentation(rng, p, max_vertices=6, min_labels=1):
    """Random right-resolving presentation; may have dead or unreachable parts."""
    n = rng.randint(1, max_vertices)
    edges = []
    for v in range(n):
        k = rng.randint(min_labels if v == 0 else 0, p)
        for a in rng.sample(range(p), k):
            edges.append((v, rng.randrange(n), a))
    return Presentation(p=p, vertices=range(n), start=0, edges=edges)


def random_standard(rng, p, max_vertices=6):
    """Nonempty standardized handle."""
    while True:
        H = standardize(random_presentation(rng, p, max_vertices))
        if not H.empty:
            return H


def random_rational(rng, p, max_num=50, max_den=50, nonzero=False):
    while True:
        den = rng.randint(1, max_den)
        if den % p == 0:
            continue
        r = Fraction(rng.randint(-max_num, max_num), den)
        if nonzero and r == 0:
            continue
        return r


def naive_prefix_values(P, n):
    """Independent brute force: try every digit string and simulate the walk."""
    p = P.p
    out = set()
    for digits in itertools.product(range(p), repeat=n):
        current = {P.start}
        for d in digits:
            current = {dst for v in current for dst, a in P.out_edges[v] if P.digit(a) == d}
            if not current:
                break
        if current:
            out.add(sum(d * p**j for j, d in enumerate(digits)))
    return out


def rng(seed):
    return random.Random(seed)


def infinite_prefix_values(P, n):
    """Depth-n prefixes of infinite walks, without trimming.

    A walk that can be continued for |V| more steps revisits a vertex, so it
    extends forever; truncating the depth n+|V| prefixes gives exactly the
    depth-n prefixes of the path set.
    """
    from pathsets.oracle import prefixes

    m = P.p**n
    return {x % m for x in prefixes(P, n + len(P.vertices)).values}
