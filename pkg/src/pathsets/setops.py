"""Union, intersection, decimation and shift of path set fractals."""

from __future__ import annotations

import numpy as np

from .core import (
    PathSet,
    Presentation,
    as_pathset,
    check_same_p,
    explore,
    standardize,
    subset_construction,
    trim,
)


def _disjoint_union(G1: Presentation, G2: Presentation) -> tuple[Presentation, list]:
    n1 = len(G1)
    idx1 = {v: i for i, v in enumerate(G1.vertices)}
    idx2 = {v: n1 + i for i, v in enumerate(G2.vertices)}
    edges = [(idx1[s], idx1[d], a) for s, d, a in G1.edges]
    edges += [(idx2[s], idx2[d], a) for s, d, a in G2.edges]
    names = {idx1[v]: f"1:{G1.name(v)}" for v in G1.vertices}
    names.update({idx2[v]: f"2:{G2.name(v)}" for v in G2.vertices})
    U = Presentation(p=G1.p, vertices=range(n1 + len(G2)), start=0, edges=edges, names=names)
    return U, [idx1[G1.start], idx2[G2.start]]


def union(P1, P2) -> PathSet:
    """Y1 u Y2 via subset construction on the disjoint union from {start1, start2}."""
    check_same_p(P1, P2)
    H1, H2 = as_pathset(P1), as_pathset(P2)
    if H1.empty:
        return H2
    if H2.empty:
        return H1
    U, starts = _disjoint_union(H1.presentation, H2.presentation)
    return standardize(subset_construction(U, starts))


def label_product(G1: Presentation, G2: Presentation) -> Presentation:
    """Pairs (u1, u2) with an a-edge whenever both components have one. Not trimmed."""
    out1, out2 = G1.out_edges, G2.out_edges

    def successors(pair):
        u1, u2 = pair
        for d1, a in out1[u1]:
            for d2, b in out2[u2]:
                if a == b:
                    yield a, (d1, d2)

    name = lambda pair: f"({G1.name(pair[0])},{G2.name(pair[1])})"
    Q, _ = explore(G1.p, (G1.start, G2.start), successors, name)
    return Q


def intersect(P1, P2) -> PathSet:
    """Y1 n Y2. The product must be trimmed: pairs with no infinite future die."""
    check_same_p(P1, P2)
    H1, H2 = as_pathset(P1), as_pathset(P2)
    if H1.empty or H2.empty:
        return PathSet.empty_set(H1.p)
    Q = trim(label_product(H1.presentation, H2.presentation))
    if Q is None:
        return PathSet.empty_set(H1.p)
    return standardize(Q)


def _reach_matrix(A: np.ndarray, k: int) -> np.ndarray:
    """Boolean R with R[u, w] iff some walk of length exactly k runs u -> w."""
    n = A.shape[0]
    result = np.eye(n, dtype=bool)
    base = A.astype(bool)
    while k:
        if k & 1:
            result = (result.astype(np.int64) @ base.astype(np.int64)) > 0
        base = (base.astype(np.int64) @ base.astype(np.int64)) > 0
        k >>= 1
    return result


def decimate(P, j: int, m: int) -> PathSet:
    """Keep digits j, j+m, j+2m, ... of every element.

    Subset states: the start is the set of vertices j steps from the start
    vertex; reading digit a moves S to every w reached by an a-edge out of S
    followed by exactly m-1 further steps.
    """
    if j < 0 or m < 1:
        raise ValueError("decimation needs j >= 0 and m >= 1")
    H = as_pathset(P)
    if H.empty:
        return H
    G = H.presentation
    n = len(G)
    idx = {v: i for i, v in enumerate(G.vertices)}
    A = np.zeros((n, n), dtype=np.int64)
    for s, d, _ in G.edges:
        A[idx[s], idx[d]] = 1
    R = _reach_matrix(A, m - 1)
    start = tuple(np.flatnonzero(_reach_matrix(A, j)[idx[G.start]]).tolist())
    after = [tuple(np.flatnonzero(R[x]).tolist()) for x in range(n)]
    out = {idx[v]: [(idx[d], a) for d, a in es] for v, es in G.out_edges.items()}

    def successors(S):
        by_label: dict = {}
        for u in S:
            for x, a in out[u]:
                by_label.setdefault(a, set()).update(after[x])
        return [(a, tuple(sorted(T))) for a, T in by_label.items()]

    name = lambda S: "{" + ",".join(G.name(G.vertices[i]) for i in S) + "}"
    Q, _ = explore(G.p, start, successors, name)
    return standardize(Q)


def shift(P) -> PathSet:
    """Drop the lowest digit: sum a_j p^j -> sum a_{j+1} p^j."""
    return decimate(P, 1, 1)
