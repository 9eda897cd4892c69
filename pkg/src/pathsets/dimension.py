"""Spectral radius and Hausdorff dimension of path set fractals.

For a standard presentation with adjacency matrix A the Hausdorff dimension
is log_p of the spectral radius of A. The spectral radius of a nonnegative
matrix is the largest radius among its irreducible diagonal blocks (strongly
connected components), so it is computed block by block with power iteration
on A_H + I, where the shift makes every irreducible block primitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import PathSet, Presentation, as_pathset
from .errors import EmptySet, NumericalFailure

REL_TOL = 1e-12
MAX_ITER = 1_000_000


def adjacency_matrix(P: Presentation) -> np.ndarray:
    """Integer matrix a[i, j] = number of edges i -> j, in presentation vertex order."""
    index = {v: i for i, v in enumerate(P.vertices)}
    A = np.zeros((len(P.vertices), len(P.vertices)), dtype=np.int64)
    for src, dst, _ in P.edges:
        A[index[src], index[dst]] += 1
    return A


def strongly_connected_components(A) -> list[list[int]]:
    """Tarjan's algorithm (iterative). Components come out in reverse topological order."""
    A = np.asarray(A)
    n = A.shape[0]
    succ = [np.flatnonzero(A[i]).tolist() for i in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            while i < len(succ[v]):
                w = succ[v][i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comps


def _irreducible_radius(B: np.ndarray) -> float:
    """Perron root of an irreducible nonnegative block.

    Power iteration on B + I from the all-ones vector. For a positive vector x
    the Collatz-Wielandt quotients min_i (Bx)_i/x_i and max_i (Bx)_i/x_i
    bracket the Perron root, so iteration stops once the bracket is tight.
    """
    n = B.shape[0]
    if n == 1:
        return float(B[0, 0])
    C = B.astype(float) + np.eye(n)
    x = np.ones(n)
    for _ in range(MAX_ITER):
        y = C @ x
        ratios = y / x
        lo, hi = ratios.min(), ratios.max()
        if hi - lo <= REL_TOL * (hi - 1.0):
            return float((lo + hi) / 2) - 1.0
        x = y / np.linalg.norm(y)
    raise NumericalFailure("power iteration did not converge", last_iterate=x)


def spectral_radius(A) -> float:
    """Spectral radius of a nonnegative integer matrix (0 for nilpotent or empty A)."""
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    if (A < 0).any():
        raise ValueError("adjacency matrix has negative entries")
    best = 0.0
    for comp in strongly_connected_components(A):
        best = max(best, _irreducible_radius(A[np.ix_(comp, comp)]))
    return best


def _log_p(x: float, p: int) -> float:
    return math.log(x) / math.log(p) if x > 0 else float("-inf")


@dataclass(frozen=True)
class SCCInfo:
    vertices: tuple
    spectral_radius: float


@dataclass(frozen=True)
class DimensionReport:
    spectral_radius: float
    dimension: float
    per_vertex: dict = field(default_factory=dict)
    scc_decomposition: tuple = ()


def scc_dimensions(P: PathSet | Presentation) -> tuple[dict, tuple]:
    """Per-vertex dimensions: log_p of the largest radius among reachable components.

    Returns ``(per_vertex, sccs)``, where ``sccs`` lists each component with
    the spectral radius of its induced block.
    """
    H = as_pathset(P)
    if H.empty:
        raise EmptySet("dimension of the empty set is undefined")
    G = H.presentation
    A = adjacency_matrix(G)
    comps = strongly_connected_components(A)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    radius = [spectral_radius(A[np.ix_(c, c)]) for c in comps]
    # Tarjan emits sinks first, so successors' best radii are already known.
    best = [0.0] * len(comps)
    for ci, comp in enumerate(comps):
        b = radius[ci]
        for v in comp:
            for w in np.flatnonzero(A[v]):
                cj = comp_of[int(w)]
                if cj != ci:
                    b = max(b, best[cj])
        best[ci] = b
    per_vertex = {G.vertices[v]: _log_p(best[comp_of[v]], G.p) for v in range(len(G))}
    sccs = tuple(
        SCCInfo(tuple(G.vertices[v] for v in comp), radius[ci]) for ci, comp in enumerate(comps)
    )
    return per_vertex, sccs


def hausdorff_dim(P: PathSet | Presentation) -> DimensionReport:
    H = as_pathset(P)
    if H.empty:
        raise EmptySet("dimension of the empty set is undefined")
    G = H.presentation
    sigma = spectral_radius(adjacency_matrix(G))
    per_vertex, sccs = scc_dimensions(H)
    return DimensionReport(sigma, _log_p(sigma, G.p), per_vertex, sccs)
