"""Presentations of p-adic path set fractals.

A presentation is a prime ``p`` together with a pointed, edge-labeled
directed multigraph. The infinite walks leaving the start vertex spell out
digit streams ``a0, a1, a2, ...`` and the set of p-adic integers
``sum(a_j * p**j)`` obtained this way is the path set fractal it denotes.

Labels may come from a foreign alphabet, in which case a digit map sends each
symbol to a digit in ``range(p)``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Mapping

from .errors import PMismatch, StructuralError

Edge = tuple  # (src, dst, label)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Presentation:
    """A pointed labeled multigraph over a digit alphabet.

    ``edges`` holds ``(src, dst, label)`` triples. Parallel duplicates are kept
    as given (the graph is a multigraph); the JSON loader is where duplicates
    are collapsed. ``alphabet=None`` and ``digit_map=None`` mean the identity
    map on ``range(p)``. ``names`` are display names only.
    """

    p: int
    vertices: tuple
    start: Hashable
    edges: tuple
    alphabet: tuple | None = None
    digit_map: Mapping | None = None
    names: Mapping = field(default_factory=dict)

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self):
        set_ = lambda k, v: object.__setattr__(self, k, v)
        set_("vertices", tuple(self.vertices))
        set_("edges", tuple(tuple(e) for e in self.edges))
        if self.alphabet is not None:
            set_("alphabet", tuple(self.alphabet))
        if self.digit_map is not None:
            set_("digit_map", dict(self.digit_map))
        set_("names", {v: n for v, n in dict(self.names).items()})
        self._check_structure()

    def _check_structure(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise StructuralError(f"p={self.p!r} is not a prime")
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise StructuralError("duplicate vertex ids")
        if self.start not in vset:
            raise StructuralError(f"start vertex {self.start!r} not among vertices")
        symbols = set(self.symbols)
        for e in self.edges:
            if len(e) != 3:
                raise StructuralError(f"edge {e!r} is not a (src, dst, label) triple")
            src, dst, label = e
            if src not in vset or dst not in vset:
                raise StructuralError(f"edge {e!r} has an endpoint outside the vertex set")
            if label not in symbols:
                raise StructuralError(f"edge {e!r} has label outside the alphabet")
        if self.digit_map is None:
            if not symbols <= set(range(self.p)):
                raise StructuralError("alphabet without digit_map must consist of digits")
        else:
            for a in symbols:
                d = self.digit_map.get(a)
                if d is None:
                    raise StructuralError(f"digit_map has no entry for symbol {a!r}")
                if not (isinstance(d, int) and 0 <= d < self.p):
                    raise StructuralError(f"digit_map sends {a!r} to non-digit {d!r}")
        for v in self.names:
            if v not in vset:
                raise StructuralError(f"name given for unknown vertex {v!r}")

    @property
    def symbols(self) -> tuple:
        if self.alphabet is None:
            return tuple(range(self.p))
        return self.alphabet

    @property
    def has_identity_map(self) -> bool:
        if self.digit_map is None:
            return True
        return all(self.digit_map[a] == a for a in self.symbols)

    def digit(self, label) -> int:
        return label if self.digit_map is None else self.digit_map[label]

    @cached_property
    def out_edges(self) -> dict:
        """Vertex -> tuple of ``(dst, label)`` in edge order."""
        out = {v: [] for v in self.vertices}
        for src, dst, label in self.edges:
            out[src].append((dst, label))
        return {v: tuple(es) for v, es in out.items()}

    def name(self, v) -> str:
        return str(self.names.get(v, v))

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class ValidationReport:
    right_resolving: bool
    reachable: bool
    injective_digit_map: bool
    all_vertices_have_exit: bool
    offending_items: tuple = ()

    @property
    def standard(self) -> bool:
        return self.right_resolving and self.reachable and self.injective_digit_map

    @property
    def trimmed(self) -> bool:
        return self.standard and self.all_vertices_have_exit


@dataclass(frozen=True)
class PathSet:
    """Handle on the subset of Z_p denoted by a presentation.

    ``presentation`` is in working form (trimmed, right-resolving, identity
    digit map), or ``None`` for the empty set.
    """

    p: int
    presentation: Presentation | None

    __hash__ = None  # type: ignore[assignment]

    @property
    def empty(self) -> bool:
        return self.presentation is None

    @classmethod
    def empty_set(cls, p: int) -> "PathSet":
        return cls(p, None)

    def __len__(self):
        return 0 if self.presentation is None else len(self.presentation)


def _reachable(start, out_edges: Mapping) -> list:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for dst, _ in out_edges[v]:
            if dst not in seen:
                seen.add(dst)
                order.append(dst)
                queue.append(dst)
    return order


def validate(P: Presentation) -> ValidationReport:
    """Check the standard/trimmed properties, listing every violation."""
    offending = []
    right_resolving = True
    for v in P.vertices:
        seen = {}
        for dst, label in P.out_edges[v]:
            if label in seen:
                right_resolving = False
                offending.append((v, f"two exit edges labeled {label!r}"))
            seen[label] = dst
    reach = set(_reachable(P.start, P.out_edges))
    reachable = len(reach) == len(P.vertices)
    for v in P.vertices:
        if v not in reach:
            offending.append((v, "unreachable from start"))
    injective = True
    if P.digit_map is not None:
        first = {}
        for a in P.symbols:
            d = P.digit_map[a]
            if d in first:
                injective = False
                offending.append((a, f"digit_map sends {first[d]!r} and {a!r} to {d}"))
            else:
                first[d] = a
    has_exit = True
    for v in P.vertices:
        if not P.out_edges[v]:
            has_exit = False
            offending.append((v, "no exit edge"))
    return ValidationReport(right_resolving, reachable, injective, has_exit, tuple(offending))


def _restrict(P: Presentation, keep: Iterable) -> Presentation:
    keep = set(keep)
    return Presentation(
        p=P.p,
        vertices=[v for v in P.vertices if v in keep],
        start=P.start,
        edges=[e for e in P.edges if e[0] in keep and e[1] in keep],
        alphabet=P.alphabet,
        digit_map=P.digit_map,
        names={v: n for v, n in P.names.items() if v in keep},
    )


def trim(P: Presentation) -> Presentation | None:
    """Drop vertices with no infinite continuation, then unreachable ones.

    Returns ``None`` when the start vertex itself dies, i.e. when the
    presentation denotes the empty set. Vertex ids are preserved.
    """
    alive = set(P.vertices)
    out_count = {v: len(P.out_edges[v]) for v in P.vertices}
    preds = defaultdict(list)
    for src, dst, _ in P.edges:
        preds[dst].append(src)
    queue = deque(v for v in P.vertices if out_count[v] == 0)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for u in preds[v]:
            if u in alive:
                out_count[u] -= 1
                if out_count[u] == 0:
                    queue.append(u)
    if P.start not in alive:
        return None
    live_out = {v: tuple(e for e in P.out_edges[v] if e[0] in alive) for v in alive}
    reach = _reachable(P.start, live_out)
    if len(reach) == len(P.vertices):
        return P
    return _restrict(P, reach)


def apply_digit_map(P: Presentation) -> Presentation:
    """Relabel every edge by its digit, leaving an identity-mapped presentation."""
    if P.digit_map is None:
        return P
    return Presentation(
        p=P.p,
        vertices=P.vertices,
        start=P.start,
        edges=[(s, d, P.digit_map[a]) for s, d, a in P.edges],
        names=P.names,
    )


def explore(
    p: int,
    start_state,
    successors: Callable[[Any], Iterable[tuple]],
    name: Callable[[Any], str] = str,
) -> tuple[Presentation, list]:
    """Breadth-first build of the graph reachable from ``start_state``.

    ``successors(state)`` yields ``(label, next_state)`` pairs. States are
    renumbered densely in discovery order with the start at 0, exploring each
    state's exits by increasing label. Returns the presentation and the list
    of states indexed by vertex id.
    """
    index = {start_state: 0}
    states = [start_state]
    edges = []
    queue = deque([start_state])
    while queue:
        s = queue.popleft()
        src = index[s]
        for label, t in sorted(successors(s), key=lambda lt: lt[0]):
            if t not in index:
                index[t] = len(states)
                states.append(t)
                queue.append(t)
            edges.append((src, index[t], label))
    P = Presentation(
        p=p,
        vertices=range(len(states)),
        start=0,
        edges=edges,
        names={i: name(s) for i, s in enumerate(states)},
    )
    return P, states


def subset_construction(P: Presentation, initial: Iterable) -> Presentation:
    """Determinize ``P`` starting from the vertex set ``initial``."""
    if not P.has_identity_map:
        raise StructuralError("subset construction needs an identity digit map")
    out = P.out_edges
    order = {v: i for i, v in enumerate(P.vertices)}
    canon = lambda vs: tuple(sorted(set(vs), key=order.__getitem__))

    def successors(S):
        by_label = defaultdict(set)
        for v in S:
            for dst, label in out[v]:
                by_label[label].add(dst)
        return [(a, canon(T)) for a, T in by_label.items()]

    name = lambda S: "{" + ",".join(P.name(v) for v in S) + "}"
    Q, _ = explore(P.p, canon(initial), successors, name)
    return Q


def determinize(P: Presentation) -> Presentation:
    """Right-resolving, reachable presentation of the same path set."""
    return subset_construction(P, [P.start])


def standardize(P: Presentation | PathSet) -> PathSet:
    """Digit-map, trim, determinize and trim again."""
    if isinstance(P, PathSet):
        return P
    Q = trim(apply_digit_map(P))
    if Q is None:
        return PathSet.empty_set(P.p)
    Q = trim(determinize(Q))
    if Q is None:  # pragma: no cover - determinizing a trimmed graph keeps every state live
        return PathSet.empty_set(P.p)
    return PathSet(P.p, Q)


def as_pathset(x: Presentation | PathSet) -> PathSet:
    return x if isinstance(x, PathSet) else standardize(x)


def check_same_p(*handles) -> int:
    ps = {h.p for h in handles}
    if len(ps) != 1:
        raise PMismatch(f"presentations over different primes: {sorted(ps)}")
    return ps.pop()


def split_right_separating(P: Presentation | PathSet, max_vertices: int = 100_000) -> Presentation:
    """Split vertices until no ordered vertex pair carries parallel edges.

    Works on the standard trimmed form of ``P``. Repeatedly picks the least
    ``(v, w)`` such that ``w`` has ``k >= 2`` edges into ``v`` and replaces
    ``v`` by ``k`` copies ``v^(1..k)``:

    * ``w != v``: ``w`` sends one of its ``k`` labels to each copy; every copy
      repeats ``v``'s exits, with self-loops kept as self-loops; other entering
      edges go to ``v^(1)`` only.
    * ``w == v``: with the loop labels sorted as ``L[0..k-1]``, copy ``i`` gets
      an edge to copy ``j`` labeled ``L[(i + j) % k]`` (i, j in 1..k); other
      exits are repeated and other entering edges go to ``v^(1)``.

    Both moves keep the graph right-resolving and every copy carries the same
    path set as ``v``.
    """
    H = as_pathset(P)
    if H.empty:
        raise StructuralError("the empty set has no presentation to split")
    G = H.presentation
    out = {v: list(G.out_edges[v]) for v in G.vertices}
    names = {v: G.name(v) for v in G.vertices}
    next_id = max(G.vertices) + 1

    def violation():
        best = None
        for w, es in out.items():
            counts = defaultdict(int)
            for dst, _ in es:
                counts[dst] += 1
            for v, c in counts.items():
                if c >= 2 and (best is None or (v, w) < best):
                    best = (v, w)
        return best

    while (pair := violation()) is not None:
        v, w = pair
        if len(out) > max_vertices:
            raise RuntimeError("vertex splitting exceeded the vertex budget")
        if v != w:
            labels = sorted(a for dst, a in out[w] if dst == v)
            copies = [v] + list(range(next_id, next_id + len(labels) - 1))
            next_id += len(labels) - 1
            out[w] = [(dst, a) for dst, a in out[w] if dst != v] + [
                (c, a) for c, a in zip(copies, labels)
            ]
            for i, c in enumerate(copies[1:], start=2):
                out[c] = [(c if dst == v else dst, a) for dst, a in out[v]]
                names[c] = f"{names[v]}^({i})"
        else:
            labels = sorted(a for dst, a in out[v] if dst == v)
            k = len(labels)
            copies = [v] + list(range(next_id, next_id + k - 1))
            next_id += k - 1
            others = [(dst, a) for dst, a in out[v] if dst != v]
            for i, c in enumerate(copies, start=1):
                loops = [(copies[j - 1], labels[(i + j) % k]) for j in range(1, k + 1)]
                out[c] = loops + list(others)
                if c != v:
                    names[c] = f"{names[v]}^({i})"
        names[v] = f"{names[v]}^(1)"

    def successors(u):
        return [(a, dst) for dst, a in out[u]]

    Q, _ = explore(G.p, G.start, successors, names.__getitem__)
    return Q


def equivalent(P1: Presentation | PathSet, P2: Presentation | PathSet) -> bool:
    """True iff both presentations denote the same subset of Z_p.

    Bisimulation on the standardized forms: walk pairs of states reached by
    equal label strings and require equal exit-label sets at each pair.
    """
    check_same_p(P1, P2)
    H1, H2 = as_pathset(P1), as_pathset(P2)
    if H1.empty or H2.empty:
        return H1.empty and H2.empty
    G1, G2 = H1.presentation, H2.presentation
    delta1 = {v: dict((a, d) for d, a in G1.out_edges[v]) for v in G1.vertices}
    delta2 = {v: dict((a, d) for d, a in G2.out_edges[v]) for v in G2.vertices}
    start = (G1.start, G2.start)
    seen = {start}
    queue = deque([start])
    while queue:
        u1, u2 = queue.popleft()
        t1, t2 = delta1[u1], delta2[u2]
        if t1.keys() != t2.keys():
            return False
        for a in t1:
            pair = (t1[a], t2[a])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True
