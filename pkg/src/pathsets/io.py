"""Presentation JSON format.

    {"p":3,"start":0,"vertices":[0,1],"edges":[[0,0,0],[0,0,1]],
     "alphabet":null,"digit_map":null,"names":{"0":"v0"}}

Edges are ``[src, dst, label]``. ``alphabet``/``digit_map`` null means the
identity on range(p); otherwise ``digit_map`` is an object keyed by the
string form of each alphabet symbol. Unknown fields are rejected. Parallel
duplicate edges are dropped on load with a warning.
"""

from __future__ import annotations

import json
import warnings

from .core import PathSet, Presentation
from .errors import StructuralError

FIELDS = ("p", "start", "vertices", "edges", "alphabet", "digit_map", "names")
REQUIRED = ("p", "start", "vertices", "edges")


def from_dict(data: dict) -> Presentation:
    if not isinstance(data, dict):
        raise StructuralError("presentation JSON must be an object")
    unknown = set(data) - set(FIELDS)
    if unknown:
        raise StructuralError(f"unknown fields: {sorted(unknown)}")
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        raise StructuralError(f"missing fields: {missing}")
    edges, seen = [], set()
    for e in data["edges"]:
        if not isinstance(e, list) or len(e) != 3:
            raise StructuralError(f"edge {e!r} is not a [src, dst, label] triple")
        key = tuple(e)
        if key in seen:
            warnings.warn(f"dropping duplicate edge {list(key)}", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    alphabet = data.get("alphabet")
    digit_map = data.get("digit_map")
    if digit_map is not None:
        if alphabet is None:
            raise StructuralError("digit_map given without an alphabet")
        by_str = {str(a): a for a in alphabet}
        extra = set(digit_map) - set(by_str)
        if extra:
            raise StructuralError(f"digit_map keys outside the alphabet: {sorted(extra)}")
        digit_map = {by_str[k]: d for k, d in digit_map.items()}
    by_id = {str(v): v for v in data["vertices"]}
    names = {}
    for k, n in (data.get("names") or {}).items():
        if k not in by_id:
            raise StructuralError(f"name given for unknown vertex {k!r}")
        names[by_id[k]] = n
    return Presentation(
        p=data["p"],
        vertices=data["vertices"],
        start=data["start"],
        edges=edges,
        alphabet=alphabet,
        digit_map=digit_map,
        names=names,
    )


def to_dict(P: Presentation) -> dict:
    return {
        "p": P.p,
        "start": P.start,
        "vertices": list(P.vertices),
        "edges": [list(e) for e in P.edges],
        "alphabet": None if P.alphabet is None else list(P.alphabet),
        "digit_map": None if P.digit_map is None else {str(a): d for a, d in P.digit_map.items()},
        "names": {str(v): P.names[v] for v in P.vertices if v in P.names},
    }


def empty_presentation(p: int) -> Presentation:
    """One vertex with no exits: trims to the empty set."""
    return Presentation(p=p, vertices=[0], start=0, edges=[])


def dumps(P: Presentation | PathSet) -> str:
    if isinstance(P, PathSet):
        P = P.presentation if not P.empty else empty_presentation(P.p)
    return json.dumps(to_dict(P), separators=(",", ":"), ensure_ascii=False)


def loads(text: str) -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def load(path: str) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
