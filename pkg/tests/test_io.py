import json

import pytest

from helpers import CANTOR01, CANTOR01_PLUS_2, random_standard, rng
from pathsets import Presentation, StructuralError, standardize
from pathsets.io import dumps, empty_presentation, from_dict, loads, to_dict

DOC = '{"p":3,"start":0,"vertices":[0,1],"edges":[[0,0,0],[0,0,1]],"alphabet":null,"digit_map":null,"names":{"0":"v0"}}'


def test_reference_document_round_trips_exactly():
    P = loads(DOC)
    assert P.p == 3 and P.edges == ((0, 0, 0), (0, 0, 1)) and P.names == {0: "v0"}
    assert dumps(P) == DOC


def test_round_trip_random():
    r = rng(50)
    for _ in range(50):
        P = random_standard(r, r.choice([2, 3, 5])).presentation
        P = Presentation(p=P.p, vertices=P.vertices, start=P.start, edges=P.edges)
        assert loads(dumps(P)) == P


def test_round_trip_hand_entered():
    for P in (CANTOR01, CANTOR01_PLUS_2):
        assert loads(dumps(P)) == P


def test_foreign_alphabet_round_trip():
    P = Presentation(p=5, vertices=[0], start=0, edges=[(0, 0, 10), (0, 0, 11)],
                     alphabet=[10, 11], digit_map={10: 0, 11: 3})
    text = dumps(P)
    assert json.loads(text)["digit_map"] == {"10": 0, "11": 3}
    assert loads(text) == P


@pytest.mark.parametrize(
    "doc",
    [
        '{"p":3,"start":0,"vertices":[0],"edges":[],"colour":1}',
        '{"p":3,"vertices":[0],"edges":[]}',
        '{"p":3,"start":0,"vertices":[0],"edges":[[0,0]]}',
        '{"p":4,"start":0,"vertices":[0],"edges":[]}',
        '{"p":3,"start":0,"vertices":[0],"edges":[[0,1,0]]}',
        '{"p":3,"start":0,"vertices":[0],"edges":[[0,0,3]]}',
        '{"p":3,"start":0,"vertices":[0],"edges":[],"digit_map":{"0":0}}',
        '{"p":3,"start":0,"vertices":[0],"edges":[],"names":{"7":"x"}}',
        "[1, 2]",
        "not json",
    ],
)
def test_rejects_bad_documents(doc):
    with pytest.raises(StructuralError):
        loads(doc)


def test_duplicate_edges_dropped_with_warning():
    with pytest.warns(UserWarning, match="duplicate"):
        P = loads('{"p":3,"start":0,"vertices":[0],"edges":[[0,0,1],[0,0,1]]}')
    assert P.edges == ((0, 0, 1),)


def test_empty_set_serialization():
    E = standardize(empty_presentation(3))
    assert E.empty
    assert loads(dumps(E)) == empty_presentation(3)


def test_dict_helpers():
    assert from_dict(to_dict(CANTOR01_PLUS_2)) == CANTOR01_PLUS_2
