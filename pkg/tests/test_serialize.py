import hashlib
import json

import pytest

import flipcert as fc
from flipcert.moves import Move
from flipcert.serialize import (
    MalformedDocument,
    canonical_json,
    complex_digest,
    complex_from_doc,
    complex_to_doc,
    lambda_from_doc,
    lambda_to_doc,
    move_from_doc,
    move_sequence_from_doc,
    move_sequence_to_doc,
    move_to_doc,
    polytope_from_doc,
    polytope_to_doc,
)


B5_CANONICAL = '{"dim":2,"facets":[[0,1,4],[0,1,5],[0,2,4],[0,2,5],[1,2,4],[1,2,5]]}'
B5_DIGEST = "sha256:7741b8a24f93e26c8be56d39b56dd70ebd61965b1d59280ca80093c225297525"


def test_complex_doc_normative_ordering(b5):
    doc = complex_to_doc(b5)
    assert doc["facets"] == sorted(doc["facets"])
    assert all(f == sorted(f) for f in doc["facets"])
    assert canonical_json(doc) == B5_CANONICAL


def test_complex_digest_golden(b5):
    assert complex_digest(b5) == B5_DIGEST
    # independent recomputation straight from hashlib
    raw = json.dumps(
        {"dim": 2, "facets": [sorted(f) for f in sorted(b5.facets)]},
        sort_keys=True, separators=(",", ":"),
    ).encode()
    assert complex_digest(b5) == "sha256:" + hashlib.sha256(raw).hexdigest()


def test_complex_round_trip(b5, octahedron, icosahedron):
    for k in (b5, octahedron, icosahedron):
        assert complex_from_doc(complex_to_doc(k)) == k


def test_complex_from_doc_rejects_garbage():
    with pytest.raises(MalformedDocument):
        complex_from_doc({"facets": [[0, 1]]})
    with pytest.raises(MalformedDocument):
        complex_from_doc({"dim": 1, "facets": [[0, "x"]]})
    with pytest.raises(MalformedDocument):
        complex_from_doc({"dim": True, "facets": [[0, 1]]})


def test_move_round_trip():
    move = Move((0, 1), (4, 5), 1)
    assert move_from_doc(move_to_doc(move)) == move
    assert move_to_doc(move) == {"type": 1, "sigma": [0, 1], "tau": [4, 5]}


def test_move_sequence_round_trip(b5):
    moves = [Move((4,), (0, 1, 2), 2)]
    doc = move_sequence_to_doc(b5, moves)
    assert doc["start_hash"] == B5_DIGEST
    start_hash, parsed = move_sequence_from_doc(doc)
    assert start_hash == B5_DIGEST and parsed == moves
    # bare lists are accepted too
    assert move_sequence_from_doc([move_to_doc(moves[0])]) == (None, moves)


def test_polytope_round_trip():
    for name, p in fc.corpus().items():
        assert polytope_from_doc(polytope_to_doc(p)) == p, name


def test_lambda_round_trip():
    pair = fc.cpn_pair(3)
    doc = lambda_to_doc(pair)
    assert doc["rows"] == 3 and doc["cols"] == 4
    assert lambda_from_doc(doc, pair.polytope) == pair
    with pytest.raises(MalformedDocument):
        lambda_from_doc({"rows": 2, "cols": 3, "entries": [[1, 0, 0]]},
                        pair.polytope)
