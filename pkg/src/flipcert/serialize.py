"""JSON codecs with normative orderings, plus the canonical digest.

Emitted documents are deterministic: facet lists sorted lexicographically
with ascending ids inside each facet, keys sorted, compact separators.  The
digest of a document is the SHA-256 of its canonical JSON, prefixed with the
algorithm name so certificates record how they were hashed.
"""

import hashlib
import json

from .complexes import Complex
from .errors import InputError
from .moves import Move
from .polytopes import SimplePolytope, make_polytope
from .quasitoric import CharacteristicPair
from .reduction import ReductionResult


class MalformedDocument(InputError):
    pass


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def digest(doc) -> str:
    raw = canonical_json(doc).encode("utf-8")
    return "sha256:" + hashlib.sha256(raw).hexdigest()


def _require(doc, key, kind, where):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedDocument(f"{where}: missing key {key!r}")
    value = doc[key]
    if kind is int and isinstance(value, bool):
        raise MalformedDocument(f"{where}: {key!r} must be an integer")
    if not isinstance(value, kind):
        raise MalformedDocument(
            f"{where}: {key!r} must be {kind.__name__}, got {type(value).__name__}"
        )
    return value


# -- complexes ---------------------------------------------------------------

def complex_to_doc(k: Complex) -> dict:
    return {"dim": k.dim, "facets": [list(f) for f in k.facets]}


def complex_from_doc(doc) -> Complex:
    dim = _require(doc, "dim", int, "complex")
    facets = _require(doc, "facets", list, "complex")
    for f in facets:
        if not isinstance(f, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in f
        ):
            raise MalformedDocument("complex: facets must be lists of integers")
    return Complex(dim, facets)


def complex_digest(k: Complex) -> str:
    return digest(complex_to_doc(k))


# -- moves -------------------------------------------------------------------

def move_to_doc(m: Move) -> dict:
    return {"type": m.move_type, "sigma": list(m.sigma), "tau": list(m.tau)}


def move_from_doc(doc) -> Move:
    move_type = _require(doc, "type", int, "move")
    sigma = _require(doc, "sigma", list, "move")
    tau = _require(doc, "tau", list, "move")
    for part, name in ((sigma, "sigma"), (tau, "tau")):
        if any(not isinstance(v, int) or isinstance(v, bool) for v in part):
            raise MalformedDocument(f"move: {name} must be a list of integers")
    return Move(tuple(sorted(sigma)), tuple(sorted(tau)), move_type)


def move_sequence_to_doc(start: Complex, moves) -> dict:
    return {
        "start_hash": complex_digest(start),
        "moves": [move_to_doc(m) for m in moves],
    }


def move_sequence_from_doc(doc):
    """Returns (start_hash or None, list of moves); accepts a bare list or a
    whole reduction-result document."""
    if isinstance(doc, list):
        return None, [move_from_doc(m) for m in doc]
    if isinstance(doc, dict) and isinstance(doc.get("moves"), dict):
        return move_sequence_from_doc(doc["moves"])
    moves = _require(doc, "moves", list, "move sequence")
    start_hash = doc.get("start_hash")
    if start_hash is not None and not isinstance(start_hash, str):
        raise MalformedDocument("move sequence: start_hash must be a string")
    return start_hash, [move_from_doc(m) for m in moves]


# -- polytopes ---------------------------------------------------------------

def polytope_to_doc(p: SimplePolytope) -> dict:
    return {
        "dim": p.dim,
        "facets": list(p.facet_names),
        "vertices": [sorted(v) for v in p.vertices],
    }


def polytope_from_doc(doc) -> SimplePolytope:
    dim = _require(doc, "dim", int, "polytope")
    facets = _require(doc, "facets", list, "polytope")
    vertices = _require(doc, "vertices", list, "polytope")
    if any(not isinstance(name, str) for name in facets):
        raise MalformedDocument("polytope: facet names must be strings")
    for v in vertices:
        if not isinstance(v, list) or any(
            not isinstance(i, int) or isinstance(i, bool) for i in v
        ):
            raise MalformedDocument("polytope: vertices must be lists of integers")
    return make_polytope(dim, facets, vertices)


# -- reduction results -------------------------------------------------------

def reduction_result_to_doc(start: Complex, result: ReductionResult) -> dict:
    return {
        "succeeded": result.succeeded,
        "steps_examined": result.steps_examined,
        "moves": move_sequence_to_doc(start, result.moves),
        "final": complex_to_doc(result.final),
    }


# -- characteristic matrices ---------------------------------------------------

def lambda_to_doc(pair: CharacteristicPair) -> dict:
    return {
        "rows": pair.polytope.dim,
        "cols": pair.polytope.facet_count,
        "entries": [list(row) for row in pair.matrix],
    }


def lambda_from_doc(doc, polytope: SimplePolytope) -> CharacteristicPair:
    rows = _require(doc, "rows", int, "lambda")
    cols = _require(doc, "cols", int, "lambda")
    entries = _require(doc, "entries", list, "lambda")
    if rows != len(entries):
        raise MalformedDocument(f"lambda: declared {rows} rows, got {len(entries)}")
    matrix = []
    for row in entries:
        if not isinstance(row, list) or len(row) != cols or any(
            not isinstance(x, int) or isinstance(x, bool) for x in row
        ):
            raise MalformedDocument("lambda: entries must be rows of integers")
        matrix.append(tuple(row))
    return CharacteristicPair(polytope, tuple(matrix))


def dump(doc) -> str:
    """Normative output form: sorted keys, compact, trailing newline."""
    return canonical_json(doc) + "\n"
