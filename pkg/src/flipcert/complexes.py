"""Pure simplicial complexes stored by their maximal simplices.

A simplex is a strictly increasing tuple of non-negative integer vertex ids;
the empty tuple is the empty simplex (dimension -1).  A :class:`Complex` is a
pure complex: every facet has the same dimension, and all lower faces are
derived on demand.  Values are immutable and safe to share between workers.

Vertex ids are arbitrary non-negative integers and need not be contiguous:
moves delete and create vertices, and relabeling would break replay.
"""

import itertools
from math import comb

from .errors import InputError

Simplex = tuple


class WrongFacetSize(InputError):
    pass


class DuplicateVertexInFacet(InputError):
    pass


class BadVertexId(InputError):
    pass


class EmptyComplex(InputError):
    pass


class NotAFace(InputError):
    pass


class VertexClash(InputError):
    pass


class EmptySimplex(InputError):
    pass


class DimensionTooLow(InputError):
    pass


def as_simplex(vertices) -> Simplex:
    """Normalize an iterable of vertex ids into a sorted simplex tuple."""
    vs = tuple(sorted(vertices))
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise BadVertexId(f"vertex id {v!r} is not a non-negative integer")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise DuplicateVertexInFacet(f"vertex {a} repeated in {vs}")
    return vs


class Complex:
    """A pure simplicial complex, identified by its facet set.

    ``dim`` is the common facet dimension.  ``dim == -1`` is allowed only for
    the join identity ``{∅}`` (a single empty facet), which also arises as the
    link of a facet.  A complex with no facets at all is rejected.
    """

    __slots__ = ("dim", "facets", "support", "_hash")

    def __init__(self, dim: int, facets):
        cleaned = sorted({as_simplex(f) for f in facets})
        if not cleaned:
            raise EmptyComplex("a complex needs at least one facet")
        if dim < -1:
            raise WrongFacetSize(f"dimension {dim} is below -1")
        for f in cleaned:
            if len(f) != dim + 1:
                raise WrongFacetSize(
                    f"facet {f} has {len(f)} vertices, expected {dim + 1}"
                )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "facets", tuple(cleaned))
        object.__setattr__(
            self, "support", frozenset(v for f in cleaned for v in f)
        )
        object.__setattr__(self, "_hash", hash((dim, self.facets)))

    def __setattr__(self, name, value):
        raise AttributeError("Complex values are immutable")

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.dim == other.dim and self.facets == other.facets

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Complex(dim={self.dim}, facets={len(self.facets)})"


def empty_facet_complex() -> Complex:
    """The complex {∅}: two-sided join identity, and the link of any facet."""
    return Complex(-1, [()])


def new_complex(dim: int, facets) -> Complex:
    """Build a pure complex of the given dimension from facet vertex lists."""
    return Complex(dim, facets)


def has_face(k: Complex, s) -> bool:
    """True iff ``s`` is contained in some facet of ``k``.

    The empty simplex is a face of every complex.
    """
    ss = set(s)
    return any(ss.issubset(f) for f in k.facets)


def link(k: Complex, s) -> Complex:
    """The link of a face: all faces disjoint from ``s`` whose union with
    ``s`` lies in ``k``, given by maximal members.

    For a pure complex the maximal members are exactly ``f - s`` over facets
    ``f`` containing ``s``, so the result is pure of dimension
    ``k.dim - len(s)``.
    """
    s = as_simplex(s)
    ss = set(s)
    residues = [tuple(v for v in f if v not in ss) for f in k.facets if ss.issubset(f)]
    if not residues:
        raise NotAFace(f"{s} is not a face of {k!r}")
    return Complex(k.dim - len(s), residues)


def join(k: Complex, l: Complex) -> Complex:
    """Simplicial join: facet-wise unions of two complexes on disjoint vertex
    sets.  ``{∅}`` is a two-sided identity."""
    clash = k.support & l.support
    if clash:
        raise VertexClash(f"shared vertex ids {sorted(clash)}")
    facets = [kf + lf for kf in k.facets for lf in l.facets]
    return Complex(k.dim + l.dim + 1, facets)


def boundary_simplex(t) -> Complex:
    """The boundary complex of a single simplex: all its codimension-one
    subsets.  The boundary of a vertex is ``{∅}``."""
    t = as_simplex(t)
    if len(t) == 0:
        raise EmptySimplex("the empty simplex has no boundary complex")
    if len(t) == 1:
        return empty_facet_complex()
    return Complex(len(t) - 2, itertools.combinations(t, len(t) - 1))


def faces_of_dimension(k: Complex, d: int) -> list:
    """All ``d``-faces of ``k``, sorted.  ``d`` must lie in ``0..k.dim``."""
    out = set()
    for f in k.facets:
        out.update(itertools.combinations(f, d + 1))
    return sorted(out)


def f_vector(k: Complex) -> tuple:
    """Face counts by dimension, ``(f_0, ..., f_dim)``, via subset
    enumeration of the facets with deduplication."""
    counts = []
    for d in range(k.dim + 1):
        counts.append(len(set().union(*(
            set(itertools.combinations(f, d + 1)) for f in k.facets
        ))))
    return tuple(counts)


def euler_characteristic(k: Complex) -> int:
    return sum((-1) ** d * fd for d, fd in enumerate(f_vector(k)))


def is_pseudomanifold(k: Complex) -> bool:
    """True iff every ridge lies in exactly two facets and the facet
    adjacency graph (facets sharing a ridge) is connected."""
    if k.dim < 1:
        raise DimensionTooLow("pseudomanifold test needs dimension >= 1")
    ridge_to_facets = {}
    for idx, f in enumerate(k.facets):
        for r in itertools.combinations(f, k.dim):
            ridge_to_facets.setdefault(r, []).append(idx)
    if any(len(owners) != 2 for owners in ridge_to_facets.values()):
        return False
    adjacency = {i: set() for i in range(len(k.facets))}
    for a, b in ridge_to_facets.values():
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    queue = [0]
    while queue:
        cur = queue.pop()
        for nxt in adjacency[cur]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(k.facets)


def is_boundary_of_simplex(k: Complex) -> bool:
    """True iff ``k`` is the full boundary of a simplex: ``dim + 2`` vertices
    carrying every possible facet."""
    if k.dim < 0:
        return False
    if len(k.support) != k.dim + 2:
        return False
    # dim+2 distinct (dim+1)-subsets of a (dim+2)-set are all of them.
    return len(k.facets) == comb(k.dim + 2, k.dim + 1)
