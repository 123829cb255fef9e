"""Bistellar moves on pure simplicial complexes.

A move of type ``i`` on a complex of dimension ``n-1`` rewrites the star of a
``(n-1-i)``-face ``sigma`` whose link is the boundary of an ``i``-simplex
``tau`` not already present: the facets containing ``sigma`` are replaced by
``{s ∪ tau : s in boundary(sigma)}``.  Type 0 introduces a fresh vertex, type
``n-1`` deletes one, and the inverse move swaps the roles of ``sigma`` and
``tau``.
"""

import itertools
from dataclasses import dataclass
from typing import Optional

from .complexes import (
    Complex,
    NotAFace,
    as_simplex,
    faces_of_dimension,
    has_face,
    link,
)
from .errors import InputError


class NotApplicable(InputError):
    pass


class StaleTau(InputError):
    pass


class TauNotFresh(InputError):
    pass


@dataclass(frozen=True)
class Move:
    """One bistellar rewrite.  ``len(sigma) + len(tau) == dim + 2`` in the
    ambient complex, and ``move_type == len(tau) - 1``."""

    sigma: tuple
    tau: tuple
    move_type: int

    def __repr__(self):
        return f"Move(type={self.move_type}, sigma={self.sigma}, tau={self.tau})"


def move_type_of(k: Complex, sigma) -> int:
    """The move type a face would have: ``k.dim - dim(sigma)``."""
    sigma = as_simplex(sigma)
    if not has_face(k, sigma):
        raise NotAFace(f"{sigma} is not a face")
    return k.dim - (len(sigma) - 1)


def fresh_vertex(k: Complex) -> int:
    """Canonical fresh vertex id for type-0 moves: max support id + 1."""
    return max(k.support) + 1


def is_applicable(k: Complex, sigma) -> Optional[Move]:
    """The move at ``sigma``, if one exists.

    A type-0 move (``sigma`` a facet) is always applicable with the canonical
    fresh vertex as ``tau``.  For type ``i >= 1`` the link of ``sigma`` must
    be the full boundary of an ``i``-simplex ``tau``, and ``tau`` must not be
    a face already; otherwise ``None``.
    """
    sigma = as_simplex(sigma)
    i = move_type_of(k, sigma)
    if i == 0:
        return Move(sigma, (fresh_vertex(k),), 0)
    lk = link(k, sigma)
    verts = tuple(sorted(lk.support))
    if len(verts) != i + 1:
        return None
    if len(lk.facets) != i + 1:
        return None
    if set(lk.facets) != set(itertools.combinations(verts, i)):
        return None
    if has_face(k, verts):
        return None
    return Move(sigma, verts, i)


def apply_move(k: Complex, m: Move) -> Complex:
    """Apply a bistellar move, validating it against the complex.

    The supplied ``tau`` must match the one derived from the link (type >= 1)
    or be a fresh vertex (type 0); mismatches are errors rather than silent
    fixes so that recorded sequences replay bit-exactly.
    """
    sigma = as_simplex(m.sigma)
    tau = as_simplex(m.tau)
    if not has_face(k, sigma):
        raise NotApplicable(f"sigma {sigma} is not a face")
    i = k.dim - (len(sigma) - 1)
    if m.move_type != i:
        raise NotApplicable(
            f"declared type {m.move_type} but sigma {sigma} has type {i}"
        )
    if i == 0:
        if len(tau) != 1:
            raise NotApplicable(f"type-0 tau must be a single vertex, got {tau}")
        if tau[0] in k.support:
            raise TauNotFresh(f"vertex {tau[0]} already in the support")
    else:
        detected = is_applicable(k, sigma)
        if detected is None:
            raise NotApplicable(
                f"link of {sigma} is not a usable simplex boundary"
            )
        if detected.tau != tau:
            raise StaleTau(f"expected tau {detected.tau}, got {tau}")
    sset = set(sigma)
    kept = [f for f in k.facets if not sset.issubset(f)]
    if len(sigma) == 1:
        added = [tau]
    else:
        added = [
            tuple(sorted(s + tau))
            for s in itertools.combinations(sigma, len(sigma) - 1)
        ]
    return Complex(k.dim, kept + added)


def inverse_move(m: Move) -> Move:
    """Swap the roles of sigma and tau; applying it undoes ``m`` exactly."""
    return Move(m.tau, m.sigma, len(m.sigma) - 1)


def enumerate_moves(k: Complex, allowed_types) -> list:
    """All applicable moves with a type in ``allowed_types``, sorted by
    (type, sigma).  Type-0 moves are reported once per facet with the
    canonical fresh vertex."""
    allowed = sorted(set(allowed_types))
    if any(t < 0 or t > k.dim for t in allowed):
        raise InputError(
            f"move types {allowed} outside 0..{k.dim}"
        )
    out = []
    for i in allowed:
        for sigma in faces_of_dimension(k, k.dim - i):
            m = is_applicable(k, sigma)
            if m is not None:
                out.append(m)
    return out
