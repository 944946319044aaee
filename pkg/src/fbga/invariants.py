"""Isomorphism-invariant fingerprints and fingerprint comparison.

The compared fields are cheap necessary conditions: two isomorphic
algebras (graphs with degrees) must agree on all of them, so the first
disagreement names a certified distinction.  Agreement on every field is
only "consistent" — it never certifies an isomorphism.

Extras (face perimeters, special orbit sizes) ride along for reporting
but are deliberately left out of the comparison: they are sensitive to
the embedding data in ways callers may not want to distinguish by.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .afbg import Afbg, reduced_form
from .ribbon import orbits

COMPARED_FIELDS = (
    "num_vertices",
    "num_edges",
    "multiplicities",
    "bipartite",
    "nakayama_order",
    "reduced",
)


@dataclass(frozen=True)
class Fingerprint:
    num_vertices: int
    num_edges: int
    multiplicities: tuple  # sorted multiset of Fraction
    bipartite: bool
    nakayama_order: int
    reduced: tuple  # (num_vertices, num_edges, multiplicities, bipartite) of the reduced form
    face_perimeters: tuple
    special_orbits: tuple

    def as_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "multiplicities": [str(m) for m in self.multiplicities],
            "bipartite": self.bipartite,
            "nakayama_order": self.nakayama_order,
            "reduced": {
                "num_vertices": self.reduced[0],
                "num_edges": self.reduced[1],
                "multiplicities": [str(m) for m in self.reduced[2]],
                "bipartite": self.reduced[3],
            },
            "face_perimeters": list(self.face_perimeters),
            "special_orbits": list(self.special_orbits),
        }


def _multiplicity_multiset(a: Afbg) -> tuple:
    return tuple(sorted(a.multiplicities().values()))


def special_orbit_sizes(a: Afbg) -> tuple:
    """Orbit-size multiset of the permutation h -> nu^{-1}(face(face(h))),
    the walk two angles along the face then one multiplicity step back."""
    face_step = {h: a.graph.rotation[a.graph.pairing[h]]
                 for h in a.graph.half_edges}
    nu_inv = {v: k for k, v in a.nakayama.items()}
    q = {h: nu_inv[face_step[face_step[h]]] for h in a.graph.half_edges}
    return tuple(sorted(len(c) for c in orbits(q)))


def fingerprint(a: Afbg) -> Fingerprint:
    g = a.graph
    red = reduced_form(a)
    reduced_tuple = (
        len(red.graph.vertices),
        red.graph.num_edges(),
        _multiplicity_multiset(red),
        red.graph.is_bipartite(),
    )
    return Fingerprint(
        num_vertices=len(g.vertices),
        num_edges=g.num_edges(),
        multiplicities=_multiplicity_multiset(a),
        bipartite=g.is_bipartite(),
        nakayama_order=a.nakayama_order(),
        reduced=reduced_tuple,
        face_perimeters=tuple(g.face_perimeters()),
        special_orbits=special_orbit_sizes(a),
    )


@dataclass(frozen=True)
class Comparison:
    consistent: bool
    distinguished_by: str | None  # first compared field that differs
    left: Fingerprint
    right: Fingerprint

    def describe(self) -> str:
        if self.consistent:
            return "consistent: all compared invariants agree"
        lv = getattr(self.left, self.distinguished_by)
        rv = getattr(self.right, self.distinguished_by)
        return (f"distinguished by {self.distinguished_by}: "
                f"{_render(lv)} vs {_render(rv)}")


def _render(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_render(v) for v in value) + ")"
    if isinstance(value, Fraction):
        return str(value)
    return repr(value)


def compare(a: Afbg, b: Afbg) -> Comparison:
    fa, fb = fingerprint(a), fingerprint(b)
    for field in COMPARED_FIELDS:
        if getattr(fa, field) != getattr(fb, field):
            return Comparison(False, field, fa, fb)
    return Comparison(True, None, fa, fb)
