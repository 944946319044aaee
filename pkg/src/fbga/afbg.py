"""Degree functions on ribbon graphs and admissibility.

A degree function assigns a positive integer to every vertex.  The induced
Nakayama permutation advances every half-edge ``degree(v)`` steps in the
rotation at its vertex ``v``.  The pair (graph, degrees) is *admissible*
when

* (a) the Nakayama permutation commutes with the edge pairing, and
* (b) no half-edge has its partner inside its own Nakayama orbit.

Admissible pairs are wrapped in :class:`Afbg`; every operation that needs
the conditions takes one of these, so the checks run exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DisconnectedInput, MissingDegree, NotAdmissible
from .ribbon import RibbonGraph, orbits, quotient_by_orbits


def nakayama_permutation(graph: RibbonGraph, degrees: dict) -> dict:
    """h -> rotation^degree(attach(h)) (h), computed per star."""
    _check_degrees(graph, degrees)
    nu = {}
    for v in graph.vertices:
        star = graph.stars[v]
        n = len(star)
        shift = degrees[v] % n
        for i, h in enumerate(star):
            nu[h] = star[(i + shift) % n]
    return nu


@dataclass(frozen=True)
class Violation:
    half_edge: str
    condition: str  # "pairing_compat" (a) or "orbit_meets_pairing" (b)
    detail: str

    def __str__(self):
        return f"{self.condition} at {self.half_edge}: {self.detail}"


def admissibility_violations(graph: RibbonGraph, degrees: dict) -> list:
    """All violations of conditions (a) and (b); empty list iff admissible."""
    nu = nakayama_permutation(graph, degrees)
    pair = graph.pairing
    out = []
    for h in graph.half_edges:
        if pair[nu[h]] != nu[pair[h]]:
            out.append(Violation(
                h, "pairing_compat",
                f"pairing(nakayama({h}))={pair[nu[h]]} but "
                f"nakayama(pairing({h}))={nu[pair[h]]}"))
    for cyc in orbits(nu):
        members = set(cyc)
        for h in cyc:
            if pair[h] in members:
                out.append(Violation(
                    h, "orbit_meets_pairing",
                    f"partner {pair[h]} lies in the nakayama orbit of {h}"))
    return out


def _check_degrees(graph, degrees):
    for v in graph.vertices:
        d = degrees.get(v)
        if d is None:
            raise MissingDegree(f"vertex {v!r} has no degree")
        if not isinstance(d, int) or d < 1:
            raise MissingDegree(f"degree of {v!r} must be a positive integer, got {d!r}")


@dataclass(frozen=True)
class Afbg:
    """A ribbon graph with a validated admissible degree function."""

    graph: RibbonGraph
    degrees: dict
    nakayama: dict

    @classmethod
    def build(cls, graph: RibbonGraph, degrees: dict) -> "Afbg":
        violations = admissibility_violations(graph, degrees)
        if violations:
            raise NotAdmissible(violations)
        degs = {v: degrees[v] for v in graph.vertices}
        return cls(graph, degs, nakayama_permutation(graph, degs))

    # -- multiplicities --------------------------------------------------

    def multiplicity(self, v) -> Fraction:
        return Fraction(self.degrees[v], self.graph.valency(v))

    def multiplicities(self) -> dict:
        return {v: self.multiplicity(v) for v in self.graph.vertices}

    def is_brauer_graph(self) -> bool:
        """True iff every multiplicity is an integer (then nakayama = id)."""
        return all(m.denominator == 1 for m in self.multiplicities().values())

    def truncated_vertices(self) -> list:
        return [v for v in self.graph.vertices if self.degrees[v] == 1]

    def nakayama_order(self) -> int:
        return lcm(*(len(c) for c in orbits(self.nakayama)))

    def nakayama_orbit_sizes(self) -> list[int]:
        return sorted(len(c) for c in orbits(self.nakayama))


def is_admissible(graph: RibbonGraph, degrees: dict):
    """(Afbg, []) when admissible, else (None, violations)."""
    violations = admissibility_violations(graph, degrees)
    if violations:
        return None, violations
    return Afbg.build(graph, degrees), []


def reduced_form(a: Afbg) -> Afbg:
    """Collapse each Nakayama orbit to a single half-edge.

    The quotient keeps the vertex set and degrees; its valency at ``v`` is
    gcd(degree(v), valency(v)), so multiplicities become integral and the
    result is always a Brauer graph.  Idempotent, and the identity on
    Brauer graphs (orbits are singletons there).  New half-edge ids are the
    smallest member of each orbit.
    """
    cls = {}
    for cyc in orbits(a.nakayama):
        anchor = cyc[0]  # orbits() anchors each cycle at its minimum
        for h in cyc:
            cls[h] = anchor
    quotient = quotient_by_orbits(a.graph, cls)
    return Afbg.build(quotient, dict(a.degrees))


@dataclass(frozen=True)
class RepFiniteReport:
    rep_finite: bool
    tree_edge_count: int | None      # n: edges of the reduced tree
    exceptional_multiplicity: int | None  # m: the one multiplicity > 1, else 1
    nakayama_order: int              # candidate covering parameter r
    reason: str


def rep_finite_report(a: Afbg) -> RepFiniteReport:
    """Finite representation type test via the reduced form.

    The algebra is representation-finite iff the reduced Brauer graph is a
    tree with at most one vertex of multiplicity > 1 (a Brauer tree).
    """
    if not a.graph.connected:
        raise DisconnectedInput("rep_finite_report requires a connected graph")
    red = reduced_form(a)
    g = red.graph
    is_tree = g.num_edges() == len(g.vertices) - 1
    mults = red.multiplicities()
    big = sorted((v for v, m in mults.items() if m > 1), key=str)
    order = a.nakayama_order()
    if not is_tree:
        return RepFiniteReport(False, None, None, order,
                               "reduced form is not a tree")
    if len(big) > 1:
        return RepFiniteReport(False, None, None, order,
                               f"reduced tree has {len(big)} vertices of multiplicity > 1")
    m = int(mults[big[0]]) if big else 1
    return RepFiniteReport(True, g.num_edges(), m, order,
                           "reduced form is a Brauer tree")
