"""Quiver presentations of admissible fractional Brauer graph algebras.

Quiver vertices are the edges of the graph; every half-edge ``h``
contributes one arrow from its own edge to the edge of ``rotation(h)``.
Paths multiply right to left: in a product ``b*a`` the arrow ``a`` acts
first.  Walks are stored in *application order* (first-applied arrow
first); the pretty-printer reverses them.

Relations:

* one commutation per edge ``{h, g}``: the full walk of length
  ``degree(vertex(h))`` starting with the arrow of ``h`` equals the full
  walk starting with the arrow of ``g``;
* one zero relation per half-edge ``h``: the arrow of
  ``pairing(rotation(h))`` composed after the arrow of ``h`` vanishes.

``oracle_dimension`` recomputes the dimension from the relation data
alone (exhaustive path enumeration with rewriting) and is used to
cross-check the closed-form count ``sum(valency * degree)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .afbg import Afbg
from .errors import SizeLimitExceeded
from .ribbon import orbits

ARROW_PREFIX = "a_"


def arrow_name(half_edge: str) -> str:
    return ARROW_PREFIX + half_edge


@dataclass(frozen=True)
class Arrow:
    name: str
    half_edge: str
    source: str  # edge id
    target: str  # edge id


@dataclass(frozen=True)
class Presentation:
    afbg: Afbg
    quiver_vertices: tuple
    arrows: dict  # name -> Arrow
    commutation_relations: tuple  # ((walk, walk), ...) in application order
    zero_relations: tuple  # ((later, earlier), ...)

    def arrow_of(self, half_edge: str) -> Arrow:
        return self.arrows[arrow_name(half_edge)]

    def out_arrows(self, quiver_vertex: str) -> list:
        return [a for a in self.arrows.values() if a.source == quiver_vertex]

    def in_arrows(self, quiver_vertex: str) -> list:
        return [a for a in self.arrows.values() if a.target == quiver_vertex]


def walk(a: Afbg, half_edge: str, length: int) -> tuple:
    """Arrow names of the walk from ``half_edge``: first arrow is its own,
    then the arrows of successive rotations.  Application order."""
    g = a.graph
    seq = []
    h = half_edge
    for _ in range(length):
        seq.append(arrow_name(h))
        h = g.rotation[h]
    return tuple(seq)


def build_presentation(a: Afbg) -> Presentation:
    g = a.graph
    arrows = {}
    for h in g.half_edges:
        arrows[arrow_name(h)] = Arrow(
            arrow_name(h), h, g.edge_of(h), g.edge_of(g.rotation[h]))

    commutations = []
    for x, y in g.edge_pairs():
        wx = walk(a, x, a.degrees[g.attach[x]])
        wy = walk(a, y, a.degrees[g.attach[y]])
        commutations.append((wx, wy))

    zeros = []
    for h in g.half_edges:
        later = arrow_name(g.pairing[g.rotation[h]])
        zeros.append((later, arrow_name(h)))

    return Presentation(
        afbg=a,
        quiver_vertices=tuple(g.edge_ids()),
        arrows=arrows,
        commutation_relations=tuple(sorted(commutations)),
        zero_relations=tuple(sorted(zeros)),
    )


def dimension(a: Afbg) -> int:
    """sum over vertices of valency(v) * degree(v)."""
    return sum(a.graph.valency(v) * a.degrees[v] for v in a.graph.vertices)


def special_cycles(a: Afbg) -> dict:
    """Full rotation cycle of arrows through each arrow (length = valency)."""
    g = a.graph
    return {arrow_name(h): walk(a, h, g.valency(g.attach[h]))
            for h in g.half_edges}


# -- basis and Loewy structure ------------------------------------------------

@dataclass(frozen=True)
class BasisElement:
    kind: str        # "idempotent" | "walk" | "socle"
    edge: str        # quiver vertex the element starts at
    start: str       # half-edge of the walk ("" for idempotents)
    arrows: tuple    # application order

    @property
    def length(self) -> int:
        return len(self.arrows)


def basis(a: Afbg) -> list:
    """Monomial basis: one idempotent per edge, the proper walks
    0 < m < degree from every half-edge, and one socle element per edge
    (the two full walks of an edge are identified; the representative
    starts at the smaller half-edge id)."""
    g = a.graph
    out = []
    for x, y in g.edge_pairs():
        e = g.edge_of(x)
        out.append(BasisElement("idempotent", e, "", ()))
        out.append(BasisElement("socle", e, x, walk(a, x, a.degrees[g.attach[x]])))
    for h in g.half_edges:
        d = a.degrees[g.attach[h]]
        for m in range(1, d):
            out.append(BasisElement("walk", g.edge_of(h), h, walk(a, h, m)))
    out.sort(key=lambda b: (b.edge, b.kind, b.start, b.length))
    return out


@dataclass(frozen=True)
class LoewyRow:
    top: str
    strands: tuple   # two tuples of edge ids, ordered by the half-edge pair
    socle: str
    uniserial: bool


def loewy_table(a: Afbg) -> dict:
    """Per edge: top, the two radical strands (one per half-edge, listing
    the edges hit by walks of length 1..degree-1), and the socle edge."""
    g = a.graph
    table = {}
    for x, y in g.edge_pairs():
        e = g.edge_of(x)
        strands = []
        for h in (x, y):
            d = a.degrees[g.attach[h]]
            cur = h
            strand = []
            for _ in range(d - 1):
                cur = g.rotation[cur]
                strand.append(g.edge_of(cur))
            strands.append(tuple(strand))
        socle = g.edge_of(a.nakayama[x])
        assert socle == g.edge_of(a.nakayama[y])  # forced by admissibility (a)
        uniserial = not (strands[0] and strands[1])
        table[e] = LoewyRow(e, tuple(strands), socle, uniserial)
    return table


# -- Nakayama automorphism on the presentation --------------------------------

@dataclass(frozen=True)
class PresentationAutomorphism:
    vertex_map: dict  # quiver vertex -> quiver vertex
    arrow_map: dict   # arrow name -> arrow name

    def vertex_orbit_sizes(self) -> list[int]:
        return sorted(len(c) for c in orbits(self.vertex_map))


def nakayama_on_presentation(a: Afbg) -> PresentationAutomorphism:
    """The algebra automorphism induced by the inverse Nakayama permutation:
    the arrow of ``h`` maps to the arrow of ``nakayama^-1(h)``, idempotents
    follow their edges."""
    g = a.graph
    nu_inv = {b: x for x, b in a.nakayama.items()}
    arrow_map = {arrow_name(h): arrow_name(nu_inv[h]) for h in g.half_edges}
    vertex_map = {}
    for h in g.half_edges:
        e = g.edge_of(h)
        image = g.edge_of(nu_inv[h])
        if e in vertex_map:
            assert vertex_map[e] == image
        vertex_map[e] = image
    return PresentationAutomorphism(vertex_map, arrow_map)


# -- independent dimension oracle ----------------------------------------------

ORACLE_HALF_EDGE_LIMIT = 40


def oracle_dimension(pres: Presentation) -> int:
    """Dimension by brute-force path enumeration over the relations alone.

    Paths are enumerated arrow by arrow; a path dies when any of its
    rewriting forms contains a zero pair, and paths related by substituting
    one side of a commutation for the other are counted once.  Nothing
    about degrees, walks or the Nakayama permutation is consulted, so this
    is an independent check on ``dimension``.
    """
    if len(pres.arrows) > ORACLE_HALF_EDGE_LIMIT:
        raise SizeLimitExceeded(
            f"oracle refuses presentations with more than "
            f"{ORACLE_HALF_EDGE_LIMIT} arrows (got {len(pres.arrows)})")

    zero_pairs = set(pres.zero_relations)  # (later, earlier)
    comm = []
    for wx, wy in pres.commutation_relations:
        if wx != wy:
            comm.append((wx, wy))
            comm.append((wy, wx))
    # Alive paths are rotation runs, and a run strictly longer than the full
    # walk at its start rewrites to a form with a zero pair; the longest walk
    # can sit on either side of a commutation.
    max_side = max((max(len(wx), len(wy))
                    for wx, wy in pres.commutation_relations), default=1)
    cap = max_side + 2

    def equivalence_class(path):
        seen = {path}
        queue = [path]
        while queue:
            p = queue.pop()
            for lhs, rhs in comm:
                k = len(lhs)
                for i in range(len(p) - k + 1):
                    if p[i:i + k] == lhs:
                        q = p[:i] + rhs + p[i + k:]
                        if q not in seen:
                            seen.add(q)
                            queue.append(q)
        return frozenset(seen)

    def contains_zero(path):
        return any((path[i + 1], path[i]) in zero_pairs
                   for i in range(len(path) - 1))

    target = {name: a.target for name, a in pres.arrows.items()}
    source = {name: a.source for name, a in pres.arrows.items()}
    by_source = {}
    for name in sorted(pres.arrows):
        by_source.setdefault(source[name], []).append(name)

    classes = set()
    frontier = []
    for name in sorted(pres.arrows):
        cls = equivalence_class((name,))
        if any(contains_zero(p) for p in cls):
            continue
        if cls not in classes:
            classes.add(cls)
            frontier.append((name,))

    while frontier:
        nxt = []
        for path in frontier:
            if len(path) > cap:
                raise SizeLimitExceeded(
                    "path enumeration exceeded the rewriting bound; "
                    "the relations do not present a finite walk algebra")
            for name in by_source.get(target[path[-1]], ()):
                q = path + (name,)
                cls = equivalence_class(q)
                if any(contains_zero(p) for p in cls):
                    continue
                if cls not in classes:
                    classes.add(cls)
                    nxt.append(q)
        frontier = nxt

    return len(pres.quiver_vertices) + len(classes)


# -- rendering -----------------------------------------------------------------

def product_str(seq, alias=None) -> str:
    """Right-to-left product string of an application-order arrow sequence."""
    names = [(alias or {}).get(n, n) for n in seq]
    return "*".join(reversed(names))


def render_text(pres: Presentation, alias: dict | None = None) -> str:
    alias = alias or {}

    def nm(x):
        return alias.get(x, x)

    lines = []
    lines.append(f"quiver vertices ({len(pres.quiver_vertices)}): "
                 + ", ".join(pres.quiver_vertices))
    lines.append(f"arrows ({len(pres.arrows)}):")
    for name in sorted(pres.arrows):
        a = pres.arrows[name]
        lines.append(f"  {nm(name)}: {a.source} -> {a.target}")
    lines.append(f"commutation relations ({len(pres.commutation_relations)}):")
    for wx, wy in pres.commutation_relations:
        lines.append(f"  {product_str(wx, alias)} = {product_str(wy, alias)}")
    lines.append(f"zero relations ({len(pres.zero_relations)}):")
    for later, earlier in pres.zero_relations:
        lines.append(f"  {nm(later)}*{nm(earlier)} = 0")
    return "\n".join(lines)


def presentation_isomorphism(p1: Presentation, p2: Presentation):
    """Arrow bijection induced by a degree-aware graph isomorphism, or None.

    When the underlying graphs are isomorphic the induced map carries
    walks to walks, hence relations to relations; this is asserted."""
    from .ribbon import is_isomorphic

    phi = is_isomorphic(p1.afbg.graph, p2.afbg.graph,
                        p1.afbg.degrees, p2.afbg.degrees)
    if phi is None:
        return None
    amap = {arrow_name(h): arrow_name(phi[h]) for h in phi}

    def map_walk(w):
        return tuple(amap[x] for x in w)

    c1 = {tuple(sorted((map_walk(a), map_walk(b))))
          for a, b in p1.commutation_relations}
    c2 = {tuple(sorted((a, b))) for a, b in p2.commutation_relations}
    z1 = {(amap[l], amap[e]) for l, e in p1.zero_relations}
    z2 = set(p2.zero_relations)
    assert c1 == c2 and z1 == z2
    return amap
