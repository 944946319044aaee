"""Generators for randomized and exhaustive testing.

Any permutation of an even set of half-edges, together with the pairing
(2i, 2i+1), is a ribbon graph; connectivity is the only thing to retry
for.  Degree functions of the form d(v) = val(v)·m give integral
multiplicities (a Brauer graph, always admissible); the cover-compatible
variant keeps every multiplicity ≡ 1 mod r.
"""

from __future__ import annotations

from itertools import permutations
from random import Random

from .afbg import Afbg, is_admissible
from .ribbon import RibbonGraph, canonical_code, orbits, relabel


def _graph_from_perm(perm) -> RibbonGraph:
    """Ribbon graph whose rotation is the permutation i -> perm[i] on
    half-edges h0..h{2n-1}, with pairing (h_{2i}, h_{2i+1})."""
    n2 = len(perm)
    rho = {f"h{i}": f"h{perm[i]}" for i in range(n2)}
    rotations = {}
    for k, cyc in enumerate(orbits(rho)):
        rotations[f"v{k}"] = list(cyc)
    edges = [[f"h{2 * i}", f"h{2 * i + 1}"] for i in range(n2 // 2)]
    return RibbonGraph.build(rotations, edges)


def random_ribbon_graph(rng: Random, num_edges: int, max_tries: int = 1000) -> RibbonGraph:
    """Random connected ribbon graph with the given number of edges."""
    n2 = 2 * num_edges
    for _ in range(max_tries):
        perm = list(range(n2))
        rng.shuffle(perm)
        graph = _graph_from_perm(perm)
        if graph.connected:
            return graph
    raise RuntimeError(f"no connected graph with {num_edges} edges in {max_tries} tries")


def brauer_degrees(rng: Random, graph: RibbonGraph, max_mult: int = 3) -> dict:
    """d(v) = val(v)·m with random integral m: always admissible."""
    return {v: len(graph.stars[v]) * rng.randint(1, max_mult)
            for v in graph.vertices}


def cover_compatible_degrees(rng: Random, graph: RibbonGraph, r: int,
                             max_k: int = 2) -> dict:
    """d(v) = val(v)·(1 + r·k): multiplicities ≡ 1 mod r, so the
    r-sheeted cover is admissible with all orbit sizes exactly r."""
    return {v: len(graph.stars[v]) * (1 + r * rng.randint(0, max_k))
            for v in graph.vertices}


def random_admissible_degrees(rng: Random, graph: RibbonGraph,
                              max_degree: int = 6, tries: int = 200):
    """Rejection-sample an admissible degree function that is not forced
    to be integral; falls back to None when none is found."""
    for _ in range(tries):
        degrees = {v: rng.randint(1, max_degree) for v in graph.vertices}
        a, _violations = is_admissible(graph, degrees)
        if a is not None:
            return degrees
    return None


def random_afbg(rng: Random, num_edges: int, max_mult: int = 3) -> Afbg:
    graph = random_ribbon_graph(rng, num_edges)
    return Afbg.build(graph, brauer_degrees(rng, graph, max_mult))


def random_cut(rng: Random, graph: RibbonGraph) -> dict:
    return {v: rng.choice(graph.stars[v]) for v in graph.vertices}


def shuffled_copy(rng: Random, graph: RibbonGraph, degrees=None):
    """Isomorphic copy under random renaming of vertices and half-edges.
    Returns (graph, degrees-or-None)."""
    vnames = [f"w{i}" for i in range(len(graph.vertices))]
    rng.shuffle(vnames)
    vmap = dict(zip(sorted(graph.vertices), vnames))
    hnames = [f"k{i}" for i in range(len(graph.half_edges))]
    rng.shuffle(hnames)
    hmap = dict(zip(sorted(graph.half_edges), hnames))
    g2 = relabel(graph, vmap, hmap)
    d2 = {vmap[v]: degrees[v] for v in degrees} if degrees is not None else None
    return g2, d2


def random_brauer_tree(rng: Random, num_edges: int, max_mult: int = 4):
    """Random tree with one marked vertex of multiplicity m and all other
    multiplicities 1.  Returns (Afbg, m)."""
    rotations = {"v0": []}
    edge_pairs = []
    for i in range(num_edges):
        host = rng.choice(sorted(rotations))
        leaf = f"v{i + 1}"
        ha, hb = f"h{2 * i}", f"h{2 * i + 1}"
        pos = rng.randint(0, len(rotations[host]))
        rotations[host].insert(pos, ha)
        rotations[leaf] = [hb]
        edge_pairs.append([ha, hb])
    graph = RibbonGraph.build(rotations, edge_pairs)
    m = rng.randint(1, max_mult)
    marked = rng.choice(sorted(graph.vertices))
    degrees = {v: graph.valency(v) * (m if v == marked else 1)
               for v in graph.vertices}
    return Afbg.build(graph, degrees), m


def connected_graphs_up_to(max_edges: int) -> list:
    """All connected ribbon graphs with 1..max_edges edges, one
    representative per isomorphism class.  Exhaustive over rotations
    with the pairing fixed, deduplicated by canonical code."""
    out = []
    for n in range(1, max_edges + 1):
        seen = set()
        for perm in permutations(range(2 * n)):
            graph = _graph_from_perm(perm)
            if not graph.connected:
                continue
            code = canonical_code(graph)
            if code not in seen:
                seen.add(code)
                out.append(graph)
    return out
