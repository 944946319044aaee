from itertools import permutations
from random import Random

import pytest

from fbga.errors import (
    DisconnectedInput,
    DuplicateHalfEdge,
    FixedPointPairing,
    OrbitMismatch,
    RibbonStructureError,
    UnknownVertex,
)
from fbga.randgen import random_ribbon_graph, shuffled_copy
from fbga.ribbon import (
    RibbonGraph,
    canonical_code,
    edge_id_of_pair,
    is_isomorphic,
    orbits,
    quotient_by_orbits,
    relabel,
)


def lambda_graph():
    return RibbonGraph.build(
        {"u": ["h", "hp"], "w": ["ih", "ihp"]},
        [["h", "ih"], ["hp", "ihp"]])


def loop_graph():
    return RibbonGraph.build({"v": ["a", "b"]}, [["a", "b"]])


def test_orbits_anchored_at_min():
    perm = {"b": "c", "c": "b", "a": "a"}
    assert orbits(perm) == [("a",), ("b", "c")]


def test_build_basic():
    g = lambda_graph()
    assert set(g.vertices) == {"u", "w"}
    assert g.valency("u") == 2
    assert g.num_edges() == 2
    assert g.edge_of("h") == g.edge_of("ih") == edge_id_of_pair("ih", "h")
    assert g.connected


def test_build_rejects_self_paired_edge():
    with pytest.raises(FixedPointPairing):
        RibbonGraph.build({"v": ["a"]}, [["a", "a"]])


def test_build_rejects_duplicate_half_edge():
    with pytest.raises(DuplicateHalfEdge):
        RibbonGraph.build({"v": ["a", "a"]}, [["a", "b"]])
    with pytest.raises(DuplicateHalfEdge):
        RibbonGraph.build({"v": ["a", "b"], "w": ["c", "d"]},
                          [["a", "b"], ["a", "c"]])


def test_build_rejects_unpaired_and_unattached():
    with pytest.raises(OrbitMismatch):
        RibbonGraph.build({"v": ["a", "b", "c"]}, [["a", "b"]])
    with pytest.raises(OrbitMismatch):
        RibbonGraph.build({"v": ["a", "b"]}, [["a", "b"], ["c", "d"]])


def test_build_rejects_reserved_separator():
    with pytest.raises(RibbonStructureError):
        RibbonGraph.build({"v": ["a~x", "b"]}, [["a~x", "b"]])


def test_unknown_vertex():
    with pytest.raises(UnknownVertex):
        lambda_graph().valency("nope")


def test_faces_of_lambda():
    g = lambda_graph()
    assert g.face_perimeters() == [2, 2]
    # Euler characteristic V - E + F of the underlying surface is even
    assert (len(g.vertices) - g.num_edges() + len(g.faces())) % 2 == 0


def test_faces_of_loop():
    # one loop at one vertex: two faces of perimeter one
    assert loop_graph().face_perimeters() == [1, 1]


def test_loop_not_bipartite_double_edge_is():
    assert not loop_graph().is_bipartite()
    assert lambda_graph().is_bipartite()


@pytest.mark.parametrize("seed", range(8))
def test_euler_characteristic_parity(seed):
    rng = Random(seed)
    g = random_ribbon_graph(rng, rng.randint(1, 8))
    chi = len(g.vertices) - g.num_edges() + len(g.faces())
    assert chi % 2 == 0
    assert chi <= 2
    assert sum(g.face_perimeters()) == len(g.half_edges)


def test_canonical_code_invariant_under_relabeling():
    rng = Random(5)
    for _ in range(30):
        g = random_ribbon_graph(rng, rng.randint(1, 7))
        code = canonical_code(g)
        g2, _ = shuffled_copy(rng, g)
        assert canonical_code(g2) == code


def test_canonical_code_degree_aware():
    g = lambda_graph()
    same = canonical_code(g, {"u": 2, "w": 2})
    other = canonical_code(g, {"u": 2, "w": 4})
    assert same != other
    assert canonical_code(g) != same  # degrees change the code space


def test_canonical_code_requires_connected():
    g = RibbonGraph.build({"v": ["a", "b"], "w": ["c", "d"]},
                          [["a", "b"], ["c", "d"]])
    assert not g.connected
    with pytest.raises(DisconnectedInput):
        canonical_code(g)


def test_is_isomorphic_returns_checked_bijection():
    rng = Random(11)
    g = random_ribbon_graph(rng, 5)
    g2, _ = shuffled_copy(rng, g)
    phi = is_isomorphic(g, g2)
    assert phi is not None
    for h in g.half_edges:
        assert g2.pairing[phi[h]] == phi[g.pairing[h]]
        assert g2.rotation[phi[h]] == phi[g.rotation[h]]


def test_is_isomorphic_distinguishes_loop_from_edge():
    edge = RibbonGraph.build({"v": ["a"], "w": ["b"]}, [["a", "b"]])
    assert is_isomorphic(loop_graph(), edge) is None


def brute_force_iso(g1, g2):
    """Exhaustive bijection scan; only viable for tiny graphs."""
    hs1, hs2 = list(g1.half_edges), list(g2.half_edges)
    if len(hs1) != len(hs2):
        return False
    for image in permutations(hs2):
        phi = dict(zip(hs1, image))
        if all(phi[g1.pairing[h]] == g2.pairing[phi[h]]
               and phi[g1.rotation[h]] == g2.rotation[phi[h]]
               for h in hs1):
            return True
    return False


def test_iso_agrees_with_brute_force_on_small_graphs():
    rng = Random(23)
    graphs = [random_ribbon_graph(rng, rng.randint(1, 3)) for _ in range(12)]
    for i, a in enumerate(graphs):
        for b in graphs[i:]:
            fast = is_isomorphic(a, b) is not None
            assert fast == brute_force_iso(a, b)


def test_relabel_roundtrip():
    g = lambda_graph()
    vmap = {"u": "a", "w": "b"}
    hmap = {h: h.upper() for h in g.half_edges}
    g2 = relabel(g, vmap, hmap)
    assert set(g2.vertices) == {"a", "b"}
    assert is_isomorphic(g, g2) is not None


def test_quotient_by_orbits_collapses_parallel_pair():
    g = lambda_graph()
    # glue the two edges together (the rotation-induced classes of the
    # degree-1 function): stars must quotient cleanly
    cls = {"h": "h", "hp": "h", "ih": "ih", "ihp": "ih"}
    q = quotient_by_orbits(g, cls)
    assert q.num_edges() == 1
    assert set(q.vertices) == {"u", "w"}
    assert q.valency("u") == 1


def test_quotient_rejects_unclean_classes():
    g = RibbonGraph.build(
        {"u": ["a", "b", "c", "d"]},
        [["a", "b"], ["c", "d"]])
    # classes that do not step uniformly around the star
    cls = {"a": "a", "c": "a", "b": "b", "d": "d"}
    with pytest.raises(RibbonStructureError):
        quotient_by_orbits(g, cls)
