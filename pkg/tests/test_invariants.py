import random
from fractions import Fraction

import pytest

from fbga.afbg import Afbg
from fbga.gentle import GentlePresentation, gentle_cover
from fbga.invariants import COMPARED_FIELDS, compare, fingerprint, special_orbit_sizes
from fbga.randgen import random_afbg, shuffled_copy
from fbga.ribbon import RibbonGraph, is_isomorphic


def lambda_afbg(d=2):
    g = RibbonGraph.build(
        {"u": ["h", "hp"], "w": ["ih", "ihp"]},
        [["h", "ih"], ["hp", "ihp"]])
    return Afbg.build(g, {"u": d, "w": d})


def loop_afbg(d=2):
    g = RibbonGraph.build({"v": ["a", "b"]}, [["a", "b"]])
    return Afbg.build(g, {"v": d})


def test_fingerprint_fields_of_double_edge():
    fp = fingerprint(lambda_afbg())
    assert fp.num_vertices == 2
    assert fp.num_edges == 2
    assert fp.multiplicities == (Fraction(1), Fraction(1))
    assert fp.bipartite is True
    assert fp.nakayama_order == 1
    assert fp.face_perimeters == (2, 2)


def test_fingerprint_as_dict_round_trips_fields():
    d = fingerprint(lambda_afbg()).as_dict()
    assert set(COMPARED_FIELDS) <= set(d)


@pytest.mark.parametrize("seed", range(12))
def test_relabelling_invariance(seed):
    rng = random.Random(seed)
    a = random_afbg(rng, num_edges=rng.randint(1, 6))
    g2, deg2 = shuffled_copy(rng, a.graph, a.degrees)
    b = Afbg.build(g2, deg2)
    assert fingerprint(a) == fingerprint(b)
    assert compare(a, b).consistent


@pytest.mark.parametrize("seed", range(8))
def test_relabelling_invariance_fractional(seed):
    rng = random.Random(1000 + seed)
    from fbga.randgen import random_admissible_degrees, random_ribbon_graph

    g = random_ribbon_graph(rng, rng.randint(2, 5))
    degrees = random_admissible_degrees(rng, g)
    if degrees is None:
        pytest.skip("rejection sampling found nothing admissible here")
    a = Afbg.build(g, degrees)
    g2, deg2 = shuffled_copy(rng, g, degrees)
    assert fingerprint(a) == fingerprint(Afbg.build(g2, deg2))


def test_compare_reports_first_differing_field():
    cmp_ = compare(lambda_afbg(), loop_afbg())
    assert not cmp_.consistent
    assert cmp_.distinguished_by == "num_vertices"
    assert "num_vertices" in cmp_.describe()


def test_compare_catches_multiplicity_change():
    cmp_ = compare(lambda_afbg(2), lambda_afbg(4))
    assert not cmp_.consistent
    assert cmp_.distinguished_by == "multiplicities"


def test_extras_do_not_decide_comparison():
    """The shape certificate deliberately ignores face data: these two
    algebras agree on every compared field yet are not isomorphic."""
    k = GentlePresentation.build(
        ["1", "2"], [("x", "1", "2"), ("y", "1", "2")], [])
    ap = GentlePresentation.build(
        ["1", "2"], [("x", "1", "2"), ("y", "2", "1")],
        [("y", "x"), ("x", "y")])
    a = gentle_cover(k, 2).cover
    b = gentle_cover(ap, 2).cover
    fa, fb = fingerprint(a), fingerprint(b)
    assert compare(a, b).consistent
    assert fa.face_perimeters != fb.face_perimeters
    assert fa.special_orbits != fb.special_orbits
    assert is_isomorphic(a.graph, b.graph, a.degrees, b.degrees) is None


def test_special_orbit_sizes_loop():
    assert special_orbit_sizes(loop_afbg(2)) == (1, 1)
