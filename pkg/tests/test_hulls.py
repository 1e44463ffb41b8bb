import json

import pytest
from hypothesis import given, settings

from oracles import brute_force_extremal
from strategies import connected_graphs
from tightspan import (
    BudgetExceededError,
    EnumerationBudget,
    build_injective_hull,
    cocomparability_family,
    disk_separates,
    enumerate_extremal_functions,
    fixture,
    helly_gap,
    hull_to_dot,
    hull_to_json,
    peripheral_vertices,
    split_family,
)
from tightspan.hulls import is_extremal, is_feasible
from tightspan.isomorphism import are_isomorphic_small


def test_enumerate_k1():
    assert enumerate_extremal_functions(fixture("K1")) == [(0,)]


def test_enumerate_c4():
    # 4 distance vectors plus the single all-ones hub, frozen from the
    # exhaustive scan over vectors with f(x) <= ecc(x) = 2
    assert enumerate_extremal_functions(fixture("C4")) == [
        (0, 1, 2, 1),
        (1, 0, 1, 2),
        (1, 1, 1, 1),
        (1, 2, 1, 0),
        (2, 1, 0, 1),
    ]


def test_enumerate_c5():
    vectors = enumerate_extremal_functions(fixture("C5"))
    assert len(vectors) == 6
    assert (1, 1, 1, 1, 1) in vectors


@pytest.mark.parametrize("name", ["C4", "C6", "P5", "house", "gem", "W5"])
def test_enumerate_matches_brute_force(name):
    g = fixture(name)
    assert enumerate_extremal_functions(g) == brute_force_extremal(g)


@pytest.mark.parametrize("name", ["C6", "domino", "W4"])
def test_minimality_characterization(name):
    # a feasible vector is extremal iff lowering any coordinate breaks feasibility
    g = fixture(name)
    d = g.distances().rows
    for vec in enumerate_extremal_functions(g):
        assert is_extremal(vec, d)
        for x in range(g.n):
            lowered = list(vec)
            lowered[x] -= 1
            assert not is_feasible(tuple(lowered), d)


def test_enumeration_contains_all_distance_vectors():
    g = fixture("domino")
    vectors = set(enumerate_extremal_functions(g))
    for row in g.distances().rows:
        assert tuple(row) in vectors


def test_vertex_cap():
    with pytest.raises(BudgetExceededError):
        enumerate_extremal_functions(split_family(3))  # n=18 > default cap 14


def test_node_budget_reported():
    with pytest.raises(BudgetExceededError, match="nodes"):
        enumerate_extremal_functions(fixture("C8"), EnumerationBudget(max_nodes=5))


def test_hull_of_tree_is_tree():
    tree = fixture("P6")
    h = build_injective_hull(tree)
    assert h.hull == tree
    assert h.n_helly == 0
    assert helly_gap(h) == 0


def test_hull_c4_is_w4():
    h = build_injective_hull(fixture("C4"))
    assert (h.hull.n, h.hull.m) == (5, 8)
    assert are_isomorphic_small(h.hull, fixture("W4")) is not None
    assert h.n_helly == 1
    assert helly_gap(h) == 1


def test_hull_c5_is_w5():
    h = build_injective_hull(fixture("C5"))
    assert (h.hull.n, h.hull.m) == (6, 10)
    assert are_isomorphic_small(h.hull, fixture("W5")) is not None


def test_hull_canonical_order():
    h = build_injective_hull(fixture("C6"))
    d = h.source.distances().rows
    for z in range(h.n_real):
        assert h.vectors[z] == tuple(d[z])
    helly = [h.vectors[i] for i in h.helly_vertices()]
    assert helly == sorted(helly)
    assert h.real_map == tuple(range(6))


def test_hull_embedding_is_isometric():
    h = build_injective_hull(fixture("C6"))
    d = h.source.distances().rows
    dh = h.hull.distances().rows
    for z in range(6):
        for w in range(6):
            assert dh[z][w] == d[z][w]


@pytest.mark.parametrize("name", ["C4", "C6", "house", "gem"])
def test_hull_metric_matches_chebyshev_to_reals(name):
    # BFS hull distances agree with the vector formula, kept as a cross-check
    h = build_injective_hull(fixture(name))
    dh = h.hull.distances().rows
    for i in range(h.hull.n):
        for z in range(h.n_real):
            cheb = max(abs(a - b) for a, b in zip(h.vectors[i], h.vectors[z]))
            assert dh[i][z] == cheb


def test_helly_gap_at_free_instance():
    g, _ = cocomparability_family(2)
    assert helly_gap(build_injective_hull(g)) <= 2


def test_peripheral_p3():
    g = fixture("P3")
    per = peripheral_vertices(g)
    assert set(per) == {0, 2}
    # recorded witnesses really witness: no other vertex strictly extends I(y, x)
    for x, y in per.items():
        iyx = g.interval(y, x)
        for z in range(g.n):
            if z != x:
                iyz = g.interval(y, z)
                assert not (iyx < iyz)
    # the opposite endpoint is a witness too
    assert not any(g.interval(2, 0) < g.interval(2, z) for z in (1, 2))


def test_peripheral_k3():
    assert set(peripheral_vertices(fixture("K3"))) == {0, 1, 2}


def test_peripheral_of_hull_c4_excludes_hub():
    h = build_injective_hull(fixture("C4"))
    assert set(peripheral_vertices(h.hull)) == {0, 1, 2, 3}


def test_disk_separates_path_center():
    assert disk_separates(fixture("P3"), 1, 0, 0, 2)


def test_disk_separates_c4_goes_around():
    assert not disk_separates(fixture("C4"), 0, 0, 1, 3)


def test_disk_separates_precondition():
    with pytest.raises(ValueError, match="outside"):
        disk_separates(fixture("P3"), 1, 1, 0, 2)


def test_disk_separates_split_family_single_clique_vertex():
    g = split_family(4)
    # x_i = i-1, y_i = k+i-1, clique M = ids 8..23
    for m in range(8, 24):
        for i in range(4):
            assert not disk_separates(g, m, 0, i, 4 + i)


def test_hull_json_schema():
    h = build_injective_hull(fixture("C4"))
    doc = json.loads(hull_to_json(h))
    assert doc["n_real"] == 4 and doc["n_helly"] == 1
    assert doc["vertices"][0] == {"id": 0, "real": True, "vector": [0, 1, 2, 1]}
    assert doc["vertices"][4]["real"] is False
    assert [4, 0] not in doc["edges"]
    assert all(u < v for u, v in doc["edges"])


def test_hull_dot_shapes():
    h = build_injective_hull(fixture("C4"))
    dot = hull_to_dot(h)
    assert "shape=circle" in dot and "shape=square" in dot


@given(connected_graphs(max_n=6))
@settings(max_examples=30, deadline=None)
def test_hull_invariants_random(g):
    h = build_injective_hull(g)
    # Peripheral vertices of the hull are real
    assert all(p < h.n_real for p in peripheral_vertices(h.hull))
    # every extremal vector is bounded by eccentricity
    ecc = g.distances().ecc
    for vec in h.vectors:
        assert all(0 <= vec[x] <= ecc[x] for x in range(g.n))
