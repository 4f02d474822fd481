from fractions import Fraction
from math import comb

import pytest

from graphshare import (
    SubdivisionWitness,
    WeightedGraph,
    find_subdivision,
    validate_witness,
)
from graphshare.graph import BudgetExceeded

from .conftest import cycle_graph, path_graph


def complete_graph(n: int) -> WeightedGraph:
    return WeightedGraph(
        [Fraction(1)] * n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def test_k4_found_directly():
    w = find_subdivision(complete_graph(4), 4)
    assert w is not None
    assert validate_witness(complete_graph(4), w, vertex_count=4, edge_count=6)


def test_tree_has_no_k3():
    assert find_subdivision(path_graph([1] * 6), 3) is None


def test_cycle_is_a_k3_subdivision():
    g = cycle_graph([1] * 5)
    w = find_subdivision(g, 3)
    assert w is not None
    assert validate_witness(g, w, vertex_count=3, edge_count=3)


def test_subdivided_k4_found():
    # K_4 with every edge subdivided once: 4 + 6 vertices
    base = complete_graph(4)
    edges = []
    mid = 4
    weights = [Fraction(1)] * 4
    for u, v in sorted(base.edges):
        weights.append(Fraction(0))
        edges += [(u, mid), (mid, v)]
        mid += 1
    g = WeightedGraph(weights, edges)
    w = find_subdivision(g, 4)
    assert w is not None
    assert validate_witness(g, w, vertex_count=4, edge_count=6)
    assert set(w.branch_vertices) == {0, 1, 2, 3}


def test_planar_graph_has_no_k5():
    # the 4x4 grid is planar: no K_5 subdivision exists
    n = 4
    idx = lambda r, c: r * n + c
    edges = []
    for r in range(n):
        for c in range(n):
            if c + 1 < n:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < n:
                edges.append((idx(r, c), idx(r + 1, c)))
    g = WeightedGraph([Fraction(1)] * (n * n), edges)
    assert find_subdivision(g, 5) is None


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        find_subdivision(complete_graph(9), 8, budget=10)


def test_validate_rejects_crossing_paths():
    g = cycle_graph([1] * 4)
    bogus = SubdivisionWitness(
        (0, 1, 2), {(0, 1): [0, 1], (0, 2): [0, 3, 2], (1, 2): [1, 3, 2]}
    )
    assert not validate_witness(g, bogus, vertex_count=3, edge_count=3)


def test_validate_respects_forbidden_mask():
    g = complete_graph(4)
    w = find_subdivision(g, 3)
    assert w is not None
    used = 0
    for path in w.paths.values():
        for v in path:
            used |= 1 << v
    assert not validate_witness(g, w, forbidden=used)


def test_witness_edge_count_property():
    w = find_subdivision(complete_graph(5), 5)
    assert w is not None
    assert w.edge_count == comb(5, 2)
