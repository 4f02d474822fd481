from fractions import Fraction

import pytest
from hypothesis import given

from graphshare import (
    WeightedGraph,
    components,
    cycle_reduction_check,
    is_connected,
    is_sparse,
    quotient,
    reduction,
    shallow_quotient_GR,
    w_star,
)
from graphshare.graph import (
    is_independent,
    mask_of,
    spread,
    validate_cycle_certificate,
)

from .conftest import connected_graphs, cycle_graph, path_graph


def test_basic_accessors():
    g = path_graph([1, 0, 2])
    assert g.n == 3
    assert g.total_weight == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)
    assert g.adj[1] == 0b101
    assert g.weight_of(0b101) == 3
    assert g.positive_mask() == 0b101


def test_rejects_self_loop():
    with pytest.raises(ValueError):
        WeightedGraph([Fraction(1)], [(0, 0)])


def test_w_star_single_component():
    # one component: everything minus the heaviest component is nothing
    g = path_graph([1, 2, 3])
    assert w_star(g, g.full_mask) == 0


def test_w_star_two_components():
    g = path_graph([1, 0, 5])
    # removing the middle vertex leaves {0} and {2}; heaviest weighs 5
    assert w_star(g, 0b101) == 1


def test_components_partition():
    g = path_graph([1, 1, 1, 1])
    comps = components(g, 0b1011)
    assert sorted(comps) == [0b0011, 0b1000]


def test_reduction_keeps_hidden_paths():
    g = path_graph([1, 0, 0, 1])
    reduced, orig = reduction(g, 0b1001)
    assert orig == (0, 3)
    assert reduced.has_edge(0, 1)


def test_reduction_within_restriction():
    # path 0-1-2-3: outside the host window, 0 and 3 stay disconnected
    g = path_graph([1, 0, 0, 1])
    reduced, _ = reduction(g, 0b1001, within=0b1011)
    assert not reduced.has_edge(0, 1)


def test_quotient_block_weights():
    g = path_graph([1, 2, 3, 4])
    q = quotient(g, [0b0011, 0b1100])
    assert q.n == 2
    assert q.has_edge(0, 1)
    assert q.weights == (Fraction(3), Fraction(7))


def test_sparse_and_independent():
    g = path_graph([1, 1, 1, 1, 1, 1, 1])
    assert is_independent(g, 0b0010101)
    assert not is_sparse(g, 0b0010101)
    assert is_sparse(g, 0b1001001)


def test_spread():
    g = path_graph([1, 1, 1, 1])
    assert spread(g, 0b0001, 0b0111) == 0b0111
    assert spread(g, 0b0001, 0b1101) == 0b0001


def test_cycle_reduction_degenerate():
    g = path_graph([1, 0, 1])
    assert cycle_reduction_check(g, 0b001) == [0]
    # the two endpoints are joined through the middle: a 2-cycle
    assert cycle_reduction_check(g, 0b101) == [0, 2]


def test_cycle_reduction_real_cycle():
    g = cycle_graph([1, 0, 1, 0, 1, 0])
    order = cycle_reduction_check(g, 0b010101)
    assert order is not None and len(order) == 3


def test_cycle_certificate():
    g = cycle_graph([1, 1, 1, 1, 1])
    assert validate_cycle_certificate(g, [0, 1, 2, 3, 4])
    assert not validate_cycle_certificate(g, [0, 2, 4, 1, 3])


def test_shallow_quotient_blocks():
    # star with a weighted center: N[center] collapses to one block
    g = WeightedGraph(
        [Fraction(3), Fraction(0), Fraction(0), Fraction(0)],
        [(0, 1), (0, 2), (0, 3)],
    )
    sq = shallow_quotient_GR(g)
    assert sq.graph.n == 1
    assert sq.graph.weights == (Fraction(3),)


def test_shallow_quotient_singletons_are_zero():
    g = path_graph([2, 0, 0, 0])
    sq = shallow_quotient_GR(g)
    # block for N[0] = {0,1}, then two zero singletons
    assert sorted(sq.graph.weights) == [0, 0, Fraction(2)]


@given(connected_graphs())
def test_reduction_to_full_mask_is_identity(g):
    reduced, orig = reduction(g, g.full_mask)
    assert orig == tuple(range(g.n))
    assert set(reduced.edges) == set(g.edges)


@given(connected_graphs())
def test_w_star_bounds(g):
    for start in range(g.n):
        mask = g.full_mask & ~(1 << start)
        val = w_star(g, mask)
        assert 0 <= val <= g.weight_of(mask)


@given(connected_graphs())
def test_components_disjoint_cover(g):
    mask = g.full_mask & ~1
    comps = components(g, mask)
    union = 0
    for comp in comps:
        assert comp
        assert union & comp == 0
        assert is_connected(g, comp)
        union |= comp
    assert union == mask


@given(connected_graphs())
def test_spread_is_maximal(g):
    allowed = g.full_mask & ~(mask_of(range(0, g.n, 3)))
    start = allowed & -allowed
    if not start:
        return
    grown = spread(g, start, allowed | start)
    assert is_connected(g, grown)
    assert not (g.neighborhood(grown) & allowed & ~grown)
