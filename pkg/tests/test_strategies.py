import pytest

from graphshare import (
    GeneratorSpec,
    master_strategy,
    optimal_strategy,
    play,
    ring_of_stars,
    shallow_quotient_GR,
    strat_comp,
    strat_cycle_R,
    strat_legal,
    strat_sparse,
)
from graphshare.game import game_value
from graphshare.generators import random_sparse_weighted
from graphshare.graph import cycle_reduction_check, mask_of, w_star
from graphshare.verify import SUITES, charging_violations

from .conftest import cycle_graph, path_graph


def test_strat_comp_bound_realized():
    g = path_graph([1, 0, 5, 0, 1])
    strategy = strat_comp(g)
    gain, _, _ = play(g, strategy, optimal_strategy(g))
    assert gain >= strategy.bound
    assert strategy.bound == w_star(g, g.full_mask) / 2


def test_strat_comp_requires_odd_vertex_count():
    with pytest.raises(ValueError):
        strat_comp(path_graph([1, 1]))


def test_strat_comp_rejects_odd_taken_set():
    with pytest.raises(ValueError):
        strat_comp(path_graph([1, 1, 1]), taken=0b001)


def test_strat_cycle_R_on_ring_of_stars():
    g = ring_of_stars(5, seed=2)
    sq = shallow_quotient_GR(g)
    blocks = mask_of(i for i in range(sq.graph.n) if sq.graph.weights[i] > 0)
    assert cycle_reduction_check(sq.graph, blocks) is not None
    strategy = strat_cycle_R(g, sq, blocks)
    gain, _, _ = play(g, strategy, optimal_strategy(g))
    assert gain >= strategy.bound >= sq.graph.weight_of(blocks) / 6


def test_strat_cycle_R_large_ring_uses_segment_split():
    # more than six blocks exercises the segment/straddle analysis
    g = ring_of_stars(7, seed=5)
    sq = shallow_quotient_GR(g)
    blocks = mask_of(i for i in range(sq.graph.n) if sq.graph.weights[i] > 0)
    if cycle_reduction_check(sq.graph, blocks) is None:
        pytest.skip("degenerate instance")
    strategy = strat_cycle_R(g, sq, blocks)
    gain, _, _ = play(g, strategy, optimal_strategy(g))
    assert gain >= strategy.bound >= sq.graph.weight_of(blocks) / 6


def test_strat_legal_with_charging_audit():
    g = cycle_graph([3, 0, 2, 0, 1, 0, 2])
    from graphshare.ordering import (
        arrangeable_ordering,
        build_legal_ordering,
        distinguishing_coloring,
        heaviest_color_class,
        improve_ordering,
    )

    independent = heaviest_color_class(
        g, distinguishing_coloring(arrangeable_ordering(g))
    )
    ctx = improve_ordering(build_legal_ordering(g, independent))
    strategy = strat_legal(g, independent, ctx)
    gain, _, log = play(g, strategy, optimal_strategy(g))
    assert gain >= strategy.bound
    assert charging_violations(ctx, log) == []


def test_strat_sparse_certifies_a_bound():
    spec = GeneratorSpec(size=9, seed=11, parity="odd")
    g = random_sparse_weighted(spec)
    strategy = strat_sparse(g, 4)
    gain, _, _ = play(g, strategy, optimal_strategy(g))
    assert gain >= strategy.bound


def test_master_single_vertex():
    g = path_graph([9])
    strategy = master_strategy(g, 4)
    gain, _, _ = play(g, strategy, optimal_strategy(g))
    assert gain == strategy.bound == 9


def test_master_requires_odd_vertex_count():
    with pytest.raises(ValueError):
        master_strategy(path_graph([1, 1]), 4)


def test_master_bound_respects_game_value():
    g = cycle_graph([2, 0, 3, 0, 1])
    strategy = master_strategy(g, 4)
    assert strategy.bound <= game_value(g)
    gain, _, _ = play(g, strategy, optimal_strategy(g))
    assert gain >= strategy.bound


def test_certified_report_line():
    g = path_graph([4, 0, 1])
    strategy = master_strategy(g, 4)
    line = strategy.format()
    assert line.startswith("certified lemma=")
    assert "bound=" in line and "paperConstant=" in line
    assert strategy.dichotomy.format().startswith("dichotomy branch=")


@pytest.mark.parametrize(
    "suite",
    ["strat-comp", "strat-comp-R", "strat-cycle-R", "strat-legal", "master"],
)
def test_strategy_suites_smoke(suite):
    for seed in range(15):
        status, detail = SUITES[suite](seed)
        assert status != "fail", f"seed {seed}: {detail}"
