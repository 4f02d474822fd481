"""The ten gate criteria.  Each test ends by recording a single pass/fail
line; the collected lines are printed in the terminal summary (see
conftest.py) so a full run yields one line per criterion."""

import time

from graphshare import (
    game_value,
    hedgehog,
    odd_construction,
    optimal_strategy,
    play,
    ring_of_stars,
    shallow_quotient_GR,
    strat_cycle_R,
)
from graphshare.generators import GeneratorSpec, random_sparse_weighted, subdivide_even
from graphshare.graph import cycle_reduction_check, mask_of
from graphshare.verify import SUITES, audit_outcome
from graphshare import full_decomposition, subdivision_decomposition

from .conftest import record_acceptance


def report(criterion: int, ok: bool, detail: str) -> None:
    record_acceptance(f"criterion {criterion}: {'pass' if ok else 'FAIL'} — {detail}")
    assert ok, detail


def test_criterion_1_h3_exact_value():
    start = time.monotonic()
    value = game_value(odd_construction(3))
    elapsed = time.monotonic() - start
    ok = value == 1 and elapsed < 60
    report(1, ok, f"H_3 value {value} in {elapsed:.2f}s")


def test_criterion_2_hedgehog_values():
    bad = []
    for n in range(2, 6):
        for spine in ("path", "star"):
            value = game_value(hedgehog(n, spine))
            if value != 1:
                bad.append((n, spine, value))
    report(2, not bad, f"8 hedgehog variants all value 1 ({bad or 'no deviations'})")


def _subdivision_pairs(want: int, max_seeds: int = 600):
    """Seeded (graph, subdivided) pairs meeting the invariance hypotheses:
    positive vertices pairwise at distance >= 3, one zero-zero edge
    subdivided twice."""
    pairs = []
    for seed in range(max_seeds):
        spec = GeneratorSpec(family="randomConnected", size=4 + seed % 6, seed=seed)
        graph = random_sparse_weighted(spec)
        zero_edges = [
            (u, v)
            for u, v in sorted(graph.edges)
            if graph.weights[u] == 0 and graph.weights[v] == 0
        ]
        if not zero_edges:
            continue
        bigger = subdivide_even(graph, {zero_edges[seed % len(zero_edges)]: 2})
        pairs.append((graph, bigger))
        if len(pairs) >= want:
            break
    return pairs


def test_criterion_3_subdivision_invariance():
    pairs = _subdivision_pairs(50)
    checked = 0
    bad = []
    for graph, bigger in pairs:
        if game_value(graph) != game_value(bigger):
            bad.append(graph)
        checked += 1
    ok = checked >= 50 and not bad
    report(3, ok, f"{checked} subdivision pairs, {len(bad)} value changes")


def test_criterion_4_component_bound():
    checked = 0
    violations = 0
    for seed in range(200):
        status, detail = SUITES["strat-comp"](seed, 4 + seed % 4)
        checked += 1
        if status == "fail":
            violations += 1
    ok = checked >= 200 and violations == 0
    report(4, ok, f"{checked} graphs, all even connected T, {violations} violations")


def test_criterion_5_decomposer_soundness():
    checked = 0
    violations = []
    for seed in range(300):
        for suite in ("struct-hamil1", "struct-hamil2"):
            status, detail = SUITES[suite](seed, 3 + seed % 10)
            checked += 1
            if status == "fail":
                violations.append((suite, seed, detail))
    for seed in range(300):
        size = 1 + seed % 14
        spec = GeneratorSpec(family="randomConnected", size=size, seed=seed)
        from graphshare.generators import random_connected

        graph = random_connected(spec)
        for outcome, n in ((full_decomposition(graph), None),
                           (subdivision_decomposition(graph, 4), 4)):
            err = audit_outcome(graph, outcome, n=n)
            checked += 1
            if err:
                violations.append(("audit", seed, err))
    ok = checked >= 500 and not violations
    report(5, ok, f"{checked} outcomes re-verified, {len(violations)} violations")


def test_criterion_6_master_certification():
    clean = 0
    skipped = 0
    violations = []
    seed = 0
    while clean < 200 and seed < 600:
        status, detail = SUITES["master"](seed, 5 + seed % 7)
        if status == "skip":
            skipped += 1
        elif status == "fail":
            violations.append((seed, detail))
            clean += 1
        else:
            clean += 1
        seed += 1
    ok = clean >= 200 and not violations
    report(6, ok, f"{clean} certified games ({skipped} witness skips), "
                  f"{len(violations)} violations")


def test_criterion_7_quotient_cycle_bound():
    checked = 0
    violations = []
    seed = 0
    while checked < 100 and seed < 400:
        centers = 3 + seed % 2
        graph = ring_of_stars(centers, seed)
        seed += 1
        if graph.n > 13 or graph.n % 2 == 0:
            continue
        sq = shallow_quotient_GR(graph)
        blocks = mask_of(
            i for i in range(sq.graph.n) if sq.graph.weights[i] > 0
        )
        if cycle_reduction_check(sq.graph, blocks) is None:
            continue
        strategy = strat_cycle_R(graph, sq, blocks)
        gain, _, _ = play(graph, strategy, optimal_strategy(graph))
        checked += 1
        if gain < sq.graph.weight_of(blocks) / 6:
            violations.append(seed - 1)
    ok = checked >= 100 and not violations
    report(7, ok, f"{checked} ring-of-stars games, {len(violations)} below w(S_R)/6")


def test_criterion_8_legal_strategy_bound():
    checked = 0
    violations = []
    seed = 0
    while checked < 100 and seed < 300:
        status, detail = SUITES["strat-legal"](seed, 5 + seed % 6)
        seed += 1
        if status == "skip":
            continue
        checked += 1
        if status == "fail":
            violations.append((seed - 1, detail))
    ok = checked >= 100 and not violations
    report(8, ok, f"{checked} legal-ordering games with charging audit, "
                  f"{len(violations)} violations")


def test_criterion_9_observation_bounds():
    violations = 0
    for seed in range(500):
        status, _ = SUITES["arrangeable"](seed, 3 + seed % 11)
        if status == "fail":
            violations += 1
    report(9, violations == 0, f"500 orderings, {violations} bound violations")


def test_criterion_10_oracle_self_consistency():
    instances = [odd_construction(3)]
    instances += [hedgehog(n, s) for n in range(2, 6) for s in ("path", "star")]
    for graph, bigger in _subdivision_pairs(50):
        instances += [graph, bigger]
    bad = 0
    for graph in instances:
        value = game_value(graph)
        gain, _, _ = play(graph, optimal_strategy(graph), optimal_strategy(graph))
        if gain != value:
            bad += 1
    report(10, bad == 0,
           f"{len(instances)} oracle-vs-oracle games, {bad} value mismatches")
