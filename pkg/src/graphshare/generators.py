"""Adversarial instance families and seeded random graph generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import WeightedGraph, is_sparse

DEFAULT_HN_CAP = 4


def hedgehog(n: int, spine: str = "path") -> WeightedGraph:
    """2n vertices: a connected spine b_0..b_{n-1} of weight 0 (path or star)
    with one weight-1 pendant a_i on each b_i.  Vertices 0..n-1 are the spine,
    n+i is the pendant of spine vertex i."""
    if n < 1:
        raise ValueError("n must be positive")
    if spine not in ("path", "star"):
        raise ValueError(f"unknown spine variant {spine!r}")
    edges = [(i, n + i) for i in range(n)]
    if spine == "path":
        edges += [(i, i + 1) for i in range(n - 1)]
    else:
        edges += [(0, i) for i in range(1, n)]
    weights = [0] * n + [1] * n
    return WeightedGraph(weights, edges)


def odd_construction(n: int, cap: int = DEFAULT_HN_CAP) -> WeightedGraph:
    """The 2n + 2^n - 1 vertex family H_n: pendants a_i of weight 1 on b_i,
    and a vertex c_X for every non-empty X subset of {1..n} adjacent to the
    b_i with i in X.  Ids: a_i = i, b_i = n + i, c_X = 2n + (bitmask(X) - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} above budget cap {cap} (2^n growth)")
    a = lambda i: i
    b = lambda i: n + i
    c = lambda x: 2 * n + x - 1
    edges = [(a(i), b(i)) for i in range(n)]
    for x in range(1, 1 << n):
        for i in range(n):
            if x >> i & 1:
                edges.append((b(i), c(x)))
    weights = [1] * n + [0] * (n + (1 << n) - 1)
    return WeightedGraph(weights, edges)


def subdivide_even(graph: WeightedGraph, counts: dict[tuple[int, int], int]) -> WeightedGraph:
    """Replace each listed edge uv by a path through `count` new zero-weight
    vertices.  Counts must be even and both endpoints must have weight zero,
    so the vertex-count parity and total weight are preserved."""
    normalized: dict[tuple[int, int], int] = {}
    for (u, v), count in counts.items():
        key = (min(u, v), max(u, v))
        if key not in graph.edges:
            raise ValueError(f"({u},{v}) is not an edge")
        if count % 2 != 0 or count < 0:
            raise ValueError(f"subdivision count for {key} must be a non-negative even number")
        if graph.weights[u] != 0 or graph.weights[v] != 0:
            raise ValueError(f"edge {key} has a positive-weight endpoint")
        normalized[key] = count
    weights = list(graph.weights)
    edges = []
    for u, v in sorted(graph.edges):
        count = normalized.get((u, v), 0)
        if count == 0:
            edges.append((u, v))
            continue
        chain = [u] + [len(weights) + i for i in range(count)] + [v]
        weights.extend([Fraction(0)] * count)
        edges.extend(zip(chain, chain[1:]))
    return WeightedGraph(weights, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str = "randomConnected"   # hedgehog | oddConstruction | evenSubdivision | randomConnected
    size: int = 8
    seed: int = 0
    parity: Optional[str] = None      # "odd" | "even" | None
    extra_edge_prob: float = 0.25
    zero_prob: float = 0.5
    max_weight: int = 8
    spine: str = "path"


def random_connected(spec: GeneratorSpec) -> WeightedGraph:
    """Seeded reproducible connected graph: random recursive tree plus extra
    edges, integer weights 0..max_weight with a configurable zero mass.
    The parity constraint is honored by adding one pendant zero vertex."""
    if spec.size < 1:
        raise ValueError("size must be positive")
    rng = random.Random(spec.seed)
    n = spec.size
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    present = set(edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < spec.extra_edge_prob:
                present.add((u, v))
                edges.append((u, v))
    weights = [
        0 if rng.random() < spec.zero_prob else rng.randint(1, spec.max_weight)
        for _ in range(n)
    ]
    if spec.parity is not None:
        want_odd = spec.parity == "odd"
        if (n % 2 == 1) != want_odd:
            weights.append(0)
            edges.append((0, n))
            n += 1
    return WeightedGraph(weights, edges)


def generate(spec: GeneratorSpec) -> WeightedGraph:
    if spec.family == "hedgehog":
        return hedgehog(spec.size, spec.spine)
    if spec.family == "oddConstruction":
        return odd_construction(spec.size)
    if spec.family == "evenSubdivision":
        base = random_sparse_weighted(spec)
        zero_edges = [
            (u, v) for u, v in sorted(base.edges)
            if base.weights[u] == 0 and base.weights[v] == 0
        ]
        counts = {e: 2 for e in zero_edges}
        return subdivide_even(base, counts)
    if spec.family == "randomConnected":
        return random_connected(spec)
    if spec.family == "sparseWeighted":
        return random_sparse_weighted(spec)
    if spec.family == "ringOfStars":
        return ring_of_stars(spec.size, spec.seed, max_weight=spec.max_weight)
    raise ValueError(f"unknown family {spec.family!r}")


def random_sparse_weighted(spec: GeneratorSpec) -> WeightedGraph:
    """A random connected graph rewritten so the positive-weight set is sparse:
    weights are kept only on a greedily chosen distance->=3 subset."""
    base = random_connected(spec)
    rng = random.Random(spec.seed ^ 0x5EED)
    order = list(range(base.n))
    rng.shuffle(order)
    chosen = 0
    ball2 = 0  # vertices within distance 2 of the chosen set
    for v in order:
        if ball2 >> v & 1:
            continue
        chosen |= 1 << v
        closed = base.adj[v] | 1 << v
        ball2 |= base.closed_neighborhood(closed)
    weights = [
        Fraction(rng.randint(1, spec.max_weight)) if chosen >> v & 1 else Fraction(0)
        for v in range(base.n)
    ]
    result = WeightedGraph(weights, base.edges)
    assert is_sparse(result, result.positive_mask())
    return result


def ring_of_stars(
    centers: int, seed: int, max_weight: int = 8, extra_leaves: int = 1
) -> WeightedGraph:
    """A cycle of star centers, one positively weighted leaf per center plus
    zero-weight filler leaves; the positive set is sparse and the reduced
    quotient of the weighted blocks is a cycle.  Total size is odd."""
    if centers < 3:
        raise ValueError("need at least 3 centers")
    rng = random.Random(seed)
    weights: list = [0] * centers
    edges = [(i, (i + 1) % centers) for i in range(centers)]
    for i in range(centers):
        leaf = len(weights)
        weights.append(rng.randint(1, max_weight))
        edges.append((i, leaf))
        for _ in range(rng.randint(0, extra_leaves)):
            filler = len(weights)
            weights.append(0)
            edges.append((i, filler))
    if len(weights) % 2 == 0:
        filler = len(weights)
        weights.append(0)
        edges.append((0, filler))
    graph = WeightedGraph(weights, edges)
    assert is_sparse(graph, graph.positive_mask())
    return graph
