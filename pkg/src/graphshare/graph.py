"""Exact-arithmetic weighted graphs and the set operations everything else uses.

Vertices are dense integers 0..n-1.  Vertex sets are plain Python int
bitmasks throughout (bit i set <=> vertex i in the set), which keeps the
minimax solver and the decomposition code fast and allocation-free.
Weights are `fractions.Fraction`, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

ZERO = Fraction(0)


class BudgetExceeded(RuntimeError):
    """A configured search or memo budget was exhausted."""


def as_weight(value) -> Fraction:
    w = Fraction(value)
    if w < 0:
        raise ValueError(f"weights must be non-negative, got {w}")
    return w


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    if not mask:
        raise ValueError("empty mask")
    return (mask & -mask).bit_length() - 1


class WeightedGraph:
    """Finite simple undirected graph with non-negative rational vertex weights."""

    __slots__ = ("n", "weights", "adj", "_edges", "full_mask")

    def __init__(self, weights: Sequence, edges: Iterable[tuple[int, int]]):
        self.weights: tuple[Fraction, ...] = tuple(as_weight(w) for w in weights)
        self.n = len(self.weights)
        if self.n == 0:
            raise ValueError("graph must have at least one vertex")
        adj = [0] * self.n
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if (u, v) in edge_set or (v, u) in edge_set:
                raise ValueError(f"duplicate edge ({u},{v})")
            edge_set.add((min(u, v), max(u, v)))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._edges = frozenset(edge_set)
        self.full_mask = (1 << self.n) - 1

    # -- basic accessors ---------------------------------------------------

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighborhood(self, mask: int) -> int:
        """Open neighborhood N(S): vertices outside S adjacent to S."""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def closed_neighborhood(self, mask: int) -> int:
        return self.neighborhood(mask) | mask

    def weight_of(self, mask: int) -> Fraction:
        total = ZERO
        for v in iter_bits(mask):
            total += self.weights[v]
        return total

    @property
    def total_weight(self) -> Fraction:
        return self.weight_of(self.full_mask)

    def positive_mask(self) -> int:
        return mask_of(v for v in range(self.n) if self.weights[v] > 0)

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={sorted(self._edges)})"


# -- connectivity ---------------------------------------------------------


def spread(graph: WeightedGraph, seed: int, allowed: int) -> int:
    """All vertices of `allowed` reachable from `seed & allowed` inside G[allowed]."""
    frontier = seed & allowed
    reached = frontier
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= graph.adj[v]
        frontier = nxt & allowed & ~reached
        reached |= frontier
    return reached


def components(graph: WeightedGraph, mask: int) -> list[int]:
    """Vertex masks of the components of G[mask], ordered by lowest vertex."""
    out = []
    rest = mask
    while rest:
        comp = spread(graph, rest & -rest, mask)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(graph: WeightedGraph, mask: int) -> bool:
    if not mask:
        return False
    return spread(graph, mask & -mask, mask) == mask


def w_star(graph: WeightedGraph, mask: int) -> Fraction:
    """Total weight of G[mask] minus the weight of its heaviest component."""
    if not mask:
        return ZERO
    best = ZERO
    total = ZERO
    for comp in components(graph, mask):
        w = graph.weight_of(comp)
        total += w
        if w > best:
            best = w
    return total - best


def distances_from(graph: WeightedGraph, v: int, allowed: Optional[int] = None) -> list:
    """BFS distances from v inside G[allowed]; None when unreachable."""
    if allowed is None:
        allowed = graph.full_mask
    dist: list = [None] * graph.n
    if not (allowed >> v & 1):
        return dist
    dist[v] = 0
    frontier = 1 << v
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= graph.adj[u]
        nxt &= allowed & ~seen
        for u in iter_bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def shortest_path(graph: WeightedGraph, src: int, dst: int, allowed: int) -> Optional[list[int]]:
    """A shortest path src..dst inside G[allowed], lowest-id tie-break."""
    if not (allowed >> src & 1) or not (allowed >> dst & 1):
        return None
    prev: dict[int, int] = {src: -1}
    frontier = [src]
    while frontier and dst not in prev:
        nxt = []
        for u in frontier:
            for v in iter_bits(graph.adj[u] & allowed):
                if v not in prev:
                    prev[v] = u
                    nxt.append(v)
        frontier = sorted(nxt)
    if dst not in prev:
        return None
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    path.reverse()
    return path


# -- sparse / independent sets --------------------------------------------


def is_independent(graph: WeightedGraph, mask: int) -> bool:
    for v in iter_bits(mask):
        if graph.adj[v] & mask:
            return False
    return True


def is_sparse(graph: WeightedGraph, mask: int) -> bool:
    """Pairwise distance >= 3, i.e. closed neighborhoods pairwise disjoint."""
    seen = 0
    for v in iter_bits(mask):
        closed = graph.adj[v] | 1 << v
        if closed & seen:
            return False
        seen |= closed
    return True


# -- reduction and quotient ------------------------------------------------


def reduction(
    graph: WeightedGraph, mask: int, within: Optional[int] = None
) -> tuple[WeightedGraph, tuple[int, ...]]:
    """The reduction of G to S: graph on S joining u,v when some G-path meets S
    exactly in {u,v}.  Returns the reduced graph (vertices relabeled densely)
    and the tuple mapping new ids to original ids.

    With `within`, paths are confined to G[within] (S must be a subset).
    """
    if not mask:
        raise ValueError("reduction to an empty set")
    if within is None:
        within = graph.full_mask
    if mask & ~within:
        raise ValueError("reduction set must lie inside the host subgraph")
    orig = bits(mask)
    index = {v: i for i, v in enumerate(orig)}
    outside = within & ~mask
    edges = []
    for u in orig:
        # Vertices of S reachable from u via edges or paths through host\S.
        through = spread(graph, graph.adj[u] & outside, outside)
        reach = ((graph.adj[u] & within) | graph.neighborhood(through)) & mask
        for v in iter_bits(reach):
            if v > u:
                edges.append((index[u], index[v]))
    reduced = WeightedGraph([graph.weights[v] for v in orig], edges)
    return reduced, tuple(orig)


def quotient(graph: WeightedGraph, blocks: Sequence[int], block_weights=None) -> WeightedGraph:
    """G/blocks for a partition of V into non-empty connected blocks.

    `block_weights` maps a block index and its mask to the new weight;
    by default each block keeps the sum of its vertex weights.
    """
    union = 0
    for mask in blocks:
        if not mask:
            raise ValueError("empty block")
        if mask & union:
            raise ValueError("overlapping blocks")
        if not is_connected(graph, mask):
            raise ValueError(f"disconnected block {bits(mask)}")
        union |= mask
    if union != graph.full_mask:
        raise ValueError("blocks do not cover the vertex set")
    if block_weights is None:
        block_weights = lambda i, mask: graph.weight_of(mask)
    edges = []
    for i, j in combinations(range(len(blocks)), 2):
        if graph.neighborhood(blocks[i]) & blocks[j]:
            edges.append((i, j))
    return WeightedGraph([block_weights(i, m) for i, m in enumerate(blocks)], edges)


# -- cycles ----------------------------------------------------------------


def cycle_order(graph: WeightedGraph) -> Optional[list[int]]:
    """If the whole graph is a cycle (length-1 and length-2 conventions
    included), return its vertex order; otherwise None."""
    n = graph.n
    if n == 1:
        return [0]
    if n == 2:
        return [0, 1] if graph.has_edge(0, 1) else None
    if any(graph.degree(v) != 2 for v in range(n)):
        return None
    if not is_connected(graph, graph.full_mask):
        return None
    order = [0]
    prev = -1
    while len(order) < n:
        nxt = min(v for v in iter_bits(graph.adj[order[-1]]) if v != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def normalize_cycle(order: Sequence[int]) -> list[int]:
    """Rotate to start at the lowest id; fix direction by the smaller neighbor."""
    order = list(order)
    if len(order) <= 2:
        return sorted(order)
    i = order.index(min(order))
    order = order[i:] + order[:i]
    if order[-1] < order[1]:
        order = [order[0]] + order[:0:-1]
    return order


def cycle_reduction_check(graph: WeightedGraph, mask: int) -> Optional[list[int]]:
    """The cyclic order of S when the reduction of G to S is a cycle, else None."""
    reduced, orig = reduction(graph, mask)
    order = cycle_order(reduced)
    if order is None:
        return None
    return normalize_cycle([orig[i] for i in order])


def validate_cycle_certificate(graph: WeightedGraph, order: Sequence[int]) -> bool:
    """Certificate check for a cycle subgraph of G under the degenerate convention."""
    k = len(order)
    if k == 0 or len(set(order)) != k:
        return False
    if k == 1:
        return True
    if k == 2:
        return graph.has_edge(order[0], order[1])
    return all(graph.has_edge(order[i], order[(i + 1) % k]) for i in range(k))


# -- the 1-shallow quotient G^R -------------------------------------------


@dataclass(frozen=True)
class ShallowQuotient:
    graph: WeightedGraph          # G^R
    blocks: tuple[int, ...]       # block index -> vertex mask of G
    block_of: tuple[int, ...]     # vertex of G -> block index
    core: tuple[int, ...]         # block index -> center v in V+ (or -1 for singletons)


def shallow_quotient_GR(graph: WeightedGraph) -> ShallowQuotient:
    """Contract the closed neighborhood of every positive-weight vertex.

    Requires the positive-weight set to be sparse.  The block N[v] keeps the
    weight of v; leftover vertices become weight-0 singleton blocks, so the
    total weight is preserved exactly.
    """
    positive = graph.positive_mask()
    if not is_sparse(graph, positive):
        raise ValueError("positive-weight vertices are not a sparse set")
    blocks: list[int] = []
    core: list[int] = []
    covered = 0
    for v in iter_bits(positive):
        block = graph.adj[v] | 1 << v
        blocks.append(block)
        core.append(v)
        covered |= block
    for v in iter_bits(graph.full_mask & ~covered):
        blocks.append(1 << v)
        core.append(-1)
    weights = [graph.weights[c] if c >= 0 else ZERO for c in core]
    quotient_graph = quotient(graph, blocks, lambda i, m: weights[i])
    block_of = [0] * graph.n
    for i, mask in enumerate(blocks):
        for v in iter_bits(mask):
            block_of[v] = i
    return ShallowQuotient(quotient_graph, tuple(blocks), tuple(block_of), tuple(core))
