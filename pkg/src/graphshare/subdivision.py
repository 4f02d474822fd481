"""Topological-minor witnesses: search for clique subdivisions and validate them.

The search enumerates branch-vertex tuples and backtracks over internally
disjoint connecting paths.  It is a test-time oracle for desk-scale graphs;
the live strategies never call it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import BudgetExceeded, WeightedGraph, iter_bits, mask_of


@dataclass
class SubdivisionWitness:
    """Branch vertices plus internally disjoint paths realizing a subdivision.

    `paths` maps ordered branch pairs (u, v) with u < v to full vertex
    sequences from u to v.  The subdivided graph H has the branch vertices
    as its vertex set and one edge per path.
    """

    branch_vertices: tuple[int, ...]
    paths: dict

    @property
    def edge_count(self) -> int:
        return len(self.paths)


def validate_witness(
    graph: WeightedGraph,
    witness: SubdivisionWitness,
    forbidden: int = 0,
    vertex_count: Optional[int] = None,
    edge_count: Optional[int] = None,
    branch_within: Optional[int] = None,
) -> bool:
    """Structural check: paths exist in G, avoid `forbidden`, endpoints are the
    named branch vertices, and interiors are pairwise disjoint."""
    branch = witness.branch_vertices
    if len(set(branch)) != len(branch):
        return False
    if vertex_count is not None and len(branch) != vertex_count:
        return False
    if edge_count is not None and len(witness.paths) != edge_count:
        return False
    branch_mask = mask_of(branch)
    if branch_mask & forbidden:
        return False
    if branch_within is not None and branch_mask & ~branch_within:
        return False
    used_internal = 0
    for (u, v), path in witness.paths.items():
        if u >= v or u not in branch or v not in branch:
            return False
        if path[0] != u or path[-1] != v or len(set(path)) != len(path):
            return False
        for a, b in zip(path, path[1:]):
            if not graph.has_edge(a, b):
                return False
        interior = mask_of(path[1:-1])
        if interior & (branch_mask | used_internal | forbidden):
            return False
        used_internal |= interior
    return True


def _complete_pairs(vertices: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(min(u, v), max(u, v)) for u, v in combinations(vertices, 2)]


class _PathSearch:
    def __init__(self, graph: WeightedGraph, budget: int):
        self.graph = graph
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"subdivision search exceeded {self.budget} nodes")

    def connect(self, pairs, used: int, branch_mask: int, paths: dict) -> Optional[dict]:
        if not pairs:
            return dict(paths)
        (u, v), rest = pairs[0], pairs[1:]
        other_branches = branch_mask & ~(1 << u | 1 << v)
        for path in self.simple_paths(u, v, used | other_branches):
            interior = mask_of(path[1:-1])
            paths[(u, v)] = path
            result = self.connect(rest, used | interior, branch_mask, paths)
            if result is not None:
                return result
            del paths[(u, v)]
        return None

    def simple_paths(self, src: int, dst: int, blocked: int):
        """All simple src..dst paths internally avoiding `blocked`, short first."""
        graph = self.graph
        stack = [(src, 1 << src, [src])]
        found = []
        while stack:
            self.tick()
            vertex, visited, path = stack.pop()
            nbrs = graph.adj[vertex]
            if nbrs >> dst & 1:
                found.append(path + [dst])
            for nxt in iter_bits(nbrs & ~visited & ~blocked & ~(1 << dst)):
                stack.append((nxt, visited | 1 << nxt, path + [nxt]))
        found.sort(key=len)
        yield from found


DEFAULT_SEARCH_BUDGET = 200_000


def find_subdivision(
    graph: WeightedGraph, n: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[SubdivisionWitness]:
    """Search for a K_n subdivision in G; None means an exhaustive proof of
    absence within the budget.  Raises BudgetExceeded past the node budget."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return SubdivisionWitness((0,), {})
    candidates = [v for v in range(graph.n) if graph.degree(v) >= n - 1]
    if len(candidates) < n:
        return None
    search = _PathSearch(graph, budget)
    for branch in combinations(candidates, n):
        branch_mask = mask_of(branch)
        paths = search.connect(_complete_pairs(branch), 0, branch_mask, {})
        if paths is not None:
            return SubdivisionWitness(tuple(branch), paths)
    return None
