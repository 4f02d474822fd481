"""Game state machine and the exact minimax oracle.

Alice moves first; every move must keep the taken set connected.  The solver
memoizes the future gain of the player to move on the taken bitmask, which
fully determines the rest of the game.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

from .graph import (
    ZERO,
    BudgetExceeded,
    WeightedGraph,
    is_connected,
    iter_bits,
)

ALICE = 0
BOB = 1
PLAYER_NAMES = ("alice", "bob")

DEFAULT_MEMO_BUDGET = 1 << 22


class IllegalMove(ValueError):
    """A strategy proposed a vertex that is not available in the state."""


@dataclass(frozen=True)
class GameState:
    graph: WeightedGraph
    taken: int
    alice_gain: Fraction
    bob_gain: Fraction
    to_move: int

    @property
    def finished(self) -> bool:
        return self.taken == self.graph.full_mask


def initial_state(graph: WeightedGraph) -> GameState:
    return GameState(graph, 0, ZERO, ZERO, ALICE)


def make_state(graph: WeightedGraph, taken_mask: int, to_move: Optional[int] = None) -> GameState:
    """An intermediate position with the given taken set; gains are attributed
    to nobody (both ledgers zero), which is all the solver needs."""
    if taken_mask and not is_connected(graph, taken_mask):
        raise ValueError("taken set must be connected")
    if to_move is None:
        to_move = ALICE if taken_mask.bit_count() % 2 == 0 else BOB
    return GameState(graph, taken_mask, ZERO, ZERO, to_move)


def legal_moves(state: GameState) -> int:
    if state.finished:
        return 0
    if not state.taken:
        return state.graph.full_mask
    return state.graph.neighborhood(state.taken)


def apply_move(state: GameState, v: int) -> GameState:
    if not (legal_moves(state) >> v & 1):
        raise IllegalMove(f"vertex {v} is not available")
    w = state.graph.weights[v]
    gains = {
        "alice_gain": state.alice_gain + (w if state.to_move == ALICE else ZERO),
        "bob_gain": state.bob_gain + (w if state.to_move == BOB else ZERO),
    }
    return replace(state, taken=state.taken | 1 << v, to_move=1 - state.to_move, **gains)


class Solver:
    """Memoized exact minimax for one graph.

    `mover_value(taken)` is the best total the player to move can still
    collect from the untaken vertices; it does not depend on which player
    that is.  One solver owns its memo table exclusively.
    """

    def __init__(self, graph: WeightedGraph, memo_budget: int = DEFAULT_MEMO_BUDGET):
        self.graph = graph
        self.memo_budget = memo_budget
        self._memo: dict[int, Fraction] = {graph.full_mask: ZERO}
        self._rest: dict[int, Fraction] = {graph.full_mask: ZERO}

    def _untaken_weight(self, taken: int) -> Fraction:
        value = self._rest.get(taken)
        if value is None:
            value = self.graph.weight_of(self.graph.full_mask & ~taken)
            self._rest[taken] = value
        return value

    def mover_value(self, taken: int) -> Fraction:
        memo = self._memo
        cached = memo.get(taken)
        if cached is not None:
            return cached
        graph = self.graph
        # Iterative postorder: expand children before evaluating a state.
        stack = [taken]
        while stack:
            current = stack[-1]
            if current in memo:
                stack.pop()
                continue
            moves = graph.neighborhood(current) if current else graph.full_mask
            pending = [current | 1 << v for v in iter_bits(moves)]
            todo = [child for child in pending if child not in memo]
            if todo:
                stack.extend(todo)
                continue
            stack.pop()
            best = None
            for v in iter_bits(moves):
                child = current | 1 << v
                value = graph.weights[v] + self._untaken_weight(child) - memo[child]
                if best is None or value > best:
                    best = value
            memo[current] = best if best is not None else ZERO
            if len(memo) > self.memo_budget:
                raise BudgetExceeded(f"memo table exceeded {self.memo_budget} entries")
        return memo[taken]

    def value_from(self, state: GameState) -> Fraction:
        """Alice's optimal future gain from this position (past gains excluded)."""
        mover = self.mover_value(state.taken)
        if state.to_move == ALICE:
            return mover
        return self._untaken_weight(state.taken) - mover

    def game_value(self) -> Fraction:
        return self.mover_value(0)

    def best_move(self, state: GameState) -> int:
        """Lowest-id argmax move for the player to move."""
        moves = legal_moves(state)
        if not moves:
            raise IllegalMove("game already finished")
        graph = self.graph
        best_v = -1
        best = None
        for v in iter_bits(moves):
            child = state.taken | 1 << v
            value = graph.weights[v] + self._untaken_weight(child) - self.mover_value(child)
            if best is None or value > best:
                best, best_v = value, v
        return best_v


def game_value(graph: WeightedGraph, memo_budget: int = DEFAULT_MEMO_BUDGET) -> Fraction:
    if not is_connected(graph, graph.full_mask):
        raise ValueError("game requires a connected graph")
    return Solver(graph, memo_budget).game_value()


class Strategy:
    """A stateful move-chooser with a certified lower bound on Alice's gain."""

    name = "strategy"
    bound: Fraction = ZERO

    def choose(self, state: GameState) -> int:
        raise NotImplementedError

    def reset(self) -> None:
        """Called before a game starts; stateful strategies reinitialize here."""


class OracleStrategy(Strategy):
    """Optimal play from the memoized minimax; usable for Alice or Bob."""

    def __init__(self, graph: WeightedGraph, solver: Optional[Solver] = None,
                 memo_budget: int = DEFAULT_MEMO_BUDGET):
        self.solver = solver if solver is not None else Solver(graph, memo_budget)
        self.bound = self.solver.game_value()
        self.name = "optimal"

    def choose(self, state: GameState) -> int:
        return self.solver.best_move(state)


class GreedyStrategy(Strategy):
    """Take the heaviest available vertex, lowest id on ties."""

    name = "greedy"

    def choose(self, state: GameState) -> int:
        moves = legal_moves(state)
        weights = state.graph.weights
        return max(iter_bits(moves), key=lambda v: (weights[v], -v))


class FunctionStrategy(Strategy):
    def __init__(self, fn: Callable[[GameState], int], name: str = "custom"):
        self.fn = fn
        self.name = name

    def choose(self, state: GameState) -> int:
        return self.fn(state)


@dataclass
class MoveRecord:
    index: int
    player: int
    vertex: int
    weight: Fraction

    def format(self) -> str:
        w = Fraction(self.weight)
        return f"move {self.index} {PLAYER_NAMES[self.player]} {self.vertex} {w.numerator}/{w.denominator}"


def play(
    graph: WeightedGraph, alice: Strategy, bob: Strategy
) -> tuple[Fraction, Fraction, list[MoveRecord]]:
    """Run a complete game; returns both gains and the move log.

    A strategy returning an illegal vertex aborts with IllegalMove carrying
    the offending state in its args.
    """
    state = initial_state(graph)
    alice.reset()
    bob.reset()
    log: list[MoveRecord] = []
    k = 0
    while not state.finished:
        strategy = alice if state.to_move == ALICE else bob
        v = strategy.choose(state)
        if not (legal_moves(state) >> v & 1):
            raise IllegalMove(
                f"{strategy.name} chose illegal vertex {v}", state.taken, state.to_move
            )
        log.append(MoveRecord(k, state.to_move, v, graph.weights[v]))
        state = apply_move(state, v)
        k += 1
    assert state.alice_gain + state.bob_gain == graph.total_weight
    return state.alice_gain, state.bob_gain, log


def optimal_strategy(graph: WeightedGraph, memo_budget: int = DEFAULT_MEMO_BUDGET) -> OracleStrategy:
    return OracleStrategy(graph, memo_budget=memo_budget)
