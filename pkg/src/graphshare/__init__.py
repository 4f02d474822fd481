"""Exact solver, structural decomposer and certified strategies for the
connected graph sharing game (taken vertices must induce a connected
subgraph; Alice moves first)."""

from .game import (
    ALICE,
    BOB,
    GameState,
    GreedyStrategy,
    IllegalMove,
    MoveRecord,
    OracleStrategy,
    Solver,
    Strategy,
    game_value,
    initial_state,
    make_state,
    optimal_strategy,
    play,
)
from .graph import (
    BudgetExceeded,
    ShallowQuotient,
    WeightedGraph,
    components,
    cycle_reduction_check,
    is_connected,
    is_independent,
    is_sparse,
    quotient,
    reduction,
    shallow_quotient_GR,
    w_star,
)
from .decompose import (
    Outcome,
    dfs_cycle,
    full_decomposition,
    hamil_grow,
    hamil_separator,
    neighborhood_refinement,
    structure_constant,
    subdivision_constant,
    subdivision_decomposition,
)
from .generators import (
    GeneratorSpec,
    generate,
    hedgehog,
    odd_construction,
    random_connected,
    random_sparse_weighted,
    ring_of_stars,
    subdivide_even,
)
from .ordering import (
    DichotomyResult,
    arrangeable_ordering,
    build_legal_ordering,
    improve_ordering,
    sparse_or_legal,
)
from .strategies import (
    CertifiedStrategy,
    SubdivisionSurfaced,
    master_strategy,
    strat_comp,
    strat_comp_R,
    strat_cycle_R,
    strat_legal,
    strat_sparse,
)
from .subdivision import SubdivisionWitness, find_subdivision, validate_witness
from .textio import ParseError, format_graph, load_graph, parse_graph, save_graph

__all__ = [name for name in dir() if not name.startswith("_")]
