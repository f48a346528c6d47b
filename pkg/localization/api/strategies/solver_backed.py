# Import built-in modules
from typing import Optional
from typing import Sequence

# Import local modules
from localization.api._solver import KnowledgeGameSolver
from localization.api._solver import SolverBudget
from localization.api.enumerations import StrategyFamily
from localization.api.errors import UnexpectedStateError
from localization.api.graph_core import Graph
from localization.api.localization_game import KnowledgeState
from localization.api.strategies._base import CopStrategy
from localization.api.strategies._base import TurnRecord


class SolverStrategy(CopStrategy):
    """Play the witness probes of the exact solver, for graphs without a scripted strategy.

    Args:
        graph: Any connected graph.
        k: Number of cops.
        budget: Solver limits.

    """

    family = StrategyFamily.Solver

    def __init__(self, graph: Graph, k: int, budget: Optional[SolverBudget] = None):
        super().__init__(graph, min(k, graph.vertex_count))
        self.solver = KnowledgeGameSolver(graph, k, budget=budget)

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        probe = self.solver.winning_probe(state)
        if probe is None:
            raise UnexpectedStateError(f"{self}: state {sorted(state)} at turn {turn} is not a proven Cop win.")
        return probe


def solver_strategy(graph: Graph, k: int, budget: Optional[SolverBudget] = None) -> SolverStrategy:
    return SolverStrategy(graph, k, budget)
