"""Four-probe strategy for C_{2p} □ C6 with p >= 3.

The Cop imagines the game on C_{2p+1} □ C6 and plays the odd-by-even probes. On an even number
of columns the mirror of a column about the probe column is never adjacent to it, so after the
second probe only horizontal pairs at distance 2 and vertical pairs at distance 2 survive.
"""
# Import built-in modules
from typing import Optional
from typing import Sequence

# Import local modules
from localization.api.enumerations import StrategyFamily
from localization.api.graph_core import Graph
from localization.api.localization_game import KnowledgeState
from localization.api.strategies._base import StrategyParams
from localization.api.strategies._base import TorusStrategy
from localization.api.strategies._base import TurnRecord


class C2pC6Strategy(TorusStrategy):
    family = StrategyFamily.C2pC6

    def __init__(self, p: int, graph: Optional[Graph] = None):
        StrategyParams(self.family, p)
        super().__init__(2 * p, 6, graph)
        self.p = p

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        p = self.p
        if turn == 1:
            return self.v(p, 5), self.v(p, 2)
        robber_class = self.last_class(history)
        if turn == 2:
            form = self.fit_rectangle(robber_class)
            return self.v(form.a + p, form.b + 3), self.v(form.a + p, form.b)
        if turn == 3:
            match = self.match_pair(robber_class, (2, 0))
            if match is not None:
                x, y = match
                return self.v(x + 1, y + 1), self.v(x, y)
            match = self.match_pair(robber_class, (0, -2))
            if match is not None:
                x, y = match
                return self.v(x, y), self.v(x - 1, y + 1)
        if turn == 4:
            match = self.match_pair(robber_class, (-1, -1))
            if match is not None:
                x, y = match
                return self.v(x + 1, y + 1), self.v(x + 1, y - 2)
            match = self.match_pair(robber_class, (1, -1))
            if match is not None:
                x, y = match
                return self.v(x - 1, y + 1), self.v(x - 1, y - 2)
        raise self.unexpected(turn, robber_class)


def strategy_c2p_c6(p: int, graph: Optional[Graph] = None) -> C2pC6Strategy:
    return C2pC6Strategy(p, graph)
