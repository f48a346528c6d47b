"""Four-probe strategy for C_{2p+1} □ C_{2q} with p >= 1 and q in {2, 3}.

Turn 1 probes ``B1 = {v_{p,2q-1}, v_{p,q-1}}``; every safe set is then a rectangle
``{v_{i,j}, v_{2p-i,j}, v_{i,2q-2-j}, v_{2p-i,2q-2-j}}``. Turn 2 translates ``B1`` onto the
fitted rectangle, which leaves only axis pairs at distance 1 or 2. Turn 3 turns those into
diagonal pairs and turn 4 separates the neighbourhood of a diagonal pair.
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


class OddEvenStrategy(TorusStrategy):
    family = StrategyFamily.OddEven

    def __init__(self, p: int, q: int, graph: Optional[Graph] = None):
        StrategyParams(self.family, p, q)
        super().__init__(2 * p + 1, 2 * q, graph)
        self.p = p
        self.q = q

    def first_probe(self):
        return self.v(self.p, 2 * self.q - 1), self.v(self.p, self.q - 1)

    def axis_pair_probe(self, robber_class: KnowledgeState):
        """Turn-3 probe for a horizontal pair at distance 1 or 2, or a vertical pair at distance 2."""
        match = self.match_pair(robber_class, (1, 0))
        if match is not None:
            x, y = match
            return self.v(x - 1, y + 1), self.v(x, y)
        match = self.match_pair(robber_class, (2, 0))
        if match is not None:
            x, y = match
            return self.v(x + 1, y + 1), self.v(x, y)
        match = self.match_pair(robber_class, (0, -2))
        if match is not None:
            x, y = match
            return self.v(x, y), self.v(x - 1, y + 1)
        return None

    def diagonal_probe(self, robber_class: KnowledgeState):
        """Turn-4 probe for ``{v_{x,y}, v_{x+1,y+1}}`` or its mirror ``{v_{x,y}, v_{x+1,y-1}}``."""
        p = self.p
        for dy in (1, -1):
            match = self.match_pair(robber_class, (1, dy))
            if match is None:
                continue
            x, y = match
            if p >= 2:
                return self.v(x - p + 1, y), self.v(x - p, y - dy)
            return self.v(x - 1, y), self.v(x, y - dy)
        return None

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        if turn == 1:
            return self.first_probe()
        robber_class = self.last_class(history)
        probe = None
        if turn == 2:
            form = self.fit_rectangle(robber_class)
            probe = self.v(form.a + self.p, form.b + self.q), self.v(form.a + self.p, form.b)
        elif turn == 3:
            probe = self.axis_pair_probe(robber_class)
        elif turn == 4:
            probe = self.diagonal_probe(robber_class)
        if probe is None:
            raise self.unexpected(turn, robber_class)
        return probe


def strategy_odd_even(p: int, q: int, graph: Optional[Graph] = None) -> OddEvenStrategy:
    return OddEvenStrategy(p, q, graph)
