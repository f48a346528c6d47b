"""Two-probe strategies for C5 □ C5 and C5 □ C3.

The first probe sits in column 2, so every safe set is a mirrored pair ``{v_{i,j}, v_{4-i,j}}``
and the row ``j`` is known. The second probe separates the whole neighbourhood of that pair.
"""
# Import built-in modules
from typing import Optional
from typing import Sequence
from typing import Tuple

# Import local modules
from localization.api.enumerations import StrategyFamily
from localization.api.graph_core import Graph
from localization.api.localization_game import KnowledgeState
from localization.api.strategies._base import TorusStrategy
from localization.api.strategies._base import TurnRecord


class _MirroredColumnsStrategy(TorusStrategy):
    def mirrored_pair(self, robber_class: KnowledgeState) -> Optional[Tuple[int, int]]:
        """``(i, j)`` with ``i`` the smaller column when the class is ``{v_{i,j}, v_{4-i,j}}``."""
        if len(robber_class) != 2:
            return None
        (i, j), (k, row) = sorted(self.labels.coordinates(v) for v in robber_class)
        if row != j or i > 1 or k != 4 - i:
            return None
        return i, j


class C5C5Strategy(_MirroredColumnsStrategy):
    """Locates the Robber on C5 □ C5 with 2 cops in 2 probes."""

    family = StrategyFamily.C5C5

    def __init__(self, graph: Optional[Graph] = None):
        super().__init__(5, 5, graph)

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        if turn == 1:
            return self.v(2, 4), self.v(2, 2)
        robber_class = self.last_class(history)
        pair = self.mirrored_pair(robber_class)
        if turn != 2 or pair is None:
            raise self.unexpected(turn, robber_class)
        _, j = pair
        # B1 turned by 90 degrees and moved to the row above the pair.
        return self.v(4, j + 1), self.v(2, j + 1)


class C5C3Strategy(_MirroredColumnsStrategy):
    """Locates the Robber on C5 □ C3 with 2 cops in 2 probes.

    On C3 both rows next to a probed row are at distance 1 from it, so the rotated second probe
    of C5 □ C5 cannot tell ``v_{i,j+1}`` from ``v_{i,j+2}``. For the pair ``{v_{i,j}, v_{4-i,j}}``
    with ``i <= 1`` the second probe is ``{v_{i,j+1}, v_{1-i,j}}``.
    """

    family = StrategyFamily.C5C3

    def __init__(self, graph: Optional[Graph] = None):
        super().__init__(5, 3, graph)

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        if turn == 1:
            return self.v(2, 1), self.v(2, 2)
        robber_class = self.last_class(history)
        pair = self.mirrored_pair(robber_class)
        if turn != 2 or pair is None:
            raise self.unexpected(turn, robber_class)
        i, j = pair
        return self.v(i, j + 1), self.v(1 - i, j)


def strategy_c5c5(graph: Optional[Graph] = None) -> C5C5Strategy:
    return C5C5Strategy(graph)


def strategy_c5c3(graph: Optional[Graph] = None) -> C5C3Strategy:
    return C5C3Strategy(graph)
