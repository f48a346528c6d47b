"""Strategy for C_{2p} □ C_{2q} with p >= q >= 4.

After the first probe the Robber is in a rectangle with side lengths ``d_i`` and ``d_j``. A short
rectangle (``d_i <= p - 2`` and ``d_j <= q - 2``) lies, with its whole neighbourhood, inside a cop
house of the probe translated by ``(a - 1, b - 1)``, which locates the Robber. A long one is cut by
the probe translated by ``(a, b)`` into axis pairs at distance 2, which are short rectangles.
"""
# Import built-in modules
from typing import Optional
from typing import Sequence

# Import local modules
from localization.api.enumerations import StrategyFamily
from localization.api.graph_core import Graph
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import SafeSetForm
from localization.api.strategies._base import StrategyParams
from localization.api.strategies._base import TorusStrategy
from localization.api.strategies._base import TurnRecord


class EvenEvenStrategy(TorusStrategy):
    family = StrategyFamily.EvenEven

    def __init__(self, p: int, q: int, graph: Optional[Graph] = None):
        StrategyParams(self.family, p, q)
        super().__init__(2 * p, 2 * q, graph)
        self.p = p
        self.q = q

    def is_short(self, form: SafeSetForm) -> bool:
        return form.d_i <= self.p - 2 and form.d_j <= self.q - 2

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        p, q = self.p, self.q
        if turn == 1:
            return self.v(p, 2 * q - 1), self.v(p, q - 1)
        robber_class = self.last_class(history)
        form = self.fit_rectangle(robber_class)
        if self.is_short(form):
            return self.v(form.a - 1 + p, form.b - 1 + q), self.v(form.a - 1 + p, form.b - 1)
        if turn == 2:
            return self.v(form.a + p, form.b + q), self.v(form.a + p, form.b)
        raise self.unexpected(turn, robber_class)


def strategy_even_even(p: int, q: int, graph: Optional[Graph] = None) -> EvenEvenStrategy:
    return EvenEvenStrategy(p, q, graph)
