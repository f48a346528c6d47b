"""Lift a Cop strategy on ``G`` to ``G □ H`` using a doubly resolving set of ``H``.

For an inner probe ``B`` with ``b = min B`` and a doubly resolving set ``T`` of ``H`` with
``t* = min T`` the product probe is ``{(b, t) : t in T} + {(b_i, t*) : b_i in B, b_i != b}``.
The differences of the distances to ``(b, t)`` pin the Robber's ``H`` coordinate, after which the
distances to ``(b_i, t*)`` equal the inner distances shifted by a known constant. Each class of the
product probe therefore projects onto a single vertex of ``H`` and onto a class of the inner probe.
"""
# Import built-in modules
from typing import List
from typing import Optional
from typing import Sequence

# Import local modules
from localization.api.enumerations import Factor
from localization.api.enumerations import StrategyFamily
from localization.api.errors import ParameterError
from localization.api.errors import SoundnessViolationError
from localization.api.graph_core import Graph
from localization.api.graph_core import cartesian_product
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import Probe
from localization.api.resolving import is_doubly_resolving_set
from localization.api.resolving import project_onto_factor
from localization.api.resolving import psi
from localization.api.strategies._base import CopStrategy
from localization.api.strategies._base import TurnRecord


class ProductStrategy(CopStrategy):
    """Play ``inner`` on the ``G`` coordinate of ``product = G □ H``.

    Args:
        product: ``G □ H`` built by ``cartesian_product``.
        inner: A strategy on ``G``.
        doubly_resolving: A doubly resolving set of ``H``.

    """

    family = StrategyFamily.Product

    def __init__(self, product: Graph, inner: CopStrategy, doubly_resolving: Sequence[int]):
        labels = product.labels
        if labels is None or labels.m != inner.graph.vertex_count:
            raise ParameterError(f"{product.name} is not a product over {inner.graph.name}.")
        self.inner = inner
        self.doubly_resolving = tuple(sorted(set(doubly_resolving)))
        if len(self.doubly_resolving) < 2:
            raise ParameterError("A doubly resolving set has at least two vertices.")
        super().__init__(product, inner.cop_count + len(self.doubly_resolving) - 1)
        self.labels = labels

    def lift(self, inner_probe: Sequence[int]) -> List[int]:
        """The product probe built from an inner probe."""
        anchor = min(inner_probe)
        first_row = self.doubly_resolving[0]
        lifted = [self.labels.vertex(anchor, t) for t in self.doubly_resolving]
        lifted.extend(self.labels.vertex(b, first_row) for b in inner_probe if b != anchor)
        return lifted

    def project_class(self, turn: int, robber_class: KnowledgeState) -> KnowledgeState:
        rows = project_onto_factor(self.graph, robber_class, Factor.H)
        if len(rows) != 1:
            raise SoundnessViolationError(
                f"{self}: class {sorted(robber_class)} at turn {turn} spans rows {sorted(rows)} of the second factor."
            )
        return KnowledgeState(project_onto_factor(self.graph, robber_class, Factor.G))

    def project_history(self, history: Sequence[TurnRecord]) -> List[TurnRecord]:
        return [
            TurnRecord(
                record.turn,
                Probe(sorted(project_onto_factor(self.graph, record.probe, Factor.G))),
                self.project_class(record.turn, record.robber_class),
            )
            for record in history
        ]

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]):
        inner_state = KnowledgeState(project_onto_factor(self.graph, state, Factor.G))
        inner_probe = self.inner.next_probe(turn, inner_state, self.project_history(history))
        return self.lift(inner_probe)


def product_strategy(inner: CopStrategy, second: Graph, doubly_resolving: Optional[Sequence[int]] = None):
    """Build ``inner.graph □ second`` and the lifted strategy on it.

    Args:
        inner: Strategy on the first factor.
        second: The second factor ``H``.
        doubly_resolving: A doubly resolving set of ``H``; the smallest one is searched when omitted.

    Raises:
        ParameterError: If the given set does not doubly resolve ``H``.

    """
    if doubly_resolving is None:
        result = psi(second)
        if result.witness is None:
            raise ParameterError(f"No doubly resolving set of {second.name} within the subset budget.")
        doubly_resolving = result.witness
    elif not is_doubly_resolving_set(second, doubly_resolving):
        raise ParameterError(f"{sorted(doubly_resolving)} does not doubly resolve {second.name}.")
    product = cartesian_product(inner.graph, second)
    return ProductStrategy(product, inner, doubly_resolving)
