"""Base class and helpers shared by the scripted Cop strategies."""
# Import built-in modules
from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Optional
from typing import Sequence
from typing import Tuple

# Import local modules
from localization.api._core import GraphObject
from localization.api.enumerations import StrategyFamily
from localization.api.errors import InvalidProbeError
from localization.api.errors import ParameterError
from localization.api.errors import StrategyMismatchError
from localization.api.errors import UnexpectedStateError
from localization.api.graph_core import Graph
from localization.api.graph_core import TorusLabels
from localization.api.graph_core import make_torus
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import Probe
from localization.api.localization_game import SafeSetForm


@dataclass(frozen=True)
class TurnRecord:
    """One finished turn: the probe and the class the Robber was found in."""

    turn: int
    probe: Probe
    robber_class: KnowledgeState

    def to_dict(self) -> Dict[str, Any]:
        return {"turn": self.turn, "probe": list(self.probe), "class": sorted(self.robber_class)}


@dataclass(frozen=True)
class StrategyParams:
    """Family tag and cycle half-orders of a scripted strategy.

    Raises:
        ParameterError: If ``p`` or ``q`` is outside the range the family is proven for.

    """

    family: StrategyFamily
    p: Optional[int] = None
    q: Optional[int] = None
    inner_cops: int = 1

    def __post_init__(self):
        p, q = self.p, self.q
        if self.family == StrategyFamily.OddEven and not (p is not None and p >= 1 and q in (2, 3)):
            raise ParameterError(f"odd_even needs p >= 1 and q in {{2, 3}}, got p={p}, q={q}.")
        if self.family == StrategyFamily.EvenEven and not (p is not None and q is not None and p >= q >= 4):
            raise ParameterError(f"even_even needs p >= q >= 4, got p={p}, q={q}.")
        if self.family == StrategyFamily.C2pC6 and not (p is not None and p >= 3):
            raise ParameterError(f"c2p_c6 needs p >= 3, got p={p}.")
        if self.inner_cops < 1:
            raise ParameterError(f"inner_cops must be at least 1, got {self.inner_cops}.")


class CopStrategy(GraphObject):
    """Maps (turn, knowledge state, history) to the next probe.

    Subclasses implement ``_probe``; ``next_probe`` validates every emitted probe.

    Args:
        graph: The graph the strategy plays on.
        cop_count: Number of vertices in every probe.

    """

    family: Optional[StrategyFamily] = None

    def __init__(self, graph: Graph, cop_count: int):
        super().__init__(graph)
        if cop_count < 1:
            raise ParameterError(f"A strategy needs at least one cop, got {cop_count}.")
        self.cop_count = cop_count

    def next_probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]) -> Probe:
        """The probe for ``turn`` (1-based) given the current knowledge and the past turns.

        Raises:
            InvalidProbeError: If the strategy emits a probe of the wrong size.
            UnexpectedStateError: If the strategy has no rule for the current state.

        """
        probe = Probe(self._probe(turn, state, history), vertex_count=self.graph.vertex_count)
        if len(probe) != self.cop_count:
            raise InvalidProbeError(f"{self} emitted {len(probe)} vertices, expected {self.cop_count}.")
        self._logger.debug(f"{self}: turn {turn} probes {list(probe)}.")
        return probe

    def _probe(self, turn: int, state: KnowledgeState, history: Sequence[TurnRecord]) -> Sequence[int]:
        raise NotImplementedError


class TorusStrategy(CopStrategy):
    """A 2-cop strategy bound to ``C_m □ C_n`` with the standard labeling."""

    def __init__(self, columns: int, rows: int, graph: Optional[Graph] = None):
        graph = graph if graph is not None else make_torus(columns, rows)
        _require_torus(graph, columns, rows)
        super().__init__(graph, 2)
        self.labels: TorusLabels = graph.labels

    def v(self, i: int, j: int) -> int:
        return self.labels.vertex(i, j)

    def fit_rectangle(self, robber_class: KnowledgeState) -> SafeSetForm:
        form = SafeSetForm.fit(self.labels, robber_class)
        if form is None:
            raise UnexpectedStateError(f"{self}: class {self.describe(robber_class)} is not a torus rectangle.")
        return form

    def match_pair(self, robber_class: KnowledgeState, offset: Tuple[int, int]) -> Optional[Tuple[int, int]]:
        """The first ``(x, y)`` with ``robber_class == {v_{x,y}, v_{x+dx,y+dy}}``, if any."""
        if len(robber_class) != 2:
            return None
        dx, dy = offset
        for x, y in sorted(self.labels.coordinates(vertex) for vertex in robber_class):
            if {self.v(x, y), self.v(x + dx, y + dy)} == set(robber_class):
                return x, y
        return None

    def last_class(self, history: Sequence[TurnRecord]) -> KnowledgeState:
        if not history:
            raise UnexpectedStateError(f"{self}: no robber class recorded before this turn.")
        return history[-1].robber_class

    def describe(self, vertices) -> str:
        return "{" + ", ".join(f"v{self.labels.coordinates(v)}" for v in sorted(vertices)) + "}"

    def unexpected(self, turn: int, robber_class: KnowledgeState) -> UnexpectedStateError:
        return UnexpectedStateError(f"{self}: no rule for class {self.describe(robber_class)} at turn {turn}.")


def _require_torus(graph: Graph, columns: int, rows: int):
    if graph.labels != TorusLabels(columns, rows) or graph.edges != make_torus(columns, rows).edges:
        raise StrategyMismatchError(f"Expected C{columns}□C{rows}, got {graph.name}.")
