"""Provides a public session class bound to one graph.

Most work is done on one graph at a time, so the session keeps the graph, its distances and the
solver budget together:
```python

from localization import Session

with Session.from_tag("C5xC5") as game:
    game.echo(game.zeta(max_cops=2).value)
    report = game.verify_strategy("c5c5")
    game.echo(report.won, report.max_turns)

```

"""
# Import built-in modules
from pathlib import Path
from typing import Any
from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Union

# Import local modules
from localization.api import Graph
from localization.api import GraphObject
from localization.api import HideoutVerdict
from localization.api import KnowledgeState
from localization.api import LocalizationNumber
from localization.api import PairFamily
from localization.api import SearchResult
from localization.api import SolveReport
from localization.api import SolverBudget
from localization.api import VerificationReport
from localization.api import cartesian_product
from localization.api import check_bounds
from localization.api import cop_wins
from localization.api import enumerations
from localization.api import errors
from localization.api import graph_from_tag
from localization.api import localization_number
from localization.api import metric_dimension
from localization.api import psi
from localization.api import safe_sets
from localization.api import verify_cop_strategy
from localization.api import verify_hideout_family
from localization.api.constants import DEFAULT_MAX_TURNS
from localization.api.constants import DEFAULT_SUBSET_BUDGET
from localization.api.constants import HIDEOUT_TAGS
from localization.api.constants import STRATEGY_TAGS
from localization.api.strategies import infer_params
from localization.api.strategies import make_hideout_family
from localization.api.strategies import make_strategy
from localization.api.verifier import BoundsReport


class Session(GraphObject):
    """Session of the localization game on one graph.

    Attributes:
        budget: Solver limits used by every call.
        subset_budget: Limit on the subsets examined by ``dim`` and ``psi``.

    """

    def __init__(
        self,
        graph: Graph,
        budget: Optional[SolverBudget] = None,
        subset_budget: int = DEFAULT_SUBSET_BUDGET,
        callback: Optional[Callable[["Session"], Any]] = None,
    ):
        """Session of the localization game.

        Examples:
            ```python

                from localization import Session
                with Session.from_file("c5c5.json") as game:
                    game.echo(game.dim().value)
            ```

        Args:
            graph: A connected graph.
            budget: Solver limits, ``SolverBudget()`` by default.
            subset_budget: Limit on the subsets examined by the resolving-set searches.
            callback: Called with the session when the ``with`` block exits.

        """
        super().__init__(graph)
        self.budget = budget or SolverBudget()
        self.subset_budget = subset_budget
        self._callback = callback
        self.Outcome = enumerations.Outcome
        self.StrategyFamily = enumerations.StrategyFamily
        self.HideoutFamily = enumerations.HideoutFamily

    @classmethod
    def from_file(cls, path: Union[str, Path], **kwargs) -> "Session":
        path = Path(path)
        return cls(Graph.from_json(path.read_text(encoding="utf-8"), name=path.stem), **kwargs)

    @classmethod
    def from_tag(cls, tag: str, **kwargs) -> "Session":
        return cls(graph_from_tag(tag), **kwargs)

    @staticmethod
    def echo(*args, **kwargs):
        """Print message."""
        print(*args, **kwargs)

    def dim(self) -> SearchResult:
        return metric_dimension(self.graph, self.subset_budget)

    def psi(self) -> SearchResult:
        return psi(self.graph, self.subset_budget)

    def cop_wins(self, k: int) -> SolveReport:
        return cop_wins(self.graph, k, self.budget)

    def zeta(self, max_cops: Optional[int] = None) -> LocalizationNumber:
        return localization_number(self.graph, max_cops or max(1, self.graph.vertex_count - 1), self.budget)

    def safe_sets(self, probe: Iterable[int]) -> List[KnowledgeState]:
        return safe_sets(self.distances, list(probe))

    def verify_strategy(
        self,
        tag: str,
        p: Optional[int] = None,
        q: Optional[int] = None,
        inner_cops: int = 1,
        max_turns: int = DEFAULT_MAX_TURNS,
        record_trace: bool = False,
    ) -> VerificationReport:
        """Verify the strategy named by ``tag`` against every Robber on the session graph."""
        if tag not in STRATEGY_TAGS:
            raise errors.ParameterError(f"Unknown strategy tag {tag!r}.")
        params = infer_params(self.graph, STRATEGY_TAGS[tag], p, q, inner_cops)
        strategy = make_strategy(self.graph, params, self.budget)
        return verify_cop_strategy(self.graph, strategy, max_turns, record_trace)

    def verify_hideout(self, k: int, family: Union[str, PairFamily], p: Optional[int] = None) -> HideoutVerdict:
        """Check a hideout family given by tag or as explicit pairs."""
        if isinstance(family, str):
            if family not in HIDEOUT_TAGS:
                raise errors.ParameterError(f"Unknown hideout family tag {family!r}.")
            family = make_hideout_family(self.graph, HIDEOUT_TAGS[family], p)
        return verify_hideout_family(self.distances, k, family)

    def product(self, other: Graph) -> "Session":
        """A session on ``graph □ other`` with the same budgets."""
        return Session(cartesian_product(self.graph, other), self.budget, self.subset_budget)

    def bounds(self, other: Graph) -> BoundsReport:
        """Product bounds with the session graph as the first factor."""
        return check_bounds(self.graph, other, self.budget, self.subset_budget)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self._callback:
            try:
                self._callback(self)
            except errors.LocalizationGameError:
                raise
            except Exception as err:
                raise errors.LocalizationGameError(err) from err
