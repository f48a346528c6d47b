"""Build a Cop strategy from a family tag and its parameters."""
# Import built-in modules
from typing import Optional

# Import local modules
from localization.api._solver import SolverBudget
from localization.api.enumerations import StrategyFamily
from localization.api.errors import StrategyMismatchError
from localization.api.graph_core import Graph
from localization.api.graph_core import product_factors
from localization.api.resolving import psi
from localization.api.strategies._base import CopStrategy
from localization.api.strategies._base import StrategyParams
from localization.api.strategies.c2p_c6 import C2pC6Strategy
from localization.api.strategies.cycles_odd import C5C3Strategy
from localization.api.strategies.cycles_odd import C5C5Strategy
from localization.api.strategies.even_even import EvenEvenStrategy
from localization.api.strategies.odd_even import OddEvenStrategy
from localization.api.strategies.product import ProductStrategy
from localization.api.strategies.solver_backed import SolverStrategy


def infer_params(
    graph: Graph,
    family: StrategyFamily,
    p: Optional[int] = None,
    q: Optional[int] = None,
    inner_cops: int = 1,
) -> StrategyParams:
    """Fill in missing half-orders from the torus labeling of ``graph``."""
    labels = graph.labels
    if labels is not None:
        if family == StrategyFamily.OddEven:
            p = (labels.m - 1) // 2 if p is None else p
            q = labels.n // 2 if q is None else q
        elif family in (StrategyFamily.EvenEven, StrategyFamily.C2pC6):
            p = labels.m // 2 if p is None else p
            q = labels.n // 2 if q is None and family == StrategyFamily.EvenEven else q
    return StrategyParams(family, p, q, inner_cops)


def make_strategy(graph: Graph, params: StrategyParams, budget: Optional[SolverBudget] = None) -> CopStrategy:
    """The strategy ``params`` names, bound to ``graph``.

    Raises:
        StrategyMismatchError: If ``graph`` is not the graph the family plays on.

    """
    family = params.family
    if family == StrategyFamily.C5C5:
        return C5C5Strategy(graph)
    if family == StrategyFamily.C5C3:
        return C5C3Strategy(graph)
    if family == StrategyFamily.OddEven:
        return OddEvenStrategy(params.p, params.q, graph)
    if family == StrategyFamily.EvenEven:
        return EvenEvenStrategy(params.p, params.q, graph)
    if family == StrategyFamily.C2pC6:
        return C2pC6Strategy(params.p, graph)
    if family == StrategyFamily.Product:
        first, second = product_factors(graph)
        doubly_resolving = psi(second).witness
        if doubly_resolving is None:
            raise StrategyMismatchError(f"No doubly resolving set of {second.name} within the subset budget.")
        return ProductStrategy(graph, SolverStrategy(first, params.inner_cops, budget), doubly_resolving)
    return SolverStrategy(graph, params.inner_cops, budget)
