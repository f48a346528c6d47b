"""Lift a one-cop strategy on C7 to C7 □ C5 with a doubly resolving set of C5."""

# Import local modules
from localization.api import make_cycle
from localization.api import psi
from localization.api import verify_cop_strategy
from localization.api.strategies import product_strategy
from localization.api.strategies import solver_strategy


inner = solver_strategy(make_cycle(7), 1)
doubly_resolving = psi(make_cycle(5)).witness
strategy = product_strategy(inner, make_cycle(5), doubly_resolving)
report = verify_cop_strategy(strategy.graph, strategy)
print(f"{strategy.graph.name} with {strategy.cop_count} cops: won={report.won}, probes={report.max_turns}")
