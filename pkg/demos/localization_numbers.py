"""Compute localization numbers of small graphs with the exact solver."""

# Import local modules
from localization import Session
from localization.api import SolverBudget


budget = SolverBudget(time_limit=60)
for tag in ("P7", "C6", "C7", "K4", "K2,3", "C4xC3", "C3xC3"):
    with Session.from_tag(tag, budget=budget) as game:
        number = game.zeta()
        game.echo(f"zeta({game.graph.name}) = {number.value}  dim = {game.dim().value}")
