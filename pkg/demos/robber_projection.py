"""A Robber on C5 □ P3 that hides in one row by replaying its C5 certificate."""

# Import built-in modules
import random

# Import local modules
from localization.api import KnowledgeGameSolver
from localization.api import make_cycle
from localization.api import make_path
from localization.api.strategies import robber_projection_strategy


certificate = KnowledgeGameSolver(make_cycle(5), 1).certificate()
robber = robber_projection_strategy(certificate, make_path(3), row=1)
rng = random.Random(0)
for _ in range(10):
    probe = [rng.randrange(robber.graph.vertex_count)]
    answer = robber.respond(probe)
    print(f"probe {probe} -> class {sorted(answer)}")
