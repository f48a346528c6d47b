"""Check Robber hideout families that prove lower bounds on tori."""

# Import local modules
from localization import Session


for tag, family, cops in (("C3xC3", "c3c3", 2), ("C6xC4", "c2pc4", 2), ("C5xC5", "short_cycle", 1)):
    with Session.from_tag(tag) as game:
        verdict = game.verify_hideout(cops, family)
        game.echo(f"{game.graph.name}: {family} against {cops} cops certified={verdict.certified}")

with Session.from_tag("C5xC5") as game:
    verdict = game.verify_hideout(2, "all_pairs")
    game.echo(f"all pairs on C5□C5 against 2 cops fail at {verdict.pair} under probe {list(verdict.probe)}")
