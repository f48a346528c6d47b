"""Play the two-probe Cop strategy on C5 □ C5 against every Robber."""

# Import local modules
from localization import Session


with Session.from_tag("C5xC5") as game:
    report = game.verify_strategy("c5c5", record_trace=True)
    game.echo(f"won: {report.won} in at most {report.max_turns} probes")
    for node in report.trace[:5]:
        game.echo(node.turn, list(node.probe), node.classes[node.chosen] if node.chosen is not None else "located")
