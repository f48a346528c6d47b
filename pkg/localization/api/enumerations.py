"""constants type of enum for the localization game."""
# Import built-in modules
from enum import IntEnum


class Outcome(IntEnum):
    CopWins = 1
    RobberWins = 2
    BudgetExceeded = 3


class SearchStatus(IntEnum):
    Found = 1
    BudgetExceeded = 2


class ExitCode(IntEnum):
    Success = 0
    Mismatch = 1
    BudgetExceeded = 2
    UsageError = 3
    InternalError = 4


class Factor(IntEnum):
    G = 1
    H = 2


class StrategyFamily(IntEnum):
    C5C5 = 1
    C5C3 = 2
    OddEven = 3
    EvenEven = 4
    C2pC6 = 5
    Product = 6
    Solver = 7


class HideoutFamily(IntEnum):
    C3C3 = 1
    C2pC4 = 2
    ShortCycle = 3
    AllPairs = 4


class OutputFormat(IntEnum):
    Json = 1
    Text = 2


class ProbeType(IntEnum):
    """How a 2-probe on C_2p x C_4 projects onto the C_4 factor."""

    SingleRow = 1
    AdjacentRows = 2
    OppositeRows = 3


class Verdict(IntEnum):
    """Comparison of an observed value with the expected one."""

    Match = 1
    Mismatch = 2
    Unresolved = 3


__all__ = [
    "Outcome",
    "SearchStatus",
    "ExitCode",
    "Factor",
    "StrategyFamily",
    "HideoutFamily",
    "OutputFormat",
    "ProbeType",
    "Verdict",
]
