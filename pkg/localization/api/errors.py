class LocalizationGameError(Exception):
    """Base class of every error raised by the localization package."""


class InvalidOrderError(LocalizationGameError):
    """A generator or product was asked for a graph with too few vertices."""


class UnreachableVertexError(LocalizationGameError):
    """Some vertex cannot be reached from another one; the graph is disconnected."""


class VertexIndexError(LocalizationGameError, IndexError):
    """A vertex id lies outside 0..n-1."""


class InvalidProbeError(LocalizationGameError):
    """A probe is empty, repeats a vertex or has the wrong size."""


class TrivialGraphError(LocalizationGameError):
    """Metric dimension and doubly resolving sets need at least two vertices."""


class DegeneratePairError(LocalizationGameError):
    """A hideout pair repeats one vertex."""


class NotAProductError(LocalizationGameError):
    """The graph carries no Cartesian product labeling."""


class ArityError(LocalizationGameError):
    """An operation got the wrong number of graphs."""


class StrategyMismatchError(LocalizationGameError):
    """A scripted strategy was bound to a graph of the wrong shape."""


class UnexpectedStateError(LocalizationGameError):
    """A scripted strategy met a robber class it has no rule for."""


class SoundnessViolationError(LocalizationGameError):
    """A certified result failed its own soundness check."""


class CertificateError(LocalizationGameError):
    """A survival certificate does not match the game it is used for."""


class ParameterError(LocalizationGameError, ValueError):
    """A parameter lies outside its allowed range."""


class GraphFormatError(LocalizationGameError):
    """Malformed graph or pair-family JSON, the message names the offending field."""


class UsageError(LocalizationGameError):
    """The command line could not be parsed."""


__all__ = [
    "LocalizationGameError",
    "InvalidOrderError",
    "UnreachableVertexError",
    "VertexIndexError",
    "InvalidProbeError",
    "TrivialGraphError",
    "DegeneratePairError",
    "NotAProductError",
    "ArityError",
    "StrategyMismatchError",
    "UnexpectedStateError",
    "SoundnessViolationError",
    "CertificateError",
    "ParameterError",
    "GraphFormatError",
    "UsageError",
]
