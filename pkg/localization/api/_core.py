"""This class provides the core shared by every graph-bound object."""
# Import built-in modules
from functools import cached_property
from logging import CRITICAL
from logging import DEBUG
from logging import NOTSET
from logging import Formatter
from logging import Logger
from logging import StreamHandler
from logging import getLogger

# Import local modules
from localization.api.graph_core import DistanceMatrix
from localization.api.graph_core import Graph


LOGGER_NAME = "localization"


def get_logger() -> Logger:
    """Logger: The package logger, silent (CRITICAL) until debugging is switched on."""
    logr = getLogger(LOGGER_NAME)
    if logr.level == NOTSET:
        logr.setLevel(CRITICAL)
    return logr


def set_debug(enabled: bool = True) -> Logger:
    """Switch the package logger to DEBUG and attach a stderr handler once."""
    logr = get_logger()
    logr.setLevel(DEBUG if enabled else CRITICAL)
    if enabled and not any(getattr(handler, "_localization", False) for handler in logr.handlers):
        handler = StreamHandler()
        handler.setFormatter(Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        handler._localization = True
        logr.addHandler(handler)
    return logr


class GraphObject:
    """Core API for all objects bound to one graph."""

    def __init__(self, graph: Graph):
        self._graph = graph

    def __str__(self):
        return f"{self.typename} <{self._graph.name}>"

    """
    * Debug Logger
    """

    @cached_property
    def _logger(self) -> Logger:
        """Logger: Logging object for debug output."""
        return get_logger()

    """
    * Properties
    """

    @property
    def typename(self) -> str:
        """str: Current typename."""
        return self.__class__.__name__

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def distances(self) -> DistanceMatrix:
        """DistanceMatrix: All-pairs distances of the bound graph, shared through the graph's cache."""
        return self._graph.distances
