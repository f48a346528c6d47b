"""Independent depth-bounded minimax over explicit probe and class-choice trees.

Shares nothing with the solver beyond the distance matrix: no bitsets, no pruning and no rank
sweeps, so agreement between the two is a meaningful cross-check on small graphs.
"""
# Import built-in modules
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet
from typing import List
from typing import Optional

# Import third-party modules
import networkx as nx

# Import local modules
from localization.api.graph_core import Graph
from localization.api.graph_core import make_complete_bipartite
from localization.api.graph_core import make_cycle
from localization.api.graph_core import make_path


def minimax_wins(graph: Graph, k: int, depth: Optional[int] = None) -> bool:
    """Whether ``k`` cops locate the Robber within ``depth`` probes (default ``2 * |V|``)."""
    order = graph.vertex_count
    depth = 2 * order if depth is None else depth
    dist = graph.distances.dist.tolist()
    probes = list(combinations(range(order), min(k, order)))
    neighbourhoods = [frozenset((v, *graph.adjacency[v])) for v in graph.vertices]

    @lru_cache(maxsize=None)
    def wins(state: FrozenSet[int], remaining: int) -> bool:
        if len(state) <= 1:
            return True
        if remaining == 0:
            return False
        for probe in probes:
            classes = {}
            for vertex in state:
                classes.setdefault(tuple(dist[vertex][b] for b in probe), set()).add(vertex)
            if all(
                len(members) == 1
                or wins(frozenset().union(*(neighbourhoods[v] for v in members)), remaining - 1)
                for members in classes.values()
            ):
                return True
        return False

    return wins(frozenset(graph.vertices), depth)


def oracle_corpus() -> List[Graph]:
    """Connected atlas graphs on 4 to 6 vertices, plus C8, P8, the cube Q3 and K_{2,6}."""
    corpus = []
    for graph in nx.graph_atlas_g():
        if 4 <= graph.number_of_nodes() <= 6 and nx.is_connected(graph):
            corpus.append(Graph.from_networkx(graph, name=f"atlas{len(corpus)}"))
    corpus.extend(
        [
            make_cycle(8),
            make_path(8),
            Graph.from_networkx(nx.hypercube_graph(3), name="Q3"),
            make_complete_bipartite(2, 6),
        ]
    )
    return corpus
