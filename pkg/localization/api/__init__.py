"""Python API for the localization game on graphs."""
# Import local modules
from localization.api import constants
from localization.api import strategies
from localization.api._core import GraphObject
from localization.api._core import get_logger
from localization.api._core import set_debug
from localization.api._oracle import minimax_wins
from localization.api._oracle import oracle_corpus
from localization.api._solver import KnowledgeGameSolver
from localization.api._solver import SolverBudget
from localization.api._solver import SurvivalCertificate
from localization.api.enumerations import *  # noqa: F403
from localization.api.errors import *  # noqa: F403
from localization.api.graph_core import DistanceMatrix
from localization.api.graph_core import Graph
from localization.api.graph_core import TorusLabels
from localization.api.graph_core import all_pairs_distances
from localization.api.graph_core import cartesian_product
from localization.api.graph_core import closed_neighborhood
from localization.api.graph_core import graph_from_tag
from localization.api.graph_core import make_complete
from localization.api.graph_core import make_complete_bipartite
from localization.api.graph_core import make_cycle
from localization.api.graph_core import make_path
from localization.api.graph_core import make_torus
from localization.api.graph_core import product_factors
from localization.api.localization_game import HideoutVerdict
from localization.api.localization_game import KnowledgeState
from localization.api.localization_game import LocalizationNumber
from localization.api.localization_game import PairFamily
from localization.api.localization_game import Probe
from localization.api.localization_game import SafeSetForm
from localization.api.localization_game import SolveReport
from localization.api.localization_game import cop_wins
from localization.api.localization_game import is_cop_house
from localization.api.localization_game import localization_number
from localization.api.localization_game import partition_by_probe
from localization.api.localization_game import robber_expand
from localization.api.localization_game import safe_houses
from localization.api.localization_game import safe_sets
from localization.api.localization_game import second_difference
from localization.api.localization_game import verify_hideout_family
from localization.api.resolving import SearchResult
from localization.api.resolving import distance_vector
from localization.api.resolving import doubly_resolves
from localization.api.resolving import fibers_resolved
from localization.api.resolving import is_doubly_resolving_set
from localization.api.resolving import is_resolving_set
from localization.api.resolving import metric_dimension
from localization.api.resolving import project_onto_factor
from localization.api.resolving import psi
from localization.api.verifier import AcceptanceTable
from localization.api.verifier import Battery
from localization.api.verifier import BoundsReport
from localization.api.verifier import VerificationReport
from localization.api.verifier import acceptance_matrix
from localization.api.verifier import check_bounds
from localization.api.verifier import check_bounds_battery
from localization.api.verifier import load_battery
from localization.api.verifier import verify_cop_strategy


__all__ = [  # noqa: F405
    "constants",
    "enumerations",
    "errors",
    "strategies",
    "GraphObject",
    "get_logger",
    "set_debug",
    "Graph",
    "TorusLabels",
    "DistanceMatrix",
    "all_pairs_distances",
    "closed_neighborhood",
    "make_cycle",
    "make_path",
    "make_complete",
    "make_complete_bipartite",
    "cartesian_product",
    "make_torus",
    "product_factors",
    "graph_from_tag",
    "SearchResult",
    "distance_vector",
    "is_resolving_set",
    "is_doubly_resolving_set",
    "doubly_resolves",
    "metric_dimension",
    "psi",
    "project_onto_factor",
    "fibers_resolved",
    "Probe",
    "KnowledgeState",
    "SafeSetForm",
    "PairFamily",
    "SolveReport",
    "LocalizationNumber",
    "HideoutVerdict",
    "partition_by_probe",
    "robber_expand",
    "second_difference",
    "safe_sets",
    "safe_houses",
    "is_cop_house",
    "cop_wins",
    "localization_number",
    "verify_hideout_family",
    "KnowledgeGameSolver",
    "SolverBudget",
    "SurvivalCertificate",
    "minimax_wins",
    "oracle_corpus",
    "VerificationReport",
    "BoundsReport",
    "Battery",
    "AcceptanceTable",
    "verify_cop_strategy",
    "check_bounds",
    "check_bounds_battery",
    "load_battery",
    "acceptance_matrix",
]
