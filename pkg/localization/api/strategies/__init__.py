# Import local modules
from localization.api.strategies._base import CopStrategy
from localization.api.strategies._base import StrategyParams
from localization.api.strategies._base import TorusStrategy
from localization.api.strategies._base import TurnRecord
from localization.api.strategies.c2p_c6 import C2pC6Strategy
from localization.api.strategies.c2p_c6 import strategy_c2p_c6
from localization.api.strategies.cycles_odd import C5C3Strategy
from localization.api.strategies.cycles_odd import C5C5Strategy
from localization.api.strategies.cycles_odd import strategy_c5c3
from localization.api.strategies.cycles_odd import strategy_c5c5
from localization.api.strategies.even_even import EvenEvenStrategy
from localization.api.strategies.even_even import strategy_even_even
from localization.api.strategies.factory import infer_params
from localization.api.strategies.factory import make_strategy
from localization.api.strategies.odd_even import OddEvenStrategy
from localization.api.strategies.odd_even import strategy_odd_even
from localization.api.strategies.product import ProductStrategy
from localization.api.strategies.product import product_strategy
from localization.api.strategies.robber import RobberProjectionPolicy
from localization.api.strategies.robber import make_hideout_family
from localization.api.strategies.robber import probe_type
from localization.api.strategies.robber import robber_family_c2pc4
from localization.api.strategies.robber import robber_family_c3c3
from localization.api.strategies.robber import robber_projection_strategy
from localization.api.strategies.robber import short_cycle_family
from localization.api.strategies.solver_backed import SolverStrategy
from localization.api.strategies.solver_backed import solver_strategy


__all__ = [
    CopStrategy.__name__,
    StrategyParams.__name__,
    TorusStrategy.__name__,
    TurnRecord.__name__,
    C5C5Strategy.__name__,
    C5C3Strategy.__name__,
    OddEvenStrategy.__name__,
    EvenEvenStrategy.__name__,
    C2pC6Strategy.__name__,
    ProductStrategy.__name__,
    SolverStrategy.__name__,
    RobberProjectionPolicy.__name__,
    strategy_c5c5.__name__,
    strategy_c5c3.__name__,
    strategy_odd_even.__name__,
    strategy_even_even.__name__,
    strategy_c2p_c6.__name__,
    product_strategy.__name__,
    solver_strategy.__name__,
    robber_family_c3c3.__name__,
    robber_family_c2pc4.__name__,
    short_cycle_family.__name__,
    make_hideout_family.__name__,
    probe_type.__name__,
    robber_projection_strategy.__name__,
    infer_params.__name__,
    make_strategy.__name__,
]
