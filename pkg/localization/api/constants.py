# Import built-in modules
from pathlib import Path

# Import local modules
from localization.api.enumerations import HideoutFamily
from localization.api.enumerations import OutputFormat
from localization.api.enumerations import StrategyFamily


# Solver budget defaults, sized for graphs of up to 25 vertices probed by 2 cops.
DEFAULT_MAX_STATES = 200_000
DEFAULT_MAX_EVALUATIONS = 50_000_000
DEFAULT_TIME_LIMIT = 600.0
DEFAULT_SEARCH_DEPTH = 3

# Upper limit on the number of subsets examined by the metric dimension and psi searches.
DEFAULT_SUBSET_BUDGET = 2_000_000

# Scripted strategies finish within 4 probes; the rest is headroom for the product wrapper.
DEFAULT_MAX_TURNS = 8

# The time limit is only compared against the clock once per this many probe evaluations.
CLOCK_CHECK_INTERVAL = 1024

DEFAULT_BATTERY = Path(__file__).parent.parent.joinpath("batteries", "default.json")

# The CLI tag to strategy family mappings.
STRATEGY_TAGS = {
    "c5c5": StrategyFamily.C5C5,
    "c5c3": StrategyFamily.C5C3,
    "odd_even": StrategyFamily.OddEven,
    "even_even": StrategyFamily.EvenEven,
    "c2p_c6": StrategyFamily.C2pC6,
    "product": StrategyFamily.Product,
    "solver": StrategyFamily.Solver,
}

# The CLI tag to hideout family mappings.
HIDEOUT_TAGS = {
    "c3c3": HideoutFamily.C3C3,
    "c2pc4": HideoutFamily.C2pC4,
    "short_cycle": HideoutFamily.ShortCycle,
    "all_pairs": HideoutFamily.AllPairs,
}

OUTPUT_FORMATS = {
    "json": OutputFormat.Json,
    "text": OutputFormat.Text,
}

# Separator used in product graph names, e.g. C5□C4.
PRODUCT_SIGN = "□"
