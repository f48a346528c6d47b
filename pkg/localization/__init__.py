# Import local modules
from localization.__version__ import __version__
from localization.session import Session


__all__ = ["Session", "__version__"]
