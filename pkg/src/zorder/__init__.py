"""Z- and Laplace-transform toolkit for crisp and fuzzy discrete signals,
rational transfer functions, and transform-based stochastic orders."""

from .errors import InputError, NumericalError, ZOrderError
from .fuzzy import AlphaBetaPair, FuzzyNumber, FuzzySignal, Interval, fuzzy_z_transform
from .orders import LifetimeDistribution, OrderCheckConfig, OrderVerdict
from .rational import RationalTransform, from_geometric
from .signal import DiscreteSignal, SampledContinuousSignal, eval_laplace_transform, eval_z_transform

__version__ = "0.1.0"

__all__ = [
    "AlphaBetaPair",
    "DiscreteSignal",
    "FuzzyNumber",
    "FuzzySignal",
    "InputError",
    "Interval",
    "LifetimeDistribution",
    "NumericalError",
    "OrderCheckConfig",
    "OrderVerdict",
    "RationalTransform",
    "SampledContinuousSignal",
    "ZOrderError",
    "eval_laplace_transform",
    "eval_z_transform",
    "from_geometric",
    "fuzzy_z_transform",
]
