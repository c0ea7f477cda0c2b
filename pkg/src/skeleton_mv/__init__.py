"""One-skeleton path model for MV polytopes in type A_n."""
from __future__ import annotations

from .paths import FundamentalPath, SkeletonPath, chain, concat, lower_path, parse_path
from .polytopes import LatticePolytope, hull, minkowski, pol
from .weights import Permutation, RootVector, Weight, alpha, omega

__all__ = [
    "FundamentalPath",
    "LatticePolytope",
    "Permutation",
    "RootVector",
    "SkeletonPath",
    "Weight",
    "alpha",
    "chain",
    "concat",
    "hull",
    "lower_path",
    "minkowski",
    "omega",
    "parse_path",
    "pol",
]

__version__ = "0.1.0"
