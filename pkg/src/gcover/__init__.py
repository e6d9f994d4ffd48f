"""Exact arithmetic on moduli of G-covers of curves."""
from .errors import GcoverError
from .group_core import FiniteGroup, build_group, builtin, load_group

__version__ = "0.1.0"

__all__ = ["FiniteGroup", "GcoverError", "build_group", "builtin", "load_group"]
