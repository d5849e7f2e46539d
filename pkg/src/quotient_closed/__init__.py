"""Weyl group elements and cofinite quotient-closed subcategories of quiver
representations: leftmost subwords, preprojective algebra ideals, and
brute-force verification at small rank."""

from .errors import *  # noqa: F401,F403
from .quiver import Quiver, builtin, validate_quiver
from .weyl import WeylElement, WeylGroup, evaluate_word, parse_word, weyl_group

__all__ = ["Quiver", "builtin", "validate_quiver", "WeylElement", "WeylGroup",
           "evaluate_word", "parse_word", "weyl_group"]
__version__ = "0.1.0"
