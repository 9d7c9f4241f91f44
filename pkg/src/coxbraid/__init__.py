"""Exact computation in Coxeter groups and Artin groups.

Core objects: ``CoxeterSystem`` (exact reflection representation,
canonical reduced words), signed words with the parabolic retraction,
positive braids with Garside normal forms, spherical-type canonical forms
and conjugacy, and the double-coset / ribbon / reducible-conjugacy
applications built on top of them.
"""

from .coxeter import CoxeterSystem, ReflectionBag, WElement
from .words import format_word, parse_word, retract_word

__all__ = [
    "CoxeterSystem",
    "ReflectionBag",
    "WElement",
    "format_word",
    "parse_word",
    "retract_word",
]

__version__ = "0.1.0"
